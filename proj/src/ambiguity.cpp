#include "uvass/ambiguity.hpp"

#include <algorithm>

#include "uvass/semantics.hpp"

namespace uvass {

namespace {

Vector concat(const Vector& a, const Vector& b)
{
    Vector out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

std::pair<Run, Run> DivergenceProduct::project(const Run& run) const
{
    std::pair<Run, Run> out;
    for (TransitionId t : run) {
        const ProductMove& m = moves.at(t);
        if (m.first) out.first.push_back(*m.first);
        if (m.second) out.second.push_back(*m.second);
    }
    return out;
}

DivergenceProduct build_divergence_product(const Vass& v)
{
    const std::size_t n = v.num_states();
    const std::size_t d = v.dim();
    const Vector zero(d, 0);

    DivergenceProduct dp;
    Vass& p = dp.product;
    p = Vass(2 * d);
    for (const auto& a : v.alphabet()) p.add_symbol(a);

    for (StateId q = 0; q < n; ++q) {
        p.add_state("s" + std::to_string(q));
        dp.states.push_back({ProductPhase::same, q, q});
    }
    auto pair_name = [](char tag, StateId a, StateId b) {
        return std::string(1, tag) + std::to_string(a) + "_" + std::to_string(b);
    };
    for (StateId a = 0; a < n; ++a)
        for (StateId b = 0; b < n; ++b) {
            StateId id = p.add_state(pair_name('d', a, b));
            dp.states.push_back({ProductPhase::differed, a, b});
            p.set_final(id, v.is_final(a) && v.is_final(b));
        }
    for (StateId a = 0; a < n; ++a)
        for (StateId b = 0; b < n; ++b) {
            StateId id = p.add_state(pair_name('w', a, b));
            dp.states.push_back({ProductPhase::waiting, a, b});
            p.set_final(id, v.is_final(a) && v.is_final(b));
        }
    auto same = [](StateId q) { return q; };
    auto differed = [n](StateId a, StateId b) { return static_cast<StateId>(n + a * n + b); };
    auto waiting = [n](StateId a, StateId b) { return static_cast<StateId>(n + n * n + a * n + b); };
    p.set_initial(same(v.initial()));

    auto add = [&](StateId src, Label label, Vector effect, StateId dst, ProductMove move) {
        p.add_transition(src, label, std::move(effect), dst);
        dp.moves.push_back(move);
    };

    for (StateId q = 0; q < n; ++q) {
        const auto& out = v.outgoing(q);
        // Common prefix.
        for (TransitionId t : out) {
            const Transition& tr = v.transition(t);
            add(same(q), tr.label, concat(tr.effect, tr.effect), same(tr.dst), {t, t});
        }
        for (TransitionId t1 : out) {
            const Transition& a = v.transition(t1);
            // Run 1 steps on epsilon, run 2 reads a letter next or has ended.
            if (a.label.is_epsilon())
                add(same(q), Label::epsilon(), concat(a.effect, zero), waiting(a.dst, q), {t1, std::nullopt});
            // Two distinct transitions with the same label.
            for (TransitionId t2 : out) {
                if (t2 <= t1) continue;
                const Transition& b = v.transition(t2);
                if (a.label != b.label) continue;
                add(same(q), a.label, concat(a.effect, b.effect), differed(a.dst, b.dst), {t1, t2});
            }
        }
    }

    for (StateId q1 = 0; q1 < n; ++q1)
        for (StateId q2 = 0; q2 < n; ++q2) {
            for (TransitionId t1 : v.outgoing(q1)) {
                const Transition& a = v.transition(t1);
                if (a.label.is_epsilon()) {
                    add(differed(q1, q2), Label::epsilon(), concat(a.effect, zero), differed(a.dst, q2),
                        {t1, std::nullopt});
                    add(waiting(q1, q2), Label::epsilon(), concat(a.effect, zero), waiting(a.dst, q2),
                        {t1, std::nullopt});
                    continue;
                }
                for (TransitionId t2 : v.outgoing(q2)) {
                    const Transition& b = v.transition(t2);
                    if (b.label != a.label) continue;
                    add(differed(q1, q2), a.label, concat(a.effect, b.effect), differed(a.dst, b.dst), {t1, t2});
                    add(waiting(q1, q2), a.label, concat(a.effect, b.effect), differed(a.dst, b.dst), {t1, t2});
                }
            }
            for (TransitionId t2 : v.outgoing(q2)) {
                const Transition& b = v.transition(t2);
                if (b.label.is_epsilon())
                    add(differed(q1, q2), Label::epsilon(), concat(zero, b.effect), differed(q1, b.dst),
                        {std::nullopt, t2});
            }
        }
    return dp;
}

AmbiguityVerdict check_unambiguous(const Vass& v, std::size_t node_cap)
{
    DivergenceProduct dp = build_divergence_product(v);
    AmbiguityVerdict verdict;
    verdict.product_states = dp.product.num_states();

    EmptinessResult e = emptiness(dp.product, node_cap);
    verdict.nodes = e.nodes;
    verdict.unambiguous = e.empty;
    if (e.empty) return verdict;
    if (!e.witness) {
        verdict.witness_omitted = true;
        return verdict;
    }

    auto [run1, run2] = dp.project(*e.witness);
    Word w = run_word(dp.product, *e.witness);
    // Prefer the canonical pair (shortest, then least TransitionId order).
    auto runs = shortest_accepting_runs(v, w, v.initial_configuration(), 2, std::max(run1.size(), run2.size()));
    if (runs.size() < 2) runs = {run1, run2};
    verdict.word = std::move(w);
    verdict.first = std::move(runs[0]);
    verdict.second = std::move(runs[1]);
    return verdict;
}

}  // namespace uvass
