#include "uvass/universality.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "uvass/bounds.hpp"
#include "uvass/coverability.hpp"
#include "uvass/ufa.hpp"

namespace uvass {

std::string to_string(UniversalityAnswer a)
{
    switch (a) {
    case UniversalityAnswer::universal: return "universal";
    case UniversalityAnswer::not_universal: return "not-universal";
    case UniversalityAnswer::precondition_violated: return "precondition-violated";
    case UniversalityAnswer::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(EquivalenceAnswer a)
{
    switch (a) {
    case EquivalenceAnswer::equivalent: return "equivalent";
    case EquivalenceAnswer::not_equivalent: return "not-equivalent";
    case EquivalenceAnswer::precondition_violated: return "precondition-violated";
    case EquivalenceAnswer::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

/// omega, when it is small enough to matter for a cap schedule.
std::optional<Integer> reachable_omega(const Vass& v)
{
    if (v.dim() == 0) return std::nullopt;
    Integer n = static_cast<unsigned long>(v.num_states());
    Integer m = norm(v);
    if (omega_log2_estimate(m, v.dim(), n) > 4096.0) return std::nullopt;
    return omega_closed_form(m, v.dim(), n);
}

}  // namespace

std::vector<Integer> default_cap_schedule(const Vass& v, std::size_t max_caps)
{
    // Dimension 0: the abstraction is the automaton itself.
    if (v.dim() == 0) return {Integer(1)};
    auto omega = reachable_omega(v);
    std::vector<Integer> caps;
    Integer cap = 1;
    for (std::size_t i = 0; i < max_caps; ++i, cap *= 2) {
        if (omega && cap >= *omega) {
            caps.push_back(*omega);
            break;
        }
        caps.push_back(cap);
    }
    return caps;
}

std::optional<Word> shortest_rejected_word(const Vass& fa, std::size_t max_subsets)
{
    const std::size_t n = fa.num_states();
    using Subset = std::vector<StateId>;
    auto close = [&](Subset s) {
        std::vector<bool> in(n, false);
        for (StateId x : s) in[x] = true;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (TransitionId t : fa.outgoing(s[i])) {
                const Transition& tr = fa.transition(t);
                if (tr.label.is_epsilon() && !in[tr.dst]) {
                    in[tr.dst] = true;
                    s.push_back(tr.dst);
                }
            }
        std::sort(s.begin(), s.end());
        return s;
    };
    auto rejecting = [&](const Subset& s) {
        return std::none_of(s.begin(), s.end(), [&](StateId x) { return fa.is_final(x); });
    };

    std::set<Subset> seen;
    std::deque<std::pair<Subset, Word>> queue;
    Subset start = close({fa.initial()});
    if (rejecting(start)) return Word{};
    seen.insert(start);
    queue.emplace_back(std::move(start), Word{});
    while (!queue.empty()) {
        auto [subset, word] = std::move(queue.front());
        queue.pop_front();
        for (Symbol a = 0; a < fa.num_symbols(); ++a) {
            Subset next;
            for (StateId x : subset)
                for (TransitionId t : fa.outgoing(x)) {
                    const Transition& tr = fa.transition(t);
                    if (!tr.label.is_epsilon() && tr.label.symbol() == a) next.push_back(tr.dst);
                }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            next = close(std::move(next));
            Word w = word;
            w.push_back(a);
            if (rejecting(next)) return w;
            if (seen.count(next)) continue;
            if (seen.size() >= max_subsets) return std::nullopt;
            seen.insert(next);
            queue.emplace_back(std::move(next), std::move(w));
        }
    }
    return std::nullopt;
}

UniversalityVerdict check_universal(const Vass& v, const UniversalityOptions& options)
{
    UniversalityVerdict verdict;
    std::vector<Integer> schedule =
        options.cap_schedule.empty() ? default_cap_schedule(v, options.max_caps) : options.cap_schedule;
    auto omega = reachable_omega(v);

    for (const Integer& cap : schedule) {
        verdict.caps_tried.push_back(cap);
        Vass fa;
        try {
            ProfileAutomaton pa(v, cap, options.state_budget);
            fa = pa.materialize();
        } catch (const StateBudgetExceeded& e) {
            verdict.answer = UniversalityAnswer::inconclusive;
            verdict.note = e.what();
            return verdict;
        }
        verdict.profile_states = fa.num_states();
        Vass clean = eliminate_epsilon_cycles(fa);
        OneRunVerdict check = exact_one_run_check(clean);
        verdict.basis_size = check.basis_size;

        if (check.exactly_one) {
            verdict.answer = UniversalityAnswer::universal;
            verdict.cap = cap;
            return verdict;
        }
        // Runs through a removed epsilon cycle pump into infinitely many.
        if (check.count >= 2 || fa_accepts(fa, check.word)) {
            verdict.answer = UniversalityAnswer::precondition_violated;
            verdict.witness = check.word;
            verdict.count = check.count;
            verdict.cap = cap;
            verdict.note = check.count >= 2 ? "word with several accepting runs: the VASS is ambiguous"
                                            : "accepting run through an epsilon cycle: the VASS is ambiguous";
            return verdict;
        }

        std::vector<Word> candidates;
        if (fa.num_states() <= options.minimize_limit)
            if (auto shorter = shortest_rejected_word(fa, options.minimize_limit * 10)) candidates.push_back(*shorter);
        candidates.push_back(check.word);
        for (const Word& w : candidates) {
            if (!membership(v, w)) {
                verdict.answer = UniversalityAnswer::not_universal;
                verdict.witness = w;
                verdict.count = 0;
                verdict.cap = cap;
                return verdict;
            }
        }
        if (omega && cap >= *omega) {
            verdict.note = "abstraction at omega rejects a word the VASS accepts; input is likely ambiguous";
            break;
        }
    }
    verdict.answer = UniversalityAnswer::inconclusive;
    if (verdict.note.empty()) verdict.note = "cap schedule exhausted below omega";
    return verdict;
}

Vass union_with_complement(const Vass& v, const Vass& dfa)
{
    if (dfa.dim() != 0) throw ModelError("regular language must be given as a dimension-0 automaton");
    std::set<std::string> va(v.alphabet().begin(), v.alphabet().end());
    std::set<std::string> da(dfa.alphabet().begin(), dfa.alphabet().end());
    if (va != da) throw ModelError("VASS and DFA alphabets differ");
    for (StateId s = 0; s < dfa.num_states(); ++s) {
        std::vector<int> seen(dfa.num_symbols(), 0);
        for (TransitionId t : dfa.outgoing(s)) {
            const Transition& tr = dfa.transition(t);
            if (tr.label.is_epsilon()) throw ModelError("DFA has an epsilon transition");
            if (++seen[tr.label.symbol()] > 1)
                throw ModelError("DFA is not deterministic in state " + dfa.state_name(s));
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw ModelError("DFA is not complete in state " + dfa.state_name(s));
    }

    Vass u(v.dim());
    for (const auto& a : v.alphabet()) u.add_symbol(a);
    StateId init = u.add_state("init");
    u.set_initial(init);
    std::vector<StateId> vmap, dmap;
    for (StateId s = 0; s < v.num_states(); ++s) {
        vmap.push_back(u.add_state("v_" + v.state_name(s)));
        u.set_final(vmap.back(), v.is_final(s));
    }
    for (StateId s = 0; s < dfa.num_states(); ++s) {
        dmap.push_back(u.add_state("r_" + dfa.state_name(s)));
        u.set_final(dmap.back(), !dfa.is_final(s));
    }
    const Vector zero(v.dim(), 0);
    u.add_transition(init, Label::epsilon(), zero, vmap[v.initial()]);
    u.add_transition(init, Label::epsilon(), zero, dmap[dfa.initial()]);
    for (const auto& t : v.transitions()) u.add_transition(vmap[t.src], t.label, t.effect, vmap[t.dst]);
    for (const auto& t : dfa.transitions()) {
        Symbol a = *u.find_symbol(dfa.symbol_name(t.label.symbol()));
        u.add_transition(dmap[t.src], Label(a), zero, dmap[t.dst]);
    }
    return u;
}

EquivalenceVerdict check_equivalence_with_regular(const Vass& v, const Vass& dfa, const UniversalityOptions& options)
{
    Vass u = union_with_complement(v, dfa);
    auto in_regular = [&](const Word& w) {
        Word mapped;
        for (Symbol a : w) mapped.push_back(*dfa.find_symbol(v.symbol_name(a)));
        return fa_accepts(dfa, mapped);
    };

    EquivalenceVerdict verdict;
    verdict.ambiguity = check_unambiguous(u);
    const AmbiguityVerdict& amb = *verdict.ambiguity;
    if (!amb.unambiguous) {
        if (!amb.word) {
            verdict.answer = EquivalenceAnswer::inconclusive;
            verdict.reason = "union is ambiguous but no witness was found within the node cap";
            return verdict;
        }
        const Word& w = *amb.word;
        if (membership(v, w) && !in_regular(w)) {
            verdict.answer = EquivalenceAnswer::not_equivalent;
            verdict.witness = w;
            verdict.reason = "word accepted by the VASS but not in the regular language";
        } else {
            verdict.answer = EquivalenceAnswer::precondition_violated;
            verdict.witness = w;
            verdict.reason = "the VASS is ambiguous";
        }
        return verdict;
    }

    verdict.universality = check_universal(u, options);
    const UniversalityVerdict& uni = *verdict.universality;
    switch (uni.answer) {
    case UniversalityAnswer::universal:
        verdict.answer = EquivalenceAnswer::equivalent;
        break;
    case UniversalityAnswer::not_universal:
        verdict.answer = EquivalenceAnswer::not_equivalent;
        verdict.witness = uni.witness;
        verdict.reason = "word in the regular language but not accepted by the VASS";
        break;
    case UniversalityAnswer::precondition_violated:
        verdict.answer = EquivalenceAnswer::precondition_violated;
        verdict.witness = uni.witness;
        verdict.reason = uni.note;
        break;
    case UniversalityAnswer::inconclusive:
        verdict.answer = EquivalenceAnswer::inconclusive;
        verdict.reason = uni.note;
        break;
    }
    return verdict;
}

}  // namespace uvass
