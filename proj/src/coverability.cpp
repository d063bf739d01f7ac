#include "uvass/coverability.hpp"

#include <algorithm>
#include <deque>

namespace uvass {

bool UpwardBasis::insert(const Configuration& c)
{
    auto& elems = minimal_.at(c.state);
    for (const auto& e : elems)
        if (dominated(e, c.counters)) return false;
    std::erase_if(elems, [&](const Vector& e) { return dominated(c.counters, e); });
    elems.push_back(c.counters);
    return true;
}

bool UpwardBasis::covers(const Configuration& c) const
{
    for (const auto& e : minimal_.at(c.state))
        if (dominated(e, c.counters)) return true;
    return false;
}

std::size_t UpwardBasis::size() const
{
    std::size_t total = 0;
    for (const auto& m : minimal_) total += m.size();
    return total;
}

UpwardBasis final_states_basis(const Vass& v)
{
    UpwardBasis basis(v.num_states());
    for (StateId f : v.finals()) basis.insert(Configuration{f, Vector(v.dim(), 0)});
    return basis;
}

bool backward_coverable(const Vass& v, const UpwardBasis& targets, const Configuration& start)
{
    if (targets.covers(start)) return true;

    std::vector<std::vector<TransitionId>> incoming(v.num_states());
    for (TransitionId t = 0; t < v.num_transitions(); ++t) incoming[v.transition(t).dst].push_back(t);

    UpwardBasis basis = targets;
    std::deque<Configuration> work;
    for (StateId s = 0; s < basis.num_states(); ++s)
        for (const auto& e : basis.minimal(s)) work.push_back(Configuration{s, e});

    const std::size_t d = v.dim();
    while (!work.empty()) {
        Configuration c = std::move(work.front());
        work.pop_front();
        // Superseded elements have been replaced by smaller ones whose
        // predecessors dominate these.
        const auto& current = basis.minimal(c.state);
        if (std::find(current.begin(), current.end(), c.counters) == current.end()) continue;

        for (TransitionId t : incoming[c.state]) {
            const Transition& tr = v.transition(t);
            Configuration pred{tr.src, Vector(d)};
            for (std::size_t i = 0; i < d; ++i) {
                Integer need = c.counters[i] - tr.effect[i];
                pred.counters[i] = need > 0 ? need : Integer(0);
            }
            if (!basis.insert(pred)) continue;
            if (pred.state == start.state && dominated(pred.counters, start.counters)) return true;
            work.push_back(std::move(pred));
        }
    }
    return false;
}

std::optional<Run> forward_accepting_run(const Vass& v, const Configuration& start,
                                         std::size_t node_cap, ForwardSearchStats* stats)
{
    struct Node {
        Configuration config;
        std::size_t parent;
        TransitionId via;
    };
    constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

    std::vector<Node> nodes;
    std::vector<std::vector<Vector>> visited(v.num_states());
    auto seen = [&](const Configuration& c) {
        for (const auto& e : visited[c.state])
            if (dominated(c.counters, e)) return true;
        return false;
    };
    auto extract = [&](std::size_t i) {
        Run run;
        for (; nodes[i].parent != kRoot; i = nodes[i].parent) run.push_back(nodes[i].via);
        std::reverse(run.begin(), run.end());
        return run;
    };

    ForwardSearchStats local;
    ForwardSearchStats& st = stats ? *stats : local;
    st = ForwardSearchStats{};

    nodes.push_back(Node{start, kRoot, 0});
    visited[start.state].push_back(start.counters);
    const std::size_t d = v.dim();
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        if (v.is_final(nodes[head].config.state)) {
            st.nodes = nodes.size();
            return extract(head);
        }
        for (TransitionId t : v.outgoing(nodes[head].config.state)) {
            const Transition& tr = v.transition(t);
            Configuration next{tr.dst, nodes[head].config.counters};
            bool ok = true;
            for (std::size_t i = 0; i < d && ok; ++i) {
                next.counters[i] += tr.effect[i];
                ok = next.counters[i] >= 0;
            }
            if (!ok || seen(next)) continue;
            if (nodes.size() >= node_cap) {
                st.nodes = nodes.size();
                st.cap_hit = true;
                return std::nullopt;
            }
            visited[next.state].push_back(next.counters);
            nodes.push_back(Node{std::move(next), head, t});
        }
    }
    st.nodes = nodes.size();
    return std::nullopt;
}

EmptinessResult emptiness(const Vass& v, std::size_t node_cap)
{
    EmptinessResult result;
    result.empty = !backward_coverable(v, final_states_basis(v), v.initial_configuration());
    if (result.empty) return result;
    ForwardSearchStats stats;
    result.witness = forward_accepting_run(v, v.initial_configuration(), node_cap, &stats);
    result.nodes = stats.nodes;
    result.witness_omitted = !result.witness.has_value();
    return result;
}

Vass line_product(const Vass& v, const Word& w, std::vector<TransitionId>* origin)
{
    const std::size_t positions = w.size() + 1;
    Vass p(v.dim());
    for (const auto& a : v.alphabet()) p.add_symbol(a);
    for (StateId q = 0; q < v.num_states(); ++q)
        for (std::size_t i = 0; i < positions; ++i) p.add_state("s" + std::to_string(q) + "_" + std::to_string(i));
    auto id = [&](StateId q, std::size_t i) { return static_cast<StateId>(q * positions + i); };
    p.set_initial(id(v.initial(), 0));
    for (StateId f : v.finals()) p.set_final(id(f, w.size()));
    if (origin) origin->clear();
    for (TransitionId t = 0; t < v.num_transitions(); ++t) {
        const Transition& tr = v.transition(t);
        for (std::size_t i = 0; i < positions; ++i) {
            if (tr.label.is_epsilon()) {
                p.add_transition(id(tr.src, i), tr.label, tr.effect, id(tr.dst, i));
            } else if (i < w.size() && w[i] == tr.label.symbol()) {
                p.add_transition(id(tr.src, i), tr.label, tr.effect, id(tr.dst, i + 1));
            } else {
                continue;
            }
            if (origin) origin->push_back(t);
        }
    }
    return p;
}

bool accepts_from(const Vass& v, const Word& w, const Configuration& start)
{
    Vass p = line_product(v, w);
    Configuration s{static_cast<StateId>(start.state * (w.size() + 1)), start.counters};
    return backward_coverable(p, final_states_basis(p), s);
}

bool membership(const Vass& v, const Word& w)
{
    return accepts_from(v, w, v.initial_configuration());
}

}  // namespace uvass
