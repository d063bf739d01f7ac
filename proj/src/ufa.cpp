#include "uvass/ufa.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace uvass {

namespace {

void require_finite(const Vass& fa)
{
    if (fa.dim() != 0) throw std::invalid_argument("expected a finite automaton (dimension 0)");
}

/// Strongly connected components of the epsilon graph (iterative Tarjan).
std::vector<std::size_t> epsilon_components(const Vass& fa)
{
    const std::size_t n = fa.num_states();
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::vector<StateId>> succ(n);
    for (const auto& t : fa.transitions())
        if (t.label.is_epsilon()) succ[t.src].push_back(t.dst);

    std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
    std::vector<bool> on_stack(n, false);
    std::vector<StateId> stack;
    std::vector<std::pair<StateId, std::size_t>> call;
    std::size_t counter = 0, components = 0;

    for (StateId root = 0; root < n; ++root) {
        if (index[root] != kUnset) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [s, next] = call.back();
            if (next == 0 && index[s] == kUnset) {
                index[s] = low[s] = counter++;
                stack.push_back(s);
                on_stack[s] = true;
            }
            if (next < succ[s].size()) {
                StateId t = succ[s][next++];
                if (index[t] == kUnset) {
                    call.emplace_back(t, 0);
                } else if (on_stack[t]) {
                    low[s] = std::min(low[s], index[t]);
                }
                continue;
            }
            if (low[s] == index[s]) {
                StateId x;
                do {
                    x = stack.back();
                    stack.pop_back();
                    on_stack[x] = false;
                    comp[x] = components;
                } while (x != s);
                ++components;
            }
            StateId done = s;
            call.pop_back();
            if (!call.empty()) {
                StateId parent = call.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
        }
    }
    return comp;
}

bool on_epsilon_cycle(const Transition& t, const std::vector<std::size_t>& comp)
{
    return t.label.is_epsilon() && comp[t.src] == comp[t.dst];
}

/// Run-count propagation for an epsilon-cycle-free automaton.
class PathCounter {
public:
    explicit PathCounter(const Vass& fa) : fa_(fa), by_letter_(fa.num_symbols())
    {
        require_finite(fa);
        const std::size_t n = fa.num_states();
        std::vector<std::vector<StateId>> eps(n);
        std::vector<std::size_t> indegree(n, 0);
        for (const auto& t : fa.transitions()) {
            if (t.label.is_epsilon()) {
                eps[t.src].push_back(t.dst);
                ++indegree[t.dst];
            } else {
                by_letter_[t.label.symbol()].emplace_back(t.src, t.dst);
            }
        }
        std::deque<StateId> ready;
        for (StateId s = 0; s < n; ++s)
            if (indegree[s] == 0) ready.push_back(s);
        while (!ready.empty()) {
            StateId s = ready.front();
            ready.pop_front();
            order_.push_back(s);
            for (StateId t : eps[s]) {
                eps_edges_.emplace_back(s, t);
                if (--indegree[t] == 0) ready.push_back(t);
            }
        }
        if (order_.size() != n) throw std::invalid_argument("automaton has epsilon cycles");
    }

    std::vector<Integer> initial() const
    {
        std::vector<Integer> v(fa_.num_states(), 0);
        v[fa_.initial()] = 1;
        close(v);
        return v;
    }

    std::vector<Integer> read(const std::vector<Integer>& v, Symbol a) const
    {
        std::vector<Integer> out(v.size(), 0);
        for (auto [src, dst] : by_letter_[a])
            if (v[src] != 0) out[dst] += v[src];
        close(out);
        return out;
    }

    Integer accepted(const std::vector<Integer>& v) const
    {
        Integer total = 0;
        for (StateId s = 0; s < v.size(); ++s)
            if (fa_.is_final(s)) total += v[s];
        return total;
    }

private:
    // eps_edges_ is grouped by source in topological order.
    void close(std::vector<Integer>& v) const
    {
        for (auto [src, dst] : eps_edges_)
            if (v[src] != 0) v[dst] += v[src];
    }

    const Vass& fa_;
    std::vector<std::vector<std::pair<StateId, StateId>>> by_letter_;
    std::vector<StateId> order_;
    std::vector<std::pair<StateId, StateId>> eps_edges_;
};

}  // namespace

Vass eliminate_epsilon_cycles(const Vass& fa)
{
    require_finite(fa);
    auto comp = epsilon_components(fa);
    Vass out(0);
    for (const auto& a : fa.alphabet()) out.add_symbol(a);
    for (StateId s = 0; s < fa.num_states(); ++s) {
        out.add_state(fa.state_name(s));
        out.set_final(s, fa.is_final(s));
    }
    out.set_initial(fa.initial());
    for (const auto& t : fa.transitions())
        if (!on_epsilon_cycle(t, comp)) out.add_transition(t.src, t.label, t.effect, t.dst);
    return out;
}

bool has_epsilon_cycles(const Vass& fa)
{
    require_finite(fa);
    auto comp = epsilon_components(fa);
    return std::any_of(fa.transitions().begin(), fa.transitions().end(),
                       [&](const Transition& t) { return on_epsilon_cycle(t, comp); });
}

Integer count_word_runs_fa(const Vass& fa, const Word& w)
{
    PathCounter counter(fa);
    auto v = counter.initial();
    for (Symbol a : w) v = counter.read(v, a);
    return counter.accepted(v);
}

bool fa_accepts(const Vass& fa, const Word& w)
{
    require_finite(fa);
    const std::size_t n = fa.num_states();
    auto close = [&](std::vector<bool>& set) {
        std::deque<StateId> work;
        for (StateId s = 0; s < n; ++s)
            if (set[s]) work.push_back(s);
        while (!work.empty()) {
            StateId s = work.front();
            work.pop_front();
            for (TransitionId t : fa.outgoing(s)) {
                const Transition& tr = fa.transition(t);
                if (tr.label.is_epsilon() && !set[tr.dst]) {
                    set[tr.dst] = true;
                    work.push_back(tr.dst);
                }
            }
        }
    };
    std::vector<bool> current(n, false);
    current[fa.initial()] = true;
    close(current);
    for (Symbol a : w) {
        std::vector<bool> next(n, false);
        for (StateId s = 0; s < n; ++s) {
            if (!current[s]) continue;
            for (TransitionId t : fa.outgoing(s)) {
                const Transition& tr = fa.transition(t);
                if (!tr.label.is_epsilon() && tr.label.symbol() == a) next[tr.dst] = true;
            }
        }
        close(next);
        current = std::move(next);
    }
    for (StateId s = 0; s < n; ++s)
        if (current[s] && fa.is_final(s)) return true;
    return false;
}

std::vector<mpq_class> Basis::reduce(const std::vector<Integer>& v) const
{
    if (v.size() != width_) throw std::invalid_argument("basis vector has the wrong width");
    std::vector<mpq_class> r(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const mpq_class factor = r[pivots_[i]];
        if (factor == 0) continue;
        const auto& row = rows_[i];
        for (std::size_t k = 0; k < width_; ++k)
            if (row[k] != 0) r[k] -= factor * row[k];
    }
    return r;
}

bool Basis::in_span(const std::vector<Integer>& v) const
{
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const mpq_class& x) { return x == 0; });
}

bool Basis::add_if_independent(const std::vector<Integer>& v)
{
    auto r = reduce(v);
    auto it = std::find_if(r.begin(), r.end(), [](const mpq_class& x) { return x != 0; });
    if (it == r.end()) return false;
    std::size_t pivot = static_cast<std::size_t>(it - r.begin());
    const mpq_class lead = r[pivot];
    for (auto& x : r) x /= lead;
    // Keep the echelon form reduced: clear the new pivot from older rows.
    for (auto& row : rows_) {
        const mpq_class factor = row[pivot];
        if (factor == 0) continue;
        for (std::size_t k = 0; k < width_; ++k)
            if (r[k] != 0) row[k] -= factor * r[k];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(pivot);
    return true;
}

OneRunVerdict exact_one_run_check(const Vass& fa)
{
    PathCounter counter(fa);
    const std::size_t n = fa.num_states();
    Basis basis(n + 1);
    OneRunVerdict verdict;

    struct Item {
        Word word;
        std::vector<Integer> counts;
    };
    std::deque<Item> queue;

    // True if exploration must stop (counterexample found).
    auto process = [&](Word word, std::vector<Integer> counts) {
        ++verdict.words_explored;
        Integer acc = counter.accepted(counts);
        if (acc != 1) {
            verdict.exactly_one = false;
            verdict.word = std::move(word);
            verdict.count = acc;
            return true;
        }
        std::vector<Integer> extended = counts;
        extended.push_back(1);
        if (basis.add_if_independent(extended)) queue.push_back(Item{std::move(word), std::move(counts)});
        return false;
    };

    if (!process(Word{}, counter.initial())) {
        while (!queue.empty()) {
            Item item = std::move(queue.front());
            queue.pop_front();
            bool stop = false;
            for (Symbol a = 0; a < fa.num_symbols() && !stop; ++a) {
                Word next = item.word;
                next.push_back(a);
                stop = process(std::move(next), counter.read(item.counts, a));
            }
            if (stop) break;
        }
    }
    verdict.basis_size = basis.size();
    return verdict;
}

}  // namespace uvass
