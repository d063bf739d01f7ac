#include "uvass/semantics.hpp"

#include <algorithm>
#include <map>

#include "uvass/coverability.hpp"

namespace uvass {

RunError::RunError(std::size_t step, std::optional<std::size_t> coordinate, const std::string& message)
    : std::runtime_error("step " + std::to_string(step) + ": " + message), step_(step), coordinate_(coordinate)
{
}

Configuration apply_run(const Vass& v, const Configuration& start, const Run& run)
{
    if (start.counters.size() != v.dim()) throw RunError(0, std::nullopt, "start configuration has wrong arity");
    Configuration c = start;
    for (std::size_t j = 0; j < run.size(); ++j) {
        if (run[j] >= v.num_transitions()) throw RunError(j + 1, std::nullopt, "unknown transition");
        const Transition& t = v.transition(run[j]);
        if (t.src != c.state)
            throw RunError(j + 1, std::nullopt,
                           "transition leaves " + v.state_name(t.src) + " but the run is in " + v.state_name(c.state));
        for (std::size_t i = 0; i < v.dim(); ++i) {
            c.counters[i] += t.effect[i];
            if (c.counters[i] < 0)
                throw RunError(j + 1, i, "counter " + std::to_string(i) + " becomes negative");
        }
        c.state = t.dst;
    }
    return c;
}

Word run_word(const Vass& v, const Run& run)
{
    Word w;
    for (TransitionId t : run)
        if (!v.transition(t).label.is_epsilon()) w.push_back(v.transition(t).label.symbol());
    return w;
}

bool is_accepting_run(const Vass& v, const Configuration& start, const Run& run)
{
    try {
        return v.is_final(apply_run(v, start, run).state);
    } catch (const RunError&) {
        return false;
    }
}

std::size_t default_eps_budget(const Vass& v, const Word& w, const Configuration& start)
{
    Integer top = 0;
    for (const auto& c : start.counters) top = std::max(top, c);
    Integer n = static_cast<unsigned long>(std::max<std::size_t>(v.num_states(), 1));
    Integer horizon = static_cast<unsigned long>(w.size()) + n;
    Integer budget = n * (1 + top + norm(v) * horizon);
    const Integer cap = 1'000'000;
    if (budget > cap) budget = cap;
    return budget.get_ui();
}

namespace {

bool step(const Transition& t, const Configuration& from, Configuration& to)
{
    to.state = t.dst;
    to.counters = from.counters;
    for (std::size_t i = 0; i < to.counters.size(); ++i) {
        to.counters[i] += t.effect[i];
        if (to.counters[i] < 0) return false;
    }
    return true;
}

class RunCounter {
public:
    RunCounter(const Vass& v, const Word& w, std::size_t budget, std::size_t keep)
        : v_(v), w_(w), budget_(budget), keep_(keep)
    {
        for (std::size_t i = 0; i <= w.size(); ++i) suffixes_.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    }

    RunSearch run(const Configuration& start)
    {
        segment_ = {start};
        Integer total = visit(0, start);
        RunSearch out;
        out.count = unbounded_ ? RunCount::infinite() : RunCount{false, total};
        out.runs = std::move(runs_);
        return out;
    }

private:
    bool completes(std::size_t pos, const Configuration& c)
    {
        auto key = std::make_pair(pos, c);
        auto it = completes_.find(key);
        if (it != completes_.end()) return it->second;
        bool ok = accepts_from(v_, suffixes_[pos], c);
        completes_.emplace(std::move(key), ok);
        return ok;
    }

    Integer visit(std::size_t pos, const Configuration& c)
    {
        Integer total = 0;
        if (pos == w_.size() && v_.is_final(c.state)) {
            total += 1;
            if (runs_.size() < keep_) runs_.push_back(current_);
        }
        Configuration next;
        for (TransitionId t : v_.outgoing(c.state)) {
            if (unbounded_) return 0;
            const Transition& tr = v_.transition(t);
            if (tr.label.is_epsilon()) {
                if (!step(tr, c, next)) continue;
                bool pumps = std::any_of(segment_.begin(), segment_.end(), [&](const Configuration& e) {
                    return e.state == next.state && dominated(e.counters, next.counters);
                });
                if (pumps) {
                    if (completes(pos, next)) unbounded_ = true;
                    continue;
                }
                if (segment_.size() > budget_)
                    throw BudgetExhausted("epsilon budget of " + std::to_string(budget_) + " steps exhausted");
                segment_.push_back(next);
                current_.push_back(t);
                total += visit(pos, next);
                current_.pop_back();
                segment_.pop_back();
            } else if (pos < w_.size() && tr.label.symbol() == w_[pos]) {
                if (!step(tr, c, next)) continue;
                std::vector<Configuration> saved = std::move(segment_);
                segment_ = {next};
                current_.push_back(t);
                total += visit(pos + 1, next);
                current_.pop_back();
                segment_ = std::move(saved);
            }
        }
        return total;
    }

    const Vass& v_;
    const Word& w_;
    std::size_t budget_;
    std::size_t keep_;
    std::vector<Word> suffixes_;
    std::vector<Configuration> segment_;
    Run current_;
    std::vector<Run> runs_;
    bool unbounded_ = false;
    std::map<std::pair<std::size_t, Configuration>, bool> completes_;
};

}  // namespace

RunSearch search_accepting_runs(const Vass& v, const Word& w, const Configuration& start,
                                std::size_t eps_budget, std::size_t keep_runs)
{
    if (eps_budget == 0) eps_budget = default_eps_budget(v, w, start);
    RunCounter counter(v, w, eps_budget, keep_runs);
    return counter.run(start);
}

RunCount count_accepting_runs(const Vass& v, const Word& w, const Configuration& start, std::size_t eps_budget)
{
    return search_accepting_runs(v, w, start, eps_budget, 0).count;
}

std::vector<Run> shortest_accepting_runs(const Vass& v, const Word& w, const Configuration& start,
                                         std::size_t limit, std::size_t max_length)
{
    std::vector<Run> found;
    Run current;
    // Depth-first over runs of exactly `length` steps, in TransitionId order.
    auto dfs = [&](auto&& self, std::size_t pos, const Configuration& c, std::size_t length) -> void {
        if (found.size() >= limit) return;
        if (current.size() == length) {
            if (pos == w.size() && v.is_final(c.state)) found.push_back(current);
            return;
        }
        if (length - current.size() < w.size() - pos) return;
        Configuration next;
        for (TransitionId t : v.outgoing(c.state)) {
            const Transition& tr = v.transition(t);
            bool letter = !tr.label.is_epsilon();
            if (letter && (pos >= w.size() || tr.label.symbol() != w[pos])) continue;
            if (!step(tr, c, next)) continue;
            current.push_back(t);
            self(self, pos + (letter ? 1 : 0), next, length);
            current.pop_back();
            if (found.size() >= limit) return;
        }
    };
    for (std::size_t length = w.size(); length <= max_length && found.size() < limit; ++length)
        dfs(dfs, 0, start, length);
    return found;
}

std::optional<Word> brute_universal_up_to(const Vass& v, std::size_t max_len, std::size_t eps_budget)
{
    std::optional<Word> missing;
    const Configuration start = v.initial_configuration();
    for_each_word(v.num_symbols(), max_len, [&](const Word& w) {
        RunCount c = count_accepting_runs(v, w, start, eps_budget);
        if (!c.unbounded && c.value == 0) {
            missing = w;
            return true;
        }
        return false;
    });
    return missing;
}

std::optional<AmbiguityWitness> brute_unambiguous_up_to(const Vass& v, std::size_t max_len, std::size_t eps_budget)
{
    std::optional<AmbiguityWitness> witness;
    const Configuration start = v.initial_configuration();
    for_each_word(v.num_symbols(), max_len, [&](const Word& w) {
        RunSearch s = search_accepting_runs(v, w, start, eps_budget, 2);
        if (!s.count.at_least(2)) return false;
        AmbiguityWitness out{w, s.count, std::nullopt, std::nullopt};
        std::size_t max_length = w.size() + (w.size() + 1) * (2 * v.num_states() + 2);
        if (s.runs.size() >= 2)
            max_length = std::max(s.runs[0].size(), s.runs[1].size());
        auto runs = shortest_accepting_runs(v, w, start, 2, max_length);
        if (runs.size() < 2 && s.runs.size() >= 2) runs = s.runs;
        if (runs.size() >= 2) {
            out.first = runs[0];
            out.second = runs[1];
        }
        witness = std::move(out);
        return true;
    });
    return witness;
}

}  // namespace uvass
