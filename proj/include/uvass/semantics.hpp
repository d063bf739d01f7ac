// semantics.hpp -- run semantics and brute-force oracles
//
// These are ground truth for tests and for confirming counterexamples, not
// decision procedures.  Accepting runs of a word are enumerated explicitly.
// Inside a maximal epsilon segment the search never extends a path to a
// configuration that dominates (same state, counters >=) an earlier
// configuration of the same segment: such a path closes a non-negative
// epsilon cycle, so either the word has infinitely many accepting runs
// through it (reported as unbounded) or none.

#ifndef UVASS_SEMANTICS_HPP
#define UVASS_SEMANTICS_HPP

#include <optional>
#include <stdexcept>

#include "uvass/model.hpp"

namespace uvass {

/// Invalid run: broken state chain or a counter going negative.
class RunError : public std::runtime_error {
public:
    RunError(std::size_t step, std::optional<std::size_t> coordinate, const std::string& message);
    /// 1-based index of the offending step.
    std::size_t step() const { return step_; }
    /// Offending coordinate for underflows.
    std::optional<std::size_t> coordinate() const { return coordinate_; }

private:
    std::size_t step_;
    std::optional<std::size_t> coordinate_;
};

/// The search hit its epsilon budget before finishing; raise the budget.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Configuration apply_run(const Vass& v, const Configuration& start, const Run& run);

/// Letters read by `run` (epsilon steps dropped).
Word run_word(const Vass& v, const Run& run);

/// True iff `run` is valid from `start` and ends in a final state.
bool is_accepting_run(const Vass& v, const Configuration& start, const Run& run);

struct RunCount {
    bool unbounded = false;
    Integer value;  ///< meaningful only when !unbounded

    static RunCount infinite() { return RunCount{true, 0}; }
    bool at_least(unsigned long k) const { return unbounded || value >= k; }
    bool operator==(const RunCount&) const = default;
};

/// Default epsilon budget: states * (1 + largest counter value reachable
/// with |w| + states steps of norm-sized effects from `start`).
std::size_t default_eps_budget(const Vass& v, const Word& w, const Configuration& start);

struct RunSearch {
    RunCount count;
    std::vector<Run> runs;  ///< first accepting runs found, in search order
};

/// Counts accepting runs reading `w` from `start`, keeping up to
/// `keep_runs` of them.  `eps_budget` == 0 selects the default.
RunSearch search_accepting_runs(const Vass& v, const Word& w, const Configuration& start,
                                std::size_t eps_budget = 0, std::size_t keep_runs = 0);

RunCount count_accepting_runs(const Vass& v, const Word& w, const Configuration& start,
                              std::size_t eps_budget = 0);

/// Up to `limit` distinct accepting runs reading `w`, shortest first and
/// lexicographic by TransitionId within a length, of length <= max_length.
std::vector<Run> shortest_accepting_runs(const Vass& v, const Word& w, const Configuration& start,
                                         std::size_t limit, std::size_t max_length);

/// Calls `fn` on every word of length <= max_len in length-lexicographic
/// order (symbols by declaration order) until `fn` returns true.
template <typename Fn>
bool for_each_word(std::size_t num_symbols, std::size_t max_len, Fn&& fn)
{
    Word w;
    if (fn(static_cast<const Word&>(w))) return true;
    if (num_symbols == 0) return false;
    for (std::size_t len = 1; len <= max_len; ++len) {
        w.assign(len, 0);
        while (true) {
            if (fn(static_cast<const Word&>(w))) return true;
            std::size_t i = len;
            while (i > 0 && w[i - 1] + 1 == num_symbols) w[--i] = 0;
            if (i == 0) break;
            ++w[i - 1];
        }
    }
    return false;
}

/// Least word (length-lex) of length <= max_len with no accepting run.
std::optional<Word> brute_universal_up_to(const Vass& v, std::size_t max_len, std::size_t eps_budget = 0);

struct AmbiguityWitness {
    Word word;
    RunCount count;
    std::optional<Run> first;
    std::optional<Run> second;
};

/// Least word of length <= max_len with at least two accepting runs.
std::optional<AmbiguityWitness> brute_unambiguous_up_to(const Vass& v, std::size_t max_len,
                                                        std::size_t eps_budget = 0);

}  // namespace uvass

#endif
