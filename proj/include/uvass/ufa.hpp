// ufa.hpp -- finite automata (dimension-0 VASS): epsilon-cycle removal,
// exact path counting and the exactly-one-run check
//
// The exactly-one-run check is path equivalence against the one-state
// automaton accepting every word by exactly one run.  Each word w gives the
// vector of run counts per state after reading w, extended by a constant 1
// coordinate for the reference automaton; words are explored breadth-first
// and pruned once their vector lies in the rational span of the vectors
// already kept.  Every word is then checked through the span, so the check
// finishes after at most (states + 1) kept vectors.

#ifndef UVASS_UFA_HPP
#define UVASS_UFA_HPP

#include <optional>

#include <gmpxx.h>

#include "uvass/model.hpp"

namespace uvass {

/// Removes every epsilon transition inside a strongly connected component
/// of the epsilon graph (self-loops included).  Requires dimension 0.
Vass eliminate_epsilon_cycles(const Vass& fa);

bool has_epsilon_cycles(const Vass& fa);

/// Number of accepting runs of `fa` on `w`, counting epsilon interleavings.
/// Throws std::invalid_argument if `fa` has epsilon cycles.
Integer count_word_runs_fa(const Vass& fa, const Word& w);

/// Subset simulation; works with epsilon cycles.
bool fa_accepts(const Vass& fa, const Word& w);

/// Linearly independent rational vectors kept in reduced row echelon form.
class Basis {
public:
    explicit Basis(std::size_t width) : width_(width) {}

    /// Adds `v` if it is independent of the current span.
    bool add_if_independent(const std::vector<Integer>& v);
    bool in_span(const std::vector<Integer>& v) const;

    std::size_t size() const { return rows_.size(); }
    std::size_t width() const { return width_; }

private:
    std::vector<mpq_class> reduce(const std::vector<Integer>& v) const;

    std::size_t width_;
    std::vector<std::vector<mpq_class>> rows_;
    std::vector<std::size_t> pivots_;
};

struct OneRunVerdict {
    bool exactly_one = true;
    Word word;      ///< counterexample when !exactly_one
    Integer count;  ///< its number of accepting runs (0 or >= 2)
    std::size_t basis_size = 0;
    std::size_t words_explored = 0;
};

/// Does every word have exactly one accepting run?  Requires an
/// epsilon-cycle-free dimension-0 automaton.
OneRunVerdict exact_one_run_check(const Vass& fa);

}  // namespace uvass

#endif
