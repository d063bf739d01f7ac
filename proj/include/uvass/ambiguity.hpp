// ambiguity.hpp -- unambiguity checking through a first-divergence product
//
// The product is a 2d-VASS that guesses two accepting runs of the input on
// the same word.  It simulates their common prefix once ("same" phase,
// counters doubled), then splits at the first index where the runs differ
// and simulates both suffixes ("differed" phase: letters synchronized,
// epsilon steps one half at a time).  The product accepts exactly the words
// with at least two accepting runs.
//
// Possible first differences, up to swapping the two runs:
//   * two distinct transitions, both epsilon or both reading the same letter;
//   * run 1 takes an epsilon step while run 2 reads a letter next, or run 2
//     has already ended.
// The last case uses "waiting" pairs: run 1 may keep taking epsilon steps,
// run 2 may only move together with run 1 on the next letter.  Waiting
// pairs are accepting like differed pairs, which covers the ended case.

#ifndef UVASS_AMBIGUITY_HPP
#define UVASS_AMBIGUITY_HPP

#include <optional>
#include <variant>

#include "uvass/coverability.hpp"
#include "uvass/model.hpp"

namespace uvass {

enum class ProductPhase { same, differed, waiting };

struct ProductState {
    ProductPhase phase;
    StateId first;
    StateId second;  ///< equal to `first` in the same phase
};

/// Product transition: original transitions moved by each half (a half
/// that does not move has no entry).
struct ProductMove {
    std::optional<TransitionId> first;
    std::optional<TransitionId> second;
};

struct DivergenceProduct {
    Vass product;
    std::vector<ProductState> states;  ///< indexed by product StateId
    std::vector<ProductMove> moves;    ///< indexed by product TransitionId

    /// Projects a product run onto the two simulated runs of the input.
    std::pair<Run, Run> project(const Run& run) const;
};

DivergenceProduct build_divergence_product(const Vass& v);

struct AmbiguityVerdict {
    bool unambiguous = true;
    bool witness_omitted = false;  ///< ambiguous, but the witness search hit its cap
    std::optional<Word> word;
    std::optional<Run> first;
    std::optional<Run> second;
    std::size_t product_states = 0;
    std::size_t nodes = 0;
};

AmbiguityVerdict check_unambiguous(const Vass& v, std::size_t node_cap = kDefaultNodeCap);

}  // namespace uvass

#endif
