// generators.hpp -- hardness gadgets and seeded random instances

#ifndef UVASS_GENERATORS_HPP
#define UVASS_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "uvass/model.hpp"

namespace uvass {

/// Perfect-partition gadget over {0,1}: accepts every word of length
/// != |sizes|, and a word w of length |sizes| iff the elements picked by the
/// 1s of w do not sum to half the total.  Throws std::invalid_argument on an
/// empty set or a non-positive element.
Vass gen_partition(const std::vector<Integer>& sizes);

/// Same shape with final decrements of N instead of N+1: ambiguous iff a
/// perfect partition exists.
Vass gen_partition_ambiguous(const std::vector<Integer>& sizes);

/// N-bounded reachability in a one-counter net: is there a run from the
/// initial state with counter 0 to `target` with counter `value` whose
/// counter stays in [0, bound]?
struct BoundedOcaInstance {
    Vass automaton;  ///< dimension 1, transitions carry pairwise distinct letters
    Integer bound;
    StateId target = 0;
    Integer value;
};

/// Unambiguous 2-VASS over the transitions of the net plus "star" that is
/// universal iff the instance has no bounded run.
Vass gen_bounded_oca(const BoundedOcaInstance& inst);

/// gen_bounded_oca with the sink as sole final state and an epsilon loop on
/// it: ambiguous iff the sink is reachable.
Vass gen_unamb_check_variant(const BoundedOcaInstance& inst);

/// Wraps an epsilon-only VASS: the result accepts letter* if the input
/// accepts the empty word and nothing otherwise.
Vass gen_empty_wrap(const Vass& a, const std::string& letter);

struct RandomParams {
    std::size_t states = 2;
    std::size_t dim = 1;
    long norm = 1;
    std::size_t symbols = 1;
    double density = 0.3;
    std::uint64_t seed = 0;
};

/// Reproducible random VASS: each (source, label, target) slot, labels
/// including epsilon, holds a transition with probability `density`.
Vass random_vass(const RandomParams& params);

}  // namespace uvass

#endif
