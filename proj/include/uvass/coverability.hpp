// coverability.hpp -- control-state coverability, emptiness and membership
//
// Verdicts come from the backward saturation over upward-closed sets, which
// always terminates.  Witness runs come from a forward breadth-first search
// that drops configurations dominated by an already visited configuration
// of the same state; that search is bounded by a node cap.

#ifndef UVASS_COVERABILITY_HPP
#define UVASS_COVERABILITY_HPP

#include <optional>
#include <vector>

#include "uvass/model.hpp"

namespace uvass {

inline constexpr std::size_t kDefaultNodeCap = 1'000'000;

/// Finite antichain of configurations standing for its upward closure.
class UpwardBasis {
public:
    explicit UpwardBasis(std::size_t num_states) : minimal_(num_states) {}

    /// Adds `c` unless already covered; drops elements `c` dominates.
    /// Returns true if `c` became a minimal element.
    bool insert(const Configuration& c);
    bool covers(const Configuration& c) const;

    const std::vector<Vector>& minimal(StateId s) const { return minimal_.at(s); }
    std::size_t num_states() const { return minimal_.size(); }
    std::size_t size() const;
    bool empty() const { return size() == 0; }

private:
    std::vector<std::vector<Vector>> minimal_;
};

/// True iff some configuration in the upward closure of `targets` is
/// reachable from `start`.
bool backward_coverable(const Vass& v, const UpwardBasis& targets, const Configuration& start);

/// Basis {f(0..0) : f final}.
UpwardBasis final_states_basis(const Vass& v);

struct ForwardSearchStats {
    std::size_t nodes = 0;
    bool cap_hit = false;
};

/// Shortest run from `start` to a final state, by breadth-first search
/// with domination pruning; transitions are tried in TransitionId order.
/// Returns nullopt if none was found (check `stats.cap_hit`).
std::optional<Run> forward_accepting_run(const Vass& v, const Configuration& start,
                                         std::size_t node_cap = kDefaultNodeCap,
                                         ForwardSearchStats* stats = nullptr);

struct EmptinessResult {
    bool empty = true;
    std::optional<Run> witness;  ///< absent when empty, or when the cap tripped
    bool witness_omitted = false;
    std::size_t nodes = 0;
};

EmptinessResult emptiness(const Vass& v, std::size_t node_cap = kDefaultNodeCap);

/// Product of `v` with the line automaton of `w`: state (q, i) has index
/// q * (|w| + 1) + i; letter transitions advance i, epsilon ones do not.
/// `origin[t]` maps product transitions back to transitions of `v`.
Vass line_product(const Vass& v, const Word& w, std::vector<TransitionId>* origin = nullptr);

/// w in L(v, start).
bool accepts_from(const Vass& v, const Word& w, const Configuration& start);

/// w in L(v), from the initial configuration.
bool membership(const Vass& v, const Word& w);

}  // namespace uvass

#endif
