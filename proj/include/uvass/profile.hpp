// profile.hpp -- counter truncation and the profile automaton
//
// The N-profile of q(u) is q(min(u, N)).  The profile automaton at cap N
// has profiles as states and a transition p(u) -a-> q(min(u + e, N)) for
// every VASS transition (p, a, e, q) with u + e >= 0.  Every accepting run
// of it replays as an accepting VASS run, for any cap, so its language is
// contained in the VASS language.

#ifndef UVASS_PROFILE_HPP
#define UVASS_PROFILE_HPP

#include <map>
#include <stdexcept>

#include "uvass/model.hpp"

namespace uvass {

struct Profile {
    StateId state = 0;
    Vector counters;  ///< entries in [0, cap]; cap means "at least cap"

    bool operator<(const Profile& other) const
    {
        if (state != other.state) return state < other.state;
        return counters < other.counters;
    }
    bool operator==(const Profile&) const = default;
};

Profile profile_of(const Configuration& c, const Integer& cap);

/// The profile automaton outgrew its state budget.
class StateBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultStateBudget = 200'000;

struct ProfileEdge {
    Label label;
    std::size_t dst;
    TransitionId origin;  ///< VASS transition it simulates
};

/// Reachable fragment of the profile automaton, expanded on demand.
/// Profiles get dense indices in discovery order; index 0 is the initial
/// profile.  Holds a reference to `v`, which must outlive it.
class ProfileAutomaton {
public:
    ProfileAutomaton(const Vass& v, Integer cap, std::size_t state_budget = kDefaultStateBudget);

    const Integer& cap() const { return cap_; }
    std::size_t num_discovered() const { return profiles_.size(); }
    const Profile& profile(std::size_t i) const { return profiles_.at(i); }
    bool is_final(std::size_t i) const { return v_.is_final(profiles_.at(i).state); }
    std::optional<std::size_t> find(const Profile& p) const;

    /// Outgoing edges of profile `i` in TransitionId order.
    const std::vector<ProfileEdge>& successors(std::size_t i);

    /// Expands everything reachable (breadth-first by discovery order).
    void expand_all();

    /// Dimension-0 VASS over the reachable profiles, states named
    /// "q__c1_c2..." (plain "q" when the VASS has dimension 0).  Transition
    /// i of the result simulates `origins()[i]`.
    Vass materialize();
    const std::vector<TransitionId>& origins() const { return origins_; }

    std::string profile_name(std::size_t i) const;

private:
    std::size_t intern(Profile p);

    const Vass& v_;
    Integer cap_;
    std::size_t budget_;
    std::vector<Profile> profiles_;
    std::map<Profile, std::size_t> index_;
    std::vector<std::optional<std::vector<ProfileEdge>>> edges_;
    std::vector<TransitionId> origins_;
};

Vass build_profile_automaton(const Vass& v, const Integer& cap, std::size_t state_budget = kDefaultStateBudget,
                             std::vector<TransitionId>* origins = nullptr);

}  // namespace uvass

#endif
