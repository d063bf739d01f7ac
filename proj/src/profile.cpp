#include "uvass/profile.hpp"

namespace uvass {

Profile profile_of(const Configuration& c, const Integer& cap)
{
    if (cap < 0) throw std::invalid_argument("profile cap must be non-negative");
    Profile p{c.state, c.counters};
    for (auto& x : p.counters)
        if (x > cap) x = cap;
    return p;
}

ProfileAutomaton::ProfileAutomaton(const Vass& v, Integer cap, std::size_t state_budget)
    : v_(v), cap_(std::move(cap)), budget_(state_budget)
{
    if (cap_ < 0) throw std::invalid_argument("profile cap must be non-negative");
    intern(profile_of(v.initial_configuration(), cap_));
}

std::optional<std::size_t> ProfileAutomaton::find(const Profile& p) const
{
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t ProfileAutomaton::intern(Profile p)
{
    if (auto it = index_.find(p); it != index_.end()) return it->second;
    if (profiles_.size() >= budget_)
        throw StateBudgetExceeded("profile automaton exceeds " + std::to_string(budget_) +
                                  " states; raise the budget or lower the cap");
    std::size_t id = profiles_.size();
    index_.emplace(p, id);
    profiles_.push_back(std::move(p));
    edges_.emplace_back();
    return id;
}

const std::vector<ProfileEdge>& ProfileAutomaton::successors(std::size_t i)
{
    if (edges_.at(i)) return *edges_[i];
    std::vector<ProfileEdge> out;
    const StateId q = profiles_[i].state;
    for (TransitionId t : v_.outgoing(q)) {
        const Transition& tr = v_.transition(t);
        Profile next{tr.dst, profiles_[i].counters};
        bool ok = true;
        for (std::size_t k = 0; k < next.counters.size() && ok; ++k) {
            next.counters[k] += tr.effect[k];
            if (next.counters[k] < 0) ok = false;
            else if (next.counters[k] > cap_) next.counters[k] = cap_;
        }
        if (!ok) continue;
        std::size_t dst = intern(std::move(next));
        out.push_back(ProfileEdge{tr.label, dst, t});
    }
    // `intern` may have grown edges_, so index again.
    edges_[i] = std::move(out);
    return *edges_[i];
}

void ProfileAutomaton::expand_all()
{
    for (std::size_t i = 0; i < profiles_.size(); ++i) successors(i);
}

std::string ProfileAutomaton::profile_name(std::size_t i) const
{
    const Profile& p = profiles_.at(i);
    std::string name = v_.state_name(p.state);
    if (p.counters.empty()) return name;
    name += "_";
    for (const auto& c : p.counters) name += "_" + c.get_str();
    return name;
}

Vass ProfileAutomaton::materialize()
{
    expand_all();
    Vass fa(0);
    for (const auto& a : v_.alphabet()) fa.add_symbol(a);
    for (std::size_t i = 0; i < profiles_.size(); ++i) {
        StateId s = fa.add_state(profile_name(i));
        fa.set_final(s, is_final(i));
    }
    fa.set_initial(0);
    origins_.clear();
    for (std::size_t i = 0; i < profiles_.size(); ++i)
        for (const auto& e : *edges_[i]) {
            fa.add_transition(static_cast<StateId>(i), e.label, Vector{}, static_cast<StateId>(e.dst));
            origins_.push_back(e.origin);
        }
    return fa;
}

Vass build_profile_automaton(const Vass& v, const Integer& cap, std::size_t state_budget,
                             std::vector<TransitionId>* origins)
{
    ProfileAutomaton pa(v, cap, state_budget);
    Vass fa = pa.materialize();
    if (origins) *origins = pa.origins();
    return fa;
}

}  // namespace uvass
