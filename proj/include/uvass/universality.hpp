// universality.hpp -- universality of unambiguous VASS
//
// Caps are tried in increasing order.  At each cap the profile automaton is
// built, its epsilon cycles are removed and every word is checked to have
// exactly one accepting run:
//   * yes: the abstraction accepts everything and its language is contained
//     in the VASS language, so the VASS is universal;
//   * a word with no run: confirmed with exact membership; if the VASS
//     rejects it too it is the witness, otherwise the cap was too coarse;
//   * a word with two or more runs: the VASS itself is ambiguous.
// At cap omega the abstraction is exact for unambiguous VASS, which bounds
// the schedule; omega is far beyond reach in practice, so running out of
// caps or budget yields an honest "inconclusive".

#ifndef UVASS_UNIVERSALITY_HPP
#define UVASS_UNIVERSALITY_HPP

#include <optional>
#include <string>

#include "uvass/ambiguity.hpp"
#include "uvass/model.hpp"
#include "uvass/profile.hpp"

namespace uvass {

struct UniversalityOptions {
    std::vector<Integer> cap_schedule;  ///< empty: 1, 2, 4, ... truncated at omega
    std::size_t max_caps = 16;          ///< length of the default schedule
    std::size_t state_budget = kDefaultStateBudget;
    std::size_t minimize_limit = 10'000;  ///< re-minimize witnesses up to this many profiles
};

enum class UniversalityAnswer { universal, not_universal, precondition_violated, inconclusive };

std::string to_string(UniversalityAnswer a);

struct UniversalityVerdict {
    UniversalityAnswer answer = UniversalityAnswer::inconclusive;
    std::optional<Word> witness;
    std::optional<Integer> count;  ///< runs of the witness in the abstraction
    std::optional<Integer> cap;    ///< cap that produced the answer
    std::vector<Integer> caps_tried;
    std::size_t profile_states = 0;
    std::size_t basis_size = 0;
    std::string note;
};

/// Cap schedule used when none is given.
std::vector<Integer> default_cap_schedule(const Vass& v, std::size_t max_caps);

UniversalityVerdict check_universal(const Vass& v, const UniversalityOptions& options = {});

/// Shortest word rejected by `fa` (subset construction), if one exists and
/// the search stays within `max_subsets` subsets.
std::optional<Word> shortest_rejected_word(const Vass& fa, std::size_t max_subsets);

enum class EquivalenceAnswer { equivalent, not_equivalent, precondition_violated, inconclusive };

std::string to_string(EquivalenceAnswer a);

struct EquivalenceVerdict {
    EquivalenceAnswer answer = EquivalenceAnswer::inconclusive;
    std::optional<Word> witness;
    std::string reason;
    std::optional<AmbiguityVerdict> ambiguity;
    std::optional<UniversalityVerdict> universality;
};

/// Union of `v` with the complement of the complete DFA `dfa` behind a
/// fresh epsilon-branching initial state.  Alphabets must hold the same
/// symbols.  Throws ModelError if `dfa` is not a complete DFA.
Vass union_with_complement(const Vass& v, const Vass& dfa);

/// Is L(v) = L(dfa)?  Requires `v` unambiguous and `dfa` complete.
EquivalenceVerdict check_equivalence_with_regular(const Vass& v, const Vass& dfa,
                                                  const UniversalityOptions& options = {});

}  // namespace uvass

#endif
