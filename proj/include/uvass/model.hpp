// model.hpp -- vector addition systems with states and their text format
//
// A VASS is (alphabet, dimension, states, initial state, final states,
// transitions).  Finite automata are the dimension-0 case.  States and
// symbols are addressed by dense indices in declaration order; names only
// matter for parsing and printing.

#ifndef UVASS_MODEL_HPP
#define UVASS_MODEL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace uvass {

using Integer = mpz_class;
using Vector = std::vector<Integer>;

using StateId = std::uint32_t;
using Symbol = std::uint32_t;
using TransitionId = std::size_t;

/// A word is a sequence of symbol indices of some alphabet.
using Word = std::vector<Symbol>;

/// A run is a sequence of transition identifiers.
using Run = std::vector<TransitionId>;

/// Transition label: a symbol of the alphabet or the empty word.
class Label {
public:
    static constexpr Label epsilon() { return Label{}; }
    constexpr explicit Label(Symbol symbol) : value_(symbol) {}

    constexpr bool is_epsilon() const { return value_ == kEpsilon; }
    constexpr Symbol symbol() const { return value_; }

    friend constexpr auto operator<=>(Label, Label) = default;

private:
    static constexpr Symbol kEpsilon = std::numeric_limits<Symbol>::max();
    constexpr Label() : value_(kEpsilon) {}
    Symbol value_;
};

struct Transition {
    StateId src;
    Label label;
    Vector effect;
    StateId dst;

    bool operator==(const Transition&) const = default;
};

struct Configuration {
    StateId state = 0;
    Vector counters;

    bool operator==(const Configuration&) const = default;
    bool operator<(const Configuration& other) const
    {
        if (state != other.state) return state < other.state;
        return counters < other.counters;
    }
};

/// Semantic error in a model (bad reference, arity, duplicate name, ...).
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Error while reading the interchange format.  `line()` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Reserved token for the empty word in the text format.
inline constexpr std::string_view kEpsilonToken = "eps";

/// True iff `name` is a legal symbol or state token ([A-Za-z0-9_*]+).
bool is_identifier(std::string_view name);

class Vass {
public:
    Vass() = default;
    explicit Vass(std::size_t dim) : dim_(dim) {}

    StateId add_state(const std::string& name);
    Symbol add_symbol(const std::string& name);
    TransitionId add_transition(StateId src, Label label, Vector effect, StateId dst);
    void set_initial(StateId state);
    void set_final(StateId state, bool is_final = true);

    std::size_t dim() const { return dim_; }
    std::size_t num_states() const { return states_.size(); }
    std::size_t num_symbols() const { return alphabet_.size(); }
    std::size_t num_transitions() const { return transitions_.size(); }

    const std::string& state_name(StateId s) const { return states_.at(s); }
    const std::string& symbol_name(Symbol a) const { return alphabet_.at(a); }
    const std::vector<std::string>& state_names() const { return states_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    std::optional<StateId> find_state(std::string_view name) const;
    std::optional<Symbol> find_symbol(std::string_view name) const;

    StateId initial() const { return initial_; }
    bool is_final(StateId s) const { return finals_.at(s); }
    std::vector<StateId> finals() const;

    const std::vector<Transition>& transitions() const { return transitions_; }
    const Transition& transition(TransitionId t) const { return transitions_.at(t); }
    /// Outgoing transitions of `s` in TransitionId order.
    const std::vector<TransitionId>& outgoing(StateId s) const { return outgoing_.at(s); }

    /// q0 with all counters zero.
    Configuration initial_configuration() const;

    /// Human-readable label ("eps" for the empty word).
    std::string label_name(Label label) const;

    /// Throws ModelError if the model breaks an invariant (no states, ...).
    void validate() const;

    bool operator==(const Vass&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<std::string> alphabet_;
    std::vector<std::string> states_;
    StateId initial_ = 0;
    bool has_initial_ = false;
    std::vector<bool> finals_;
    std::vector<Transition> transitions_;
    std::vector<std::vector<TransitionId>> outgoing_;
    std::map<std::string, Symbol, std::less<>> symbol_index_;
    std::map<std::string, StateId, std::less<>> state_index_;
};

Vass parse_vass(std::istream& in);
Vass parse_vass(std::string_view text);
std::string serialize_vass(const Vass& v);
void serialize_vass(const Vass& v, std::ostream& out);

/// Largest absolute value among all effect entries (0 if there are none).
Integer norm(const Vass& v);

/// Componentwise u <= w.  Both vectors must have the same length.
bool dominated(const Vector& u, const Vector& w);

/// Renders a word with its symbol names.  Words over single-character
/// alphabets are concatenated ("0110"), others are space separated.
std::string format_word(const Vass& v, const Word& w);

/// Parses a word written as by format_word, or comma/space separated.
/// Throws ModelError on unknown symbols.
Word parse_word(const Vass& v, std::string_view text);

}  // namespace uvass

#endif
