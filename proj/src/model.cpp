#include "uvass/model.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace uvass {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
{
}

bool is_identifier(std::string_view name)
{
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
               c == '_' || c == '*';
    });
}

StateId Vass::add_state(const std::string& name)
{
    if (!is_identifier(name)) throw ModelError("invalid state name '" + name + "'");
    if (state_index_.count(name)) throw ModelError("duplicate state '" + name + "'");
    auto id = static_cast<StateId>(states_.size());
    states_.push_back(name);
    finals_.push_back(false);
    outgoing_.emplace_back();
    state_index_.emplace(name, id);
    return id;
}

Symbol Vass::add_symbol(const std::string& name)
{
    if (!is_identifier(name)) throw ModelError("invalid symbol name '" + name + "'");
    if (name == kEpsilonToken) throw ModelError("'eps' is reserved and cannot be a symbol");
    if (symbol_index_.count(name)) throw ModelError("duplicate symbol '" + name + "'");
    auto id = static_cast<Symbol>(alphabet_.size());
    alphabet_.push_back(name);
    symbol_index_.emplace(name, id);
    return id;
}

TransitionId Vass::add_transition(StateId src, Label label, Vector effect, StateId dst)
{
    if (src >= states_.size() || dst >= states_.size())
        throw ModelError("transition endpoint is not a declared state");
    if (!label.is_epsilon() && label.symbol() >= alphabet_.size())
        throw ModelError("transition label is not in the alphabet");
    if (effect.size() != dim_)
        throw ModelError("effect arity " + std::to_string(effect.size()) + ", expected " +
                         std::to_string(dim_));
    TransitionId id = transitions_.size();
    transitions_.push_back(Transition{src, label, std::move(effect), dst});
    outgoing_[src].push_back(id);
    return id;
}

void Vass::set_initial(StateId state)
{
    if (state >= states_.size()) throw ModelError("initial state is not declared");
    initial_ = state;
    has_initial_ = true;
}

void Vass::set_final(StateId state, bool is_final)
{
    if (state >= states_.size()) throw ModelError("final state is not declared");
    finals_[state] = is_final;
}

std::optional<StateId> Vass::find_state(std::string_view name) const
{
    auto it = state_index_.find(name);
    if (it == state_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<Symbol> Vass::find_symbol(std::string_view name) const
{
    auto it = symbol_index_.find(name);
    if (it == symbol_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<StateId> Vass::finals() const
{
    std::vector<StateId> out;
    for (StateId s = 0; s < states_.size(); ++s)
        if (finals_[s]) out.push_back(s);
    return out;
}

Configuration Vass::initial_configuration() const
{
    return Configuration{initial_, Vector(dim_, 0)};
}

std::string Vass::label_name(Label label) const
{
    return label.is_epsilon() ? std::string(kEpsilonToken) : alphabet_.at(label.symbol());
}

void Vass::validate() const
{
    if (states_.empty()) throw ModelError("a VASS needs at least one state");
    if (!has_initial_) throw ModelError("no initial state");
    for (const auto& t : transitions_) {
        if (t.effect.size() != dim_) throw ModelError("effect arity mismatch");
        if (t.src >= states_.size() || t.dst >= states_.size())
            throw ModelError("transition endpoint out of range");
        if (!t.label.is_epsilon() && t.label.symbol() >= alphabet_.size())
            throw ModelError("transition label out of range");
    }
}

namespace {

std::vector<std::string> tokenize(const std::string& line)
{
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    return tokens;
}

bool is_integer_token(const std::string& tok)
{
    std::size_t start = (!tok.empty() && tok[0] == '-') ? 1 : 0;
    if (start == tok.size()) return false;
    return std::all_of(tok.begin() + static_cast<std::ptrdiff_t>(start), tok.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
}

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

class Reader {
public:
    explicit Reader(std::istream& in)
    {
        std::string text;
        std::size_t number = 0;
        while (std::getline(in, text)) {
            ++number;
            if (!text.empty() && text.back() == '\r') text.pop_back();
            auto tokens = tokenize(text);
            if (!tokens.empty()) lines_.push_back(Line{number, std::move(tokens)});
        }
        last_line_ = number;
    }

    bool done() const { return pos_ == lines_.size(); }
    const Line& peek() const { return lines_[pos_]; }

    /// Next line, which must start with `keyword`.
    const Line& expect(std::string_view keyword)
    {
        if (done())
            throw ParseError(last_line_ + 1, "unexpected end of input, expected '" +
                                                 std::string(keyword) + "'");
        const Line& line = lines_[pos_];
        if (line.tokens[0] != keyword)
            throw ParseError(line.number, "expected '" + std::string(keyword) + "', found '" +
                                              line.tokens[0] + "'");
        ++pos_;
        return line;
    }

private:
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
    std::size_t last_line_ = 0;
};

StateId lookup_state(const Vass& v, const Line& line, const std::string& name)
{
    if (auto s = v.find_state(name)) return *s;
    throw ParseError(line.number, "undeclared state '" + name + "'");
}

}  // namespace

Vass parse_vass(std::istream& in)
{
    Reader reader(in);

    const Line& header = reader.expect("vass");
    if (header.tokens.size() != 2 || header.tokens[1] != "1")
        throw ParseError(header.number, "unsupported format version (expected 'vass 1')");

    const Line& dim_line = reader.expect("dim");
    if (dim_line.tokens.size() != 2 || !is_integer_token(dim_line.tokens[1]) ||
        dim_line.tokens[1][0] == '-')
        throw ParseError(dim_line.number, "'dim' expects one non-negative integer");
    std::size_t dim = 0;
    try {
        dim = std::stoul(dim_line.tokens[1]);
    } catch (const std::exception&) {
        throw ParseError(dim_line.number, "dimension out of range");
    }
    Vass v(dim);

    auto wrap = [](const Line& line, auto&& fn) {
        try {
            return fn();
        } catch (const ModelError& e) {
            throw ParseError(line.number, e.what());
        }
    };

    const Line& alphabet = reader.expect("alphabet");
    for (std::size_t i = 1; i < alphabet.tokens.size(); ++i)
        wrap(alphabet, [&] { return v.add_symbol(alphabet.tokens[i]); });

    const Line& states = reader.expect("states");
    if (states.tokens.size() < 2) throw ParseError(states.number, "at least one state is required");
    for (std::size_t i = 1; i < states.tokens.size(); ++i)
        wrap(states, [&] { return v.add_state(states.tokens[i]); });

    const Line& initial = reader.expect("initial");
    if (initial.tokens.size() != 2) throw ParseError(initial.number, "'initial' expects one state");
    v.set_initial(lookup_state(v, initial, initial.tokens[1]));

    const Line& finals = reader.expect("final");
    for (std::size_t i = 1; i < finals.tokens.size(); ++i)
        v.set_final(lookup_state(v, finals, finals.tokens[i]));

    while (!reader.done()) {
        const Line& line = reader.expect("trans");
        const auto& tok = line.tokens;
        if (tok.size() < 4) throw ParseError(line.number, "'trans' expects <src> <label> <int>* <dst>");
        std::size_t arity = tok.size() - 4;
        if (arity != dim)
            throw ParseError(line.number, "effect arity " + std::to_string(arity) + ", expected " +
                                              std::to_string(dim));
        StateId src = lookup_state(v, line, tok[1]);
        StateId dst = lookup_state(v, line, tok.back());
        Label label = Label::epsilon();
        if (tok[2] != kEpsilonToken) {
            auto a = v.find_symbol(tok[2]);
            if (!a) throw ParseError(line.number, "undeclared symbol '" + tok[2] + "'");
            label = Label(*a);
        }
        Vector effect;
        effect.reserve(dim);
        for (std::size_t i = 0; i < arity; ++i) {
            const std::string& num = tok[3 + i];
            if (!is_integer_token(num)) throw ParseError(line.number, "bad integer '" + num + "'");
            effect.emplace_back(num, 10);
        }
        wrap(line, [&] { return v.add_transition(src, label, std::move(effect), dst); });
    }
    return v;
}

Vass parse_vass(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_vass(in);
}

void serialize_vass(const Vass& v, std::ostream& out)
{
    out << "vass 1\n";
    out << "dim " << v.dim() << '\n';
    out << "alphabet";
    for (const auto& a : v.alphabet()) out << ' ' << a;
    out << "\nstates";
    for (const auto& s : v.state_names()) out << ' ' << s;
    out << "\ninitial " << v.state_name(v.initial()) << '\n';
    out << "final";
    for (StateId f : v.finals()) out << ' ' << v.state_name(f);
    out << '\n';
    for (const auto& t : v.transitions()) {
        out << "trans " << v.state_name(t.src) << ' ' << v.label_name(t.label);
        for (const auto& e : t.effect) out << ' ' << e.get_str();
        out << ' ' << v.state_name(t.dst) << '\n';
    }
}

std::string serialize_vass(const Vass& v)
{
    std::ostringstream out;
    serialize_vass(v, out);
    return out.str();
}

Integer norm(const Vass& v)
{
    Integer best = 0;
    for (const auto& t : v.transitions())
        for (const auto& e : t.effect)
            if (abs(e) > best) best = abs(e);
    return best;
}

bool dominated(const Vector& u, const Vector& w)
{
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] > w[i]) return false;
    return true;
}

std::string format_word(const Vass& v, const Word& w)
{
    bool single = std::all_of(v.alphabet().begin(), v.alphabet().end(),
                              [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!single && i > 0) out += ' ';
        out += v.symbol_name(w[i]);
    }
    return out;
}

Word parse_word(const Vass& v, std::string_view text)
{
    Word w;
    bool separated = text.find_first_of(", ") != std::string_view::npos;
    if (!separated) {
        if (text.empty()) return w;
        if (auto a = v.find_symbol(text)) return Word{*a};
        for (char c : text) {
            auto a = v.find_symbol(std::string_view(&c, 1));
            if (!a) throw ModelError("unknown symbol in word '" + std::string(text) + "'");
            w.push_back(*a);
        }
        return w;
    }
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        auto a = v.find_symbol(token);
        if (!a) throw ModelError("unknown symbol '" + token + "'");
        w.push_back(*a);
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ')
            flush();
        else
            token += c;
    }
    flush();
    return w;
}

}  // namespace uvass
