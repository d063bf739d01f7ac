#include "uvass/generators.hpp"

#include <random>
#include <stdexcept>

namespace uvass {

namespace {

Vass partition_gadget(const std::vector<Integer>& sizes, bool ambiguous)
{
    if (sizes.empty()) throw std::invalid_argument("partition set must be non-empty");
    Integer total = 0;
    for (const auto& x : sizes) {
        if (x <= 0) throw std::invalid_argument("partition elements must be positive");
        total += x;
    }
    const std::size_t k = sizes.size();
    Vass v(1);
    const Symbol zero = v.add_symbol("0");
    const Symbol one = v.add_symbol("1");

    std::vector<StateId> q, r, s;
    for (std::size_t i = 0; i <= k + 1; ++i) q.push_back(v.add_state("q" + std::to_string(i)));
    const StateId p = v.add_state("p");
    const StateId done = v.add_state("pp");
    for (std::size_t i = 0; i <= k; ++i) r.push_back(v.add_state("r" + std::to_string(i)));
    for (std::size_t i = 0; i <= k; ++i) s.push_back(v.add_state("s" + std::to_string(i)));
    v.set_initial(q[0]);

    // Top part: counts the length, rejecting exactly length k.
    for (std::size_t i = 0; i <= k; ++i) {
        v.add_transition(q[i], Label(zero), {0}, q[i + 1]);
        v.add_transition(q[i], Label(one), {0}, q[i + 1]);
    }
    v.add_transition(q[k + 1], Label(zero), {0}, q[k + 1]);
    v.add_transition(q[k + 1], Label(one), {0}, q[k + 1]);
    for (std::size_t i = 0; i <= k + 1; ++i)
        if (i != k) v.set_final(q[i]);

    // Bottom part: r pays for the 1s, s for the 0s.
    v.add_transition(q[0], Label::epsilon(), {2 * total}, p);
    v.add_transition(p, Label::epsilon(), {0}, r[0]);
    v.add_transition(p, Label::epsilon(), {0}, s[0]);
    for (std::size_t i = 1; i <= k; ++i) {
        const Integer cost = -2 * sizes[i - 1];
        v.add_transition(r[i - 1], Label(one), {cost}, r[i]);
        v.add_transition(r[i - 1], Label(zero), {0}, r[i]);
        v.add_transition(s[i - 1], Label(zero), {cost}, s[i]);
        v.add_transition(s[i - 1], Label(one), {0}, s[i]);
    }
    const Integer last = ambiguous ? Integer(-total) : Integer(-total - 1);
    v.add_transition(r[k], Label::epsilon(), {last}, done);
    v.add_transition(s[k], Label::epsilon(), {last}, done);
    v.set_final(done);
    return v;
}

std::string fresh_name(const Vass& v, std::string name)
{
    while (v.find_state(name)) name += "_";
    return name;
}

struct OcaGadget {
    Vass vass;
    StateId sink;
};

OcaGadget bounded_oca_gadget(const BoundedOcaInstance& inst)
{
    const Vass& a = inst.automaton;
    const Integer& n = inst.bound;
    const Integer& m = inst.value;
    if (a.dim() != 1) throw std::invalid_argument("bounded-oca input must have dimension 1");
    if (n < 0 || m < 0 || m > n) throw std::invalid_argument("bounded-oca needs 0 <= value <= bound");
    if (inst.target >= a.num_states()) throw std::invalid_argument("bounded-oca target is not a state");

    Vass b(2);
    std::vector<Symbol> letter(a.num_transitions());
    for (TransitionId t = 0; t < a.num_transitions(); ++t) {
        const Transition& tr = a.transition(t);
        if (tr.label.is_epsilon()) throw std::invalid_argument("bounded-oca transitions must carry letters");
        const std::string& name = a.symbol_name(tr.label.symbol());
        if (name == "star") throw std::invalid_argument("bounded-oca letter \"star\" is reserved");
        if (b.find_symbol(name)) throw std::invalid_argument("bounded-oca letters must be pairwise distinct");
        letter[t] = b.add_symbol(name);
    }
    const Symbol star = b.add_symbol("star");

    for (const auto& name : a.state_names()) b.add_state(name);
    const StateId init = b.add_state(fresh_name(a, "init"));
    const StateId sink = b.add_state(fresh_name(a, "bot"));
    const StateId accept = b.add_state(fresh_name(a, "qf"));
    b.set_initial(init);
    for (StateId x = 0; x < b.num_states(); ++x) b.set_final(x, x != sink);

    const StateId p = inst.target;
    // (i) load (0, N) on any first letter.
    for (Symbol t = 0; t < b.num_symbols(); ++t) b.add_transition(init, Label(t), {0, n}, a.initial());
    // (ii) simulation keeps the sum at N.
    for (TransitionId t = 0; t < a.num_transitions(); ++t) {
        const Transition& tr = a.transition(t);
        const Integer& h = tr.effect[0];
        b.add_transition(tr.src, Label(letter[t]), {h, -h}, tr.dst);
    }
    // (iii) reaching p(m) then star is the only rejection.
    b.add_transition(p, Label(star), {-m, m - n}, sink);
    // (iv)
    for (StateId x = 0; x < a.num_states(); ++x)
        if (x != p) b.add_transition(x, Label(star), {0, 0}, accept);
    // (v) star from p when the counter is not m.
    b.add_transition(p, Label(star), {-m - 1, 0}, accept);
    b.add_transition(p, Label(star), {0, m - n - 1}, accept);
    // (vi), (vii) letters that the simulation cannot take.
    for (StateId x = 0; x < a.num_states(); ++x)
        for (TransitionId t = 0; t < a.num_transitions(); ++t) {
            const Transition& tr = a.transition(t);
            if (tr.src != x) {
                b.add_transition(x, Label(letter[t]), {0, 0}, accept);
                continue;
            }
            const Integer& h = tr.effect[0];
            if (h < 0) b.add_transition(x, Label(letter[t]), {0, -(n + h) - 1}, accept);
            // Overflow past N for increments, symmetric to (vii).
            else if (h > 0) b.add_transition(x, Label(letter[t]), {-(n - h) - 1, 0}, accept);
        }
    // (viii)
    for (Symbol t = 0; t < b.num_symbols(); ++t) b.add_transition(accept, Label(t), {0, 0}, accept);
    return {std::move(b), sink};
}

}  // namespace

Vass gen_partition(const std::vector<Integer>& sizes)
{
    return partition_gadget(sizes, false);
}

Vass gen_partition_ambiguous(const std::vector<Integer>& sizes)
{
    return partition_gadget(sizes, true);
}

Vass gen_bounded_oca(const BoundedOcaInstance& inst)
{
    return bounded_oca_gadget(inst).vass;
}

Vass gen_unamb_check_variant(const BoundedOcaInstance& inst)
{
    auto [b, sink] = bounded_oca_gadget(inst);
    for (StateId x = 0; x < b.num_states(); ++x) b.set_final(x, x == sink);
    b.add_transition(sink, Label::epsilon(), {0, 0}, sink);
    return b;
}

Vass gen_empty_wrap(const Vass& a, const std::string& letter)
{
    for (const auto& t : a.transitions())
        if (!t.label.is_epsilon()) throw std::invalid_argument("empty-wrap input must have only epsilon transitions");
    Vass out(a.dim());
    const Symbol x = out.add_symbol(letter);
    for (const auto& name : a.state_names()) out.add_state(name);
    const StateId accept = out.add_state(fresh_name(a, "qf"));
    out.set_initial(a.initial());
    for (const auto& t : a.transitions()) out.add_transition(t.src, t.label, t.effect, t.dst);
    const Vector zero(a.dim(), 0);
    for (StateId s = 0; s < a.num_states(); ++s) {
        if (!a.is_final(s)) continue;
        out.set_final(s);
        out.add_transition(s, Label(x), zero, accept);
    }
    out.set_final(accept);
    out.add_transition(accept, Label(x), zero, accept);
    return out;
}

Vass random_vass(const RandomParams& params)
{
    if (params.states == 0) throw std::invalid_argument("random VASS needs at least one state");
    if (params.norm < 0) throw std::invalid_argument("random VASS norm must be non-negative");
    if (params.symbols > 26) throw std::invalid_argument("random VASS supports at most 26 symbols");
    std::mt19937_64 rng(params.seed);
    // Hand-rolled draws: std distributions differ between standard libraries.
    auto coin = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < params.density; };
    auto effect = [&] {
        const auto span = static_cast<std::uint64_t>(2 * params.norm + 1);
        return static_cast<long>(rng() % span) - params.norm;
    };

    Vass v(params.dim);
    for (std::size_t a = 0; a < params.symbols; ++a) v.add_symbol(std::string(1, static_cast<char>('a' + a)));
    for (std::size_t s = 0; s < params.states; ++s) v.add_state("s" + std::to_string(s));
    v.set_initial(0);
    for (StateId s = 0; s < params.states; ++s) v.set_final(s, (rng() >> 63) != 0);

    std::vector<Label> labels;
    for (Symbol a = 0; a < params.symbols; ++a) labels.emplace_back(a);
    labels.push_back(Label::epsilon());
    for (StateId src = 0; src < params.states; ++src)
        for (Label label : labels)
            for (StateId dst = 0; dst < params.states; ++dst) {
                if (!coin()) continue;
                Vector e;
                for (std::size_t k = 0; k < params.dim; ++k) e.emplace_back(effect());
                v.add_transition(src, label, std::move(e), dst);
            }
    return v;
}

}  // namespace uvass
