#include <catch2/catch_amalgamated.hpp>

#include <deque>
#include <set>

#include "support/corpus.hpp"
#include "uvass/bounds.hpp"
#include "uvass/coverability.hpp"
#include "uvass/semantics.hpp"

using namespace uvass;

namespace {

Vass step_down()
{
    return parse_vass("vass 1\ndim 1\nalphabet a\nstates q f\ninitial q\nfinal f\ntrans q a -1 f\n");
}

enum class Forward { reached, unreachable, cap };

// Plain forward exploration without pruning; the counter ceiling keeps it
// finite, so only "reached" and "unreachable below the ceiling" are sure.
Forward forward_oracle(const Vass& v, long ceiling, std::size_t cap)
{
    std::set<Configuration> seen{v.initial_configuration()};
    std::deque<Configuration> queue{v.initial_configuration()};
    bool clipped = false;
    while (!queue.empty()) {
        Configuration c = queue.front();
        queue.pop_front();
        if (v.is_final(c.state)) return Forward::reached;
        for (TransitionId t : v.outgoing(c.state)) {
            const Transition& tr = v.transition(t);
            Configuration next{tr.dst, c.counters};
            bool ok = true;
            for (std::size_t k = 0; k < v.dim(); ++k) {
                next.counters[k] += tr.effect[k];
                if (next.counters[k] < 0) ok = false;
                if (next.counters[k] > ceiling) {
                    ok = false;
                    clipped = true;
                }
            }
            if (!ok || !seen.insert(next).second) continue;
            if (seen.size() > cap) return Forward::cap;
            queue.push_back(std::move(next));
        }
    }
    return clipped ? Forward::cap : Forward::unreachable;
}

}  // namespace

TEST_CASE("backward coverability examples")
{
    Vass v = step_down();
    UpwardBasis targets(v.num_states());
    targets.insert(Configuration{1, {0}});
    CHECK_FALSE(backward_coverable(v, targets, Configuration{0, {0}}));
    CHECK(backward_coverable(v, targets, Configuration{0, {1}}));
}

TEST_CASE("upward basis keeps minimal elements")
{
    UpwardBasis b(1);
    CHECK(b.insert(Configuration{0, {2, 3}}));
    CHECK_FALSE(b.insert(Configuration{0, {2, 4}}));
    CHECK(b.insert(Configuration{0, {1, 5}}));
    CHECK(b.insert(Configuration{0, {1, 1}}));
    CHECK(b.size() == 1);
    CHECK(b.covers(Configuration{0, {7, 1}}));
    CHECK_FALSE(b.covers(Configuration{0, {0, 9}}));
}

TEST_CASE("emptiness examples")
{
    auto acc = emptiness(parse_vass("vass 1\ndim 0\nalphabet a\nstates q\ninitial q\nfinal q\n"));
    CHECK_FALSE(acc.empty);
    REQUIRE(acc.witness);
    CHECK(acc.witness->empty());

    CHECK(emptiness(parse_vass("vass 1\ndim 0\nalphabet a\nstates q\ninitial q\nfinal\ntrans q a q\n")).empty);
    CHECK(emptiness(step_down()).empty);
}

TEST_CASE("membership examples")
{
    Vass loops = parse_vass("vass 1\ndim 0\nalphabet a b\nstates q\ninitial q\nfinal q\ntrans q a q\ntrans q b q\n");
    CHECK(membership(loops, parse_word(loops, "aba")));
    Vass eps_only = parse_vass("vass 1\ndim 0\nalphabet a\nstates q\ninitial q\nfinal q\n");
    CHECK_FALSE(membership(eps_only, {0}));

    Vass gadget = gen_partition({2, 3, 5});
    CHECK_FALSE(membership(gadget, parse_word(gadget, "110")));
    CHECK(membership(gadget, parse_word(gadget, "100")));
}

TEST_CASE("bounded-oca sink coverability follows the bounded run")
{
    auto inst = corpus::one_step_instance(1);
    Vass b = gen_bounded_oca(inst);
    UpwardBasis targets(b.num_states());
    targets.insert(Configuration{*b.find_state("bot"), {0, 0}});
    CHECK(backward_coverable(b, targets, b.initial_configuration()));
    CHECK(corpus::bounded_run_exists(inst));

    auto none = corpus::one_step_instance(0);
    Vass b0 = gen_bounded_oca(none);
    UpwardBasis t0(b0.num_states());
    t0.insert(Configuration{*b0.find_state("bot"), {0, 0}});
    CHECK_FALSE(backward_coverable(b0, t0, b0.initial_configuration()));
}

TEST_CASE("backward coverability agrees with forward exploration")
{
    std::size_t conclusive = 0;
    for (std::uint64_t seed = 0; seed < corpus::kRandomSeeds; ++seed) {
        Vass v = corpus::random_instance(seed);
        bool empty = emptiness(v).empty;
        switch (forward_oracle(v, 12, 20000)) {
        case Forward::reached:
            CHECK_FALSE(empty);
            ++conclusive;
            break;
        case Forward::unreachable:
            CHECK(empty);
            ++conclusive;
            break;
        case Forward::cap:
            break;
        }
    }
    CHECK(conclusive > corpus::kRandomSeeds / 2);
}

TEST_CASE("emptiness witnesses are accepting and within the length bound")
{
    for (std::uint64_t seed = 0; seed < corpus::kRandomSeeds; ++seed) {
        Vass v = corpus::random_instance(seed);
        EmptinessResult e = emptiness(v);
        if (e.empty) continue;
        REQUIRE(e.witness);
        CHECK(is_accepting_run(v, v.initial_configuration(), *e.witness));
        if (v.dim() == 0) continue;
        Integer a = rackoff_bound(norm(v), v.dim(), static_cast<unsigned long>(v.num_states()));
        if (a <= 1000000) CHECK(Integer(static_cast<unsigned long>(e.witness->size())) <= a);
    }
}

TEST_CASE("membership is monotone in the start counters")
{
    for (std::uint64_t seed = 0; seed < corpus::kRandomSeeds; seed += 2) {
        Vass v = corpus::random_instance(seed);
        if (v.dim() == 0) continue;
        Configuration low = v.initial_configuration();
        Configuration high = low;
        for (auto& x : high.counters) x += 2;
        for_each_word(v.num_symbols(), 3, [&](const Word& w) {
            if (accepts_from(v, w, low)) CHECK(accepts_from(v, w, high));
            return false;
        });
    }
}

TEST_CASE("line product indexes states by position")
{
    Vass v = parse_vass("vass 1\ndim 0\nalphabet a\nstates q f\ninitial q\nfinal f\ntrans q a f\n");
    std::vector<TransitionId> origin;
    Vass p = line_product(v, {0}, &origin);
    CHECK(p.num_states() == 4);
    CHECK(p.state_name(0 * 2 + 1) == "s0_1");
    CHECK(p.is_final(1 * 2 + 1));
    CHECK_FALSE(p.is_final(1 * 2 + 0));
    REQUIRE(origin.size() == p.num_transitions());
}
