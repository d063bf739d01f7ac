#include <catch2/catch_amalgamated.hpp>

#include "uvass/bounds.hpp"
#include "uvass/generators.hpp"

using namespace uvass;

namespace {

// Test-side evaluations, written from the formulas with plain loops.
Integer power(Integer base, unsigned long exp)
{
    Integer r = 1;
    for (unsigned long i = 0; i < exp; ++i) r *= base;
    return r;
}

Integer expected_A(long m, unsigned long d, long n)
{
    return power(Integer(2 * n * n * (m + 1) * (m + 1)), static_cast<unsigned long>(power(4 * d, d - 1).get_ui()));
}

Integer expected_omega(long m, unsigned long d, long n)
{
    Integer base = 4 * n * n * n * n * (m + 1) * (m + 1);
    unsigned long e = power(8 * d, 2 * d - 1).get_ui();
    return m * power(m * power(base, e) + 1, d);
}

}  // namespace

TEST_CASE("rackoff bound examples")
{
    CHECK(rackoff_bound(0, 1, 1) == 2);
    CHECK(rackoff_bound(1, 1, 2) == 32);
    CHECK(rackoff_bound(1, 2, 1) == 16777216);
}

TEST_CASE("rackoff bound matches plain evaluation")
{
    for (long m = 0; m <= 3; ++m)
        for (unsigned long d = 1; d <= 2; ++d)
            for (long n = 1; n <= 3; ++n) CHECK(rackoff_bound(m, d, n) == expected_A(m, d, n));
}

TEST_CASE("report for a one-state one-counter net")
{
    Vass v(1);
    v.add_symbol("a");
    StateId q = v.add_state("q");
    v.set_initial(q);
    v.add_transition(q, Label(0), {1}, q);
    BoundReport r = bounds_report(v);
    CHECK(r.A == 8);
    CHECK(r.B == power(32, 8));
    CHECK(r.C == r.B + 1);
    CHECK(r.omega == Integer("4294967297"));
    CHECK(r.omega == power(16, 8) + 1);
}

TEST_CASE("zero norm collapses the derived bounds")
{
    CHECK(profile_threshold(0, 1, 1) == 0);
    CHECK(truncation_threshold(0, 1, 1) == 0);
    CHECK(omega_closed_form(0, 1, 1) == 0);
}

TEST_CASE("dimension zero is rejected")
{
    CHECK_THROWS_AS(rackoff_bound(1, 0, 1), std::domain_error);
    CHECK_THROWS_AS(omega_closed_form(1, 0, 1), std::domain_error);
}

TEST_CASE("each code path matches its own formula on the small grid")
{
    for (long m = 0; m <= 3; ++m)
        for (unsigned long d = 1; d <= 2; ++d)
            for (long n = 1; n <= 3; ++n) {
                CHECK(omega_closed_form(m, d, n) == expected_omega(m, d, n));
                Integer b = m * expected_A(m, 2 * d, 2 * n * n);
                CHECK(profile_threshold(m, d, n) == b);
                CHECK(truncation_threshold(m, d, n) == m * power(b + 1, d));
            }
}

TEST_CASE("log2 estimate brackets the exact omega")
{
    for (long m = 1; m <= 3; ++m)
        for (unsigned long d = 1; d <= 2; ++d)
            for (long n = 1; n <= 3; ++n) {
                Integer w = omega_closed_form(m, d, n);
                double bits = static_cast<double>(mpz_sizeinbase(w.get_mpz_t(), 2));
                double estimate = omega_log2_estimate(m, d, n);
                CHECK(estimate >= bits - 1);
                CHECK(estimate <= bits + 2 * static_cast<double>(d) + 2);
            }
}

TEST_CASE("oversized bounds throw instead of allocating")
{
    CHECK_THROWS_AS(omega_closed_form(1000, 3, 50, 1 << 16), BoundTooLarge);
    CHECK(decimal_digits(Integer("4294967297")) == 10);
}
