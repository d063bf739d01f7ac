#include "uvass/bounds.hpp"

#include <cmath>

namespace uvass {

namespace {

unsigned long small_pow(unsigned long base, unsigned long exp)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    if (!r.fits_ulong_p()) throw BoundTooLarge("bound exponent does not fit a machine word");
    return r.get_ui();
}

Integer checked_pow(const Integer& base, unsigned long exp, std::size_t max_bits)
{
    if (base <= 1 || exp == 0) {
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
        return r;
    }
    double bits = static_cast<double>(mpz_sizeinbase(base.get_mpz_t(), 2)) * static_cast<double>(exp);
    if (bits > static_cast<double>(max_bits))
        throw BoundTooLarge("bound needs about " + std::to_string(static_cast<long long>(bits)) +
                            " bits, limit is " + std::to_string(max_bits));
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

void require_dim(std::size_t dim)
{
    if (dim == 0) throw std::domain_error("bounds are defined for dimension >= 1 only");
}

}  // namespace

Integer rackoff_bound(const Integer& norm, std::size_t dim, const Integer& states, std::size_t max_bits)
{
    require_dim(dim);
    if (states < 1) throw std::domain_error("bounds need at least one state");
    if (norm < 0) throw std::domain_error("norm is non-negative");
    Integer m1 = norm + 1;
    Integer base = 2 * states * states * m1 * m1;
    unsigned long exponent = small_pow(4 * dim, dim - 1);
    return checked_pow(base, exponent, max_bits);
}

Integer profile_threshold(const Integer& norm, std::size_t dim, const Integer& states,
                          std::size_t max_bits)
{
    require_dim(dim);
    if (norm == 0) return 0;
    return norm * rackoff_bound(norm, 2 * dim, 2 * states * states, max_bits);
}

Integer truncation_threshold(const Integer& norm, std::size_t dim, const Integer& states,
                             std::size_t max_bits)
{
    require_dim(dim);
    if (norm == 0) return 0;
    Integer b = profile_threshold(norm, dim, states, max_bits);
    return norm * checked_pow(b + 1, dim, max_bits);
}

Integer omega_closed_form(const Integer& norm, std::size_t dim, const Integer& states,
                          std::size_t max_bits)
{
    require_dim(dim);
    if (norm == 0) return 0;
    Integer m1 = norm + 1;
    Integer n2 = states * states;
    Integer base = 4 * n2 * n2 * m1 * m1;
    unsigned long exponent = small_pow(8 * dim, 2 * dim - 1);
    Integer inner = norm * checked_pow(base, exponent, max_bits) + 1;
    return norm * checked_pow(inner, dim, max_bits);
}

double omega_log2_estimate(const Integer& norm, std::size_t dim, const Integer& states)
{
    require_dim(dim);
    if (norm == 0) return 0.0;
    double m = norm.get_d();
    double n = states.get_d();
    double log_base = std::log2(4.0) + 4 * std::log2(n) + 2 * std::log2(m + 1);
    double exponent = std::pow(8.0 * static_cast<double>(dim), 2.0 * static_cast<double>(dim) - 1);
    double inner = std::log2(m) + exponent * log_base + 1;
    return std::log2(m) + static_cast<double>(dim) * inner;
}

BoundReport bounds_report(const Vass& v, std::size_t max_bits)
{
    require_dim(v.dim());
    BoundReport r;
    r.norm = norm(v);
    r.dim = v.dim();
    r.states = v.num_states();
    Integer n = static_cast<unsigned long>(v.num_states());
    r.A = rackoff_bound(r.norm, r.dim, n, max_bits);
    r.B = profile_threshold(r.norm, r.dim, n, max_bits);
    r.C = truncation_threshold(r.norm, r.dim, n, max_bits);
    r.omega = omega_closed_form(r.norm, r.dim, n, max_bits);
    return r;
}

std::size_t decimal_digits(const Integer& x)
{
    return Integer(abs(x)).get_str().size();
}

}  // namespace uvass
