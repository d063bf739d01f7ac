// bounds.hpp -- exact evaluation of the run-length and truncation bounds
//
//   A(M,d,n) = (2 n^2 (M+1)^2)^((4d)^(d-1))     short accepting runs
//   B(M,d,n) = M * A(M, 2d, 2n^2)               profile threshold
//   C(M,d,n) = M * (B(M,d,n) + 1)^d             truncation threshold
//   omega    = M * (M * (4 n^4 (M+1)^2)^((8d)^(2d-1)) + 1)^d
//
// omega is the closed-form expansion used for the profile automaton; C is
// computed from the definitions.  The values are doubly exponential, so
// every evaluation refuses results wider than `max_bits` instead of trying
// to allocate them.

#ifndef UVASS_BOUNDS_HPP
#define UVASS_BOUNDS_HPP

#include <cstddef>
#include <stdexcept>

#include "uvass/model.hpp"

namespace uvass {

/// Thrown when a bound would exceed the configured bit budget.
class BoundTooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr std::size_t kDefaultBoundBits = std::size_t{1} << 26;

Integer rackoff_bound(const Integer& norm, std::size_t dim, const Integer& states,
                      std::size_t max_bits = kDefaultBoundBits);
Integer profile_threshold(const Integer& norm, std::size_t dim, const Integer& states,
                          std::size_t max_bits = kDefaultBoundBits);
Integer truncation_threshold(const Integer& norm, std::size_t dim, const Integer& states,
                             std::size_t max_bits = kDefaultBoundBits);
Integer omega_closed_form(const Integer& norm, std::size_t dim, const Integer& states,
                          std::size_t max_bits = kDefaultBoundBits);

/// Cheap upper estimate of log2(omega); never allocates the value itself.
double omega_log2_estimate(const Integer& norm, std::size_t dim, const Integer& states);

struct BoundReport {
    Integer norm;
    std::size_t dim = 0;
    std::size_t states = 0;
    Integer A;
    Integer B;
    Integer C;
    Integer omega;
};

/// Bounds for `v`.  Requires dim >= 1 (throws std::domain_error otherwise).
BoundReport bounds_report(const Vass& v, std::size_t max_bits = kDefaultBoundBits);

std::size_t decimal_digits(const Integer& x);

}  // namespace uvass

#endif
