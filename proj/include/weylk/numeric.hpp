#pragma once

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

#include "weylk/errors.hpp"

namespace weylk {

/// Arbitrary-precision integer.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar, always in lowest terms with positive denominator.
/// Every scalar in the kernel is one of these; there is no floating point
/// and no fixed-width fast path anywhere.
using Rational = boost::multiprecision::cpp_rational;

/// Index vectors sized by the signature (length ell <= a handful at desk
/// scale, so keep them inline).
using IntVec = boost::container::small_vector<std::int64_t, 4>;
using RatVec = boost::container::small_vector<Rational, 4>;

/// Serializes as "p/q", or "p" when the denominator is 1.
std::string rat_to_string(const Rational &x);

/// Parses "p" or "p/q" with q > 0. Throws ParseError on anything else.
Rational rat_from_string(const std::string &text);

/// n! as an exact integer.
Integer factorial_int(std::int64_t n);

/// n! as a Rational (the scalar type used throughout the formulas).
Rational factorial(std::int64_t n);

/// Falling factorial a(a-1)...(a-m+1); 1 for m = 0.
Rational falling_factorial(const Rational &a, std::int64_t m);

/// Generalized binomial coefficient: falling_factorial(a, m) / m!.
/// The upper argument may be any rational, including negative integers.
Rational gen_binomial(const Rational &a, std::int64_t m);

/// x^k with k >= 0 and the limit convention 0^0 = 1.
Rational rat_pow(const Rational &x, std::int64_t k);

/// x^k / k! for k >= 0 (0^0 = 1), and 0 for k <= -1.  This single function
/// carries both limit conventions used by the cocycle formulas; every
/// delta-collapse in the gamma factor routes through it.
Rational powdiv(const Rational &x, std::int64_t k);

/// Product of componentwise binomial coefficients prod_p C(mu_p, lam_p);
/// 0 as soon as some lam_p exceeds mu_p.  Entries must be nonnegative.
Integer multi_binomial(const IntVec &mu, const IntVec &lam);

/// Stirling number of the second kind: coordinates of the power x^n in the
/// falling-factorial basis, x^n = sum_k stirling2(n, k) [x]_k.
Integer stirling2(std::int64_t n, std::int64_t k);

/// Entry sum of a multi-index.
std::int64_t level(const IntVec &v);

/// Total order on Z^ell: compare levels first; on equal levels the vector
/// with the smaller entry at the first differing coordinate is smaller.
std::strong_ordering compare_order(const IntVec &u, const IntVec &v);

} // namespace weylk
