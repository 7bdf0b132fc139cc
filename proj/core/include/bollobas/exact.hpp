#pragma once

// Exact integer/rational arithmetic and the weighted sums attached to
// d-tuple families. Everything here is exact; there is no floating point.

#include "bollobas/family.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <string_view>

namespace bollobas {

using BigInteger = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n!, memoized. The cache is shared and safe to fill from several threads.
BigInteger factorial(int n);

/// C(n, k); zero when k < 0 or k > n.
BigInteger binomial(int n, int k);

/// n! / (k_1! ... k_t! (n - sum k)!). Throws DomainError if any k_i < 0 or
/// sum k > n.
BigInteger multinomial(int n, std::span<const int> ks);

/// Multinomial of a tuple type over its own total: (sum a)! / prod a_k!.
BigInteger multinomial(const TupleType& t);

/// Sum over tuples of 1 / multinomial(s_i; type_i).
Rational bollobas_sum(const Family& f);

/// Sum over tuples of 1 / (C(s_i + d - 1, d - 1) * multinomial(s_i; type_i)).
Rational skew_sum(const Family& f);

/// d = 2 only: sum of 1 / ((1 + |A| + |B|) * C(|A| + |B|, |A|)).
Rational pair_weighted_sum(const Family& f);

/// Exact bound implied by the induction on d for Bollobás systems:
/// B(n, 2) = 1 and B(n, d) = C(n + d - 2, d - 2) / (d - 1) + (d - 2) B(n, d - 1).
Rational recursive_bound(int n, int d);

/// "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

/// Decimal rendering of r truncated toward zero to `digits` places, computed
/// with integer arithmetic so the text is platform independent.
std::string to_decimal(const Rational& r, int digits);

} // namespace bollobas
