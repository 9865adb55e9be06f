#pragma once

// Polynomial and number families built on the second-kind Stirling triangle,
// together with power sums and the alternating binomial sums they evaluate.
//
// Every construction here reads S(m, n) from one table.  Generating-function
// definitions of the same objects live in series.hpp and serve as oracles.

#include <vector>

#include "sforge/exactnum.hpp"
#include "sforge/polybasis.hpp"

namespace sforge {

/// Exponential (Bell) polynomial: sum_k S(n,k) x^k.
Polynomial exponential_poly(unsigned n);

/// Geometric polynomial: sum_n S(m,n) n! x^n.
Polynomial geometric_poly(unsigned m);

/// Euler polynomial E_m(x) = sum_k C(m,k) w_k(-1/2) x^(m-k), where w_k is the
/// geometric polynomial.
Polynomial euler_poly(unsigned m);

/// Eulerian polynomial A_m(x) = sum_n S(m,n) n! x^n (1-x)^(m-n).
Polynomial eulerian_poly(unsigned m);

/// B_m = sum_n (-1)^n n!/(n+1) S(m,n).  B_1 = -1/2 in this convention.
Rational bernoulli_number(unsigned m);

/// B_0..B_max_m from a single Stirling table.
std::vector<Rational> bernoulli_numbers(unsigned max_m);

/// 1^m + ... + (n-1)^m from the Bernoulli-number closed form.
/// Throws std::invalid_argument when n == 0.
Rational power_sum_bernoulli(unsigned m, unsigned n);

/// 1^m + ... + n^m as sum_k C(n+1,k+1) S(m,k) k!.
/// Throws std::invalid_argument when n == 0.
Integer power_sum_stirling(unsigned m, unsigned n);

/// 1^m + ... + n^m by direct summation.
Integer power_sum_naive(unsigned m, unsigned n);

/// n^m as sum_k C(n,k) S(m,k) k!, summed over k <= min(n, m).
Integer power_via_stirling(unsigned n, unsigned m);

/// The same sum taken over all k <= n, including the vanishing S(m,k) terms
/// with k > m.
Integer power_via_stirling_full(unsigned n, unsigned m);

/// sum_{k<=n} C(n,k) (-1)^k k^m with 0^0 = 1.
Integer alternating_power_sum(unsigned n, unsigned m);

/// sum_{k<=n} C(n,k) (-1)^k (xk + y)^m with 0^0 = 1.
Rational alternating_affine_power_sum(unsigned n, unsigned m, const Rational& x,
                                      const Rational& y);

/// (-1)^n n! sum_{j=n}^{m} C(m,j) x^j y^(m-j) S(j,n): the Stirling form of
/// alternating_affine_power_sum.
Rational alternating_affine_power_sum_stirling(unsigned n, unsigned m, const Rational& x,
                                               const Rational& y);

/// sum_{k<=n} C(n,k) (-1)^k f(k).
Rational alternating_poly_sum(unsigned n, const Polynomial& f);

/// (-1)^n n! sum_m c_m S(m,n) over the coefficients of f.
Rational alternating_poly_sum_stirling(unsigned n, const Polynomial& f);

/// Returns sum_{k<=n} C(n,k) (-1)^k k^(n+1) after checking that it equals
/// (-1)^n (n/2) (n+1)!.  Throws IdentityViolation otherwise.
Integer sum_1_9_check(unsigned n);

}  // namespace sforge
