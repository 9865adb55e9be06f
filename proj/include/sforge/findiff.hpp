#pragma once

// Forward differences of polynomials and Newton-series coefficients.

#include "sforge/exactnum.hpp"
#include "sforge/polybasis.hpp"

namespace sforge {

/// f(z+1) - f(z).
Polynomial delta(const Polynomial& f);

/// sum_{k<=n} C(n,k) (-1)^(n-k) f(k).
Rational iterated_delta_at_zero(const Polynomial& f, unsigned n);

/// Applies delta n times, then evaluates at 0.
Rational iterated_delta_by_operator(const Polynomial& f, unsigned n);

/// a_k = (delta^k f)(0) / k!, obtained from repeated differencing.
FallingFactorialExpansion newton_coefficients(const Polynomial& f);

/// sum_k a_k P_k(z), each P_k expanded as a product of linear factors.
Polynomial newton_reconstruct(const FallingFactorialExpansion& a);

}  // namespace sforge
