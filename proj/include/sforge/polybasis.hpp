#pragma once

// Dense exact polynomials over Rational and the conversions between the
// power basis z^k and the falling-factorial basis P_k(z) = z(z-1)...(z-k+1).

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sforge/exactnum.hpp"

namespace sforge {

/// Power-basis polynomial.  coeffs()[i] is the coefficient of z^i.  The zero
/// polynomial has no coefficients and no degree.
class Polynomial {
public:
    Polynomial() = default;
    /// Trailing zeros are dropped.
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    /// c * z^k.
    static Polynomial monomial(unsigned k, const Rational& c = 1);

    std::span<const Rational> coeffs() const { return coeffs_; }
    /// Zero past the end.
    Rational coefficient(std::size_t i) const;
    std::optional<unsigned> degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

Polynomial derivative(const Polynomial& p);
/// p(q(z)).  Composing into the zero polynomial yields the constant p(0).
Polynomial compose(const Polynomial& p, const Polynomial& q);
/// Horner evaluation; the zero polynomial evaluates to 0.
Rational evaluate(const Polynomial& p, const Rational& x);

/// Ascending terms in `var`, e.g. "-1/2 + x" or "x + 14x^2".  Non-integral
/// coefficients are joined with '*' ("3/2*x^2").  The zero polynomial is "0".
std::string format_polynomial(const Polynomial& p, char var = 'x');

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << format_polynomial(p);
}

/// Coefficients on the falling-factorial basis: coeffs()[n] multiplies P_n.
class FallingFactorialExpansion {
public:
    FallingFactorialExpansion() = default;
    /// Trailing zeros are dropped.
    explicit FallingFactorialExpansion(std::vector<Rational> coeffs);

    std::span<const Rational> coeffs() const { return coeffs_; }
    Rational coefficient(std::size_t n) const;
    std::optional<unsigned> degree() const;

    friend bool operator==(const FallingFactorialExpansion&,
                           const FallingFactorialExpansion&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// P_k(z) as the product of (z - j) for j = 0..k-1; P_0 = 1.
Polynomial falling_factorial_poly(unsigned k);

/// z^m on the falling-factorial basis; entry n is S(m, n).
FallingFactorialExpansion power_to_falling(unsigned m);

/// P_m(z) on the power basis; entry k is the signed first-kind s(m, k).
Polynomial falling_to_power(unsigned m);

/// Solves sum_n a_n P_n(z) = p(z) by back substitution against the signed
/// first-kind triangle.
FallingFactorialExpansion expand_in_falling_basis(const Polynomial& p);

/// sum_n a_n P_n(z) on the power basis, using the signed first-kind triangle.
Polynomial collapse_falling_basis(const FallingFactorialExpansion& a);

}  // namespace sforge
