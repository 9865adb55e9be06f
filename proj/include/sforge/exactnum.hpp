#pragma once

// Exact integer and rational arithmetic, binomial coefficients and the
// binomial transform pair.

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace sforge {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Exact fraction kept in canonical form: den > 0, gcd(|num|, den) = 1,
/// zero stored as 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}
    Rational(int v) : value_(static_cast<long>(v)) {}
    Rational(const Integer& v) : value_(v) {}
    /// Throws std::domain_error when den is zero.
    Rational(const Integer& num, const Integer& den);

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "p" when integral, otherwise "p/q".
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

/// base^exp with 0^0 = 1.
Integer pow(const Integer& base, unsigned exp);
/// base^exp with 0^0 = 1.
Rational pow(const Rational& base, unsigned exp);

/// +1 for even k, -1 for odd k.
inline int sign_pow(unsigned k) { return (k % 2 == 0) ? 1 : -1; }

/// n! exactly.
Integer factorial(unsigned n);

/// C(n, k) by the multiplicative formula with exact division.  Zero when
/// k < 0 or k > n.
Integer binomial(unsigned n, long k);

/// Sum of C(p, k) for p = k..n.  Throws std::invalid_argument when k > n.
Integer hockey_stick(unsigned n, unsigned k);

/// b_n = sum_{k<=n} C(n,k) a_k.  Throws std::invalid_argument on empty input.
std::vector<Rational> binomial_transform(std::span<const Rational> a);

/// a_n = sum_{k<=n} C(n,k) (-1)^(n-k) b_k.  Throws std::invalid_argument on
/// empty input.
std::vector<Rational> inverse_binomial_transform(std::span<const Rational> b);

}  // namespace sforge
