#include "sforge/polybasis.hpp"

#include <algorithm>
#include <sstream>

#include "sforge/stirling.hpp"

namespace sforge {

namespace {

void trim_zeros(std::vector<Rational>& c) {
    while (!c.empty() && c.back().is_zero())
        c.pop_back();
}

std::optional<unsigned> degree_of(const std::vector<Rational>& c) {
    if (c.empty())
        return std::nullopt;
    return static_cast<unsigned>(c.size() - 1);
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(unsigned k, const Rational& c) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

Rational Polynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational();
}

std::optional<unsigned> Polynomial::degree() const { return degree_of(coeffs_); }

void Polynomial::trim() { trim_zeros(coeffs_); }

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    std::vector<Rational> out(p.coeffs_.begin(), p.coeffs_.end());
    for (auto& v : out)
        v *= c;
    return Polynomial(std::move(out));
}

Polynomial derivative(const Polynomial& p) {
    auto c = p.coeffs();
    if (c.size() <= 1)
        return {};
    std::vector<Rational> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        out[i - 1] = Rational(static_cast<long>(i)) * c[i];
    return Polynomial(std::move(out));
}

Polynomial compose(const Polynomial& p, const Polynomial& q) {
    Polynomial r;
    auto c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        r = r * q + Polynomial::constant(c[i]);
    return r;
}

Rational evaluate(const Polynomial& p, const Rational& x) {
    Rational r;
    auto c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        r = r * x + c[i];
    return r;
}

std::string format_polynomial(const Polynomial& p, char var) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    auto c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero())
            continue;
        Rational mag = c[i].sign() < 0 ? -c[i] : c[i];
        if (first)
            os << (c[i].sign() < 0 ? "-" : "");
        else
            os << (c[i].sign() < 0 ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != Rational(1))
            os << mag << (mag.is_integer() ? "" : "*");
        os << var;
        if (i > 1)
            os << '^' << i;
    }
    return os.str();
}

FallingFactorialExpansion::FallingFactorialExpansion(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    trim_zeros(coeffs_);
}

Rational FallingFactorialExpansion::coefficient(std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : Rational();
}

std::optional<unsigned> FallingFactorialExpansion::degree() const { return degree_of(coeffs_); }

Polynomial falling_factorial_poly(unsigned k) {
    Polynomial r = Polynomial::constant(1);
    for (unsigned j = 0; j < k; ++j)
        r = r * Polynomial({Rational(-static_cast<long>(j)), Rational(1)});
    return r;
}

FallingFactorialExpansion power_to_falling(unsigned m) {
    const Triangle s2 = second_kind_table(m);
    std::vector<Rational> c;
    for (const auto& v : s2.row(m))
        c.emplace_back(v);
    return FallingFactorialExpansion(std::move(c));
}

Polynomial falling_to_power(unsigned m) {
    const Triangle s1 = signed_first_kind_table(m);
    std::vector<Rational> c;
    for (const auto& v : s1.row(m))
        c.emplace_back(v);
    return Polynomial(std::move(c));
}

FallingFactorialExpansion expand_in_falling_basis(const Polynomial& p) {
    const auto deg = p.degree();
    if (!deg)
        return {};
    const Triangle s1 = signed_first_kind_table(*deg);
    // c_k = sum_{n >= k} a_n s(n, k) with s(n, n) = 1: solve from the top.
    std::vector<Rational> a(*deg + 1);
    for (unsigned k = *deg + 1; k-- > 0;) {
        Rational v = p.coefficient(k);
        for (unsigned n = k + 1; n <= *deg; ++n)
            v -= a[n] * Rational(s1.at(n, k));
        a[k] = v;
    }
    return FallingFactorialExpansion(std::move(a));
}

Polynomial collapse_falling_basis(const FallingFactorialExpansion& a) {
    const auto deg = a.degree();
    if (!deg)
        return {};
    const Triangle s1 = signed_first_kind_table(*deg);
    std::vector<Rational> c(*deg + 1);
    for (unsigned n = 0; n <= *deg; ++n) {
        if (a.coefficient(n).is_zero())
            continue;
        for (unsigned k = 0; k <= n; ++k)
            c[k] += a.coefficient(n) * Rational(s1.at(n, k));
    }
    return Polynomial(std::move(c));
}

}  // namespace sforge
