#include "sforge/exactnum.hpp"

#include <stdexcept>

namespace sforge {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("not a rational: '" + std::string(text) + "'");
    };
    const auto parse_int = [&](std::string_view s) {
        std::string_view digits = s;
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
            digits.remove_prefix(1);
        if (digits.empty())
            throw bad();
        for (char c : digits)
            if (c < '0' || c > '9')
                throw bad();
        std::string owned(s.front() == '+' ? s.substr(1) : s);
        return Integer(owned, 10);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero())
        throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Integer pow(const Integer& base, unsigned exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational pow(const Rational& base, unsigned exp) {
    return Rational(pow(base.num(), exp), pow(base.den(), exp));
}

Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i)
        r *= i;
    return r;
}

Integer binomial(unsigned n, long k) {
    if (k < 0 || k > static_cast<long>(n))
        return 0;
    unsigned kk = static_cast<unsigned>(k);
    if (kk > n - kk)
        kk = n - kk;
    Integer r = 1;
    // r = C(n-kk+i, i) after step i, so each division is exact.
    for (unsigned i = 1; i <= kk; ++i) {
        r *= n - kk + i;
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
    }
    return r;
}

Integer hockey_stick(unsigned n, unsigned k) {
    if (k > n)
        throw std::invalid_argument("hockey_stick: k > n");
    Integer sum = 0;
    for (unsigned p = k; p <= n; ++p)
        sum += binomial(p, k);
    return sum;
}

std::vector<Rational> binomial_transform(std::span<const Rational> a) {
    if (a.empty())
        throw std::invalid_argument("binomial_transform: empty sequence");
    std::vector<Rational> b(a.size());
    for (unsigned n = 0; n < a.size(); ++n) {
        Rational sum;
        for (unsigned k = 0; k <= n; ++k)
            sum += Rational(binomial(n, k)) * a[k];
        b[n] = sum;
    }
    return b;
}

std::vector<Rational> inverse_binomial_transform(std::span<const Rational> b) {
    if (b.empty())
        throw std::invalid_argument("inverse_binomial_transform: empty sequence");
    std::vector<Rational> a(b.size());
    for (unsigned n = 0; n < b.size(); ++n) {
        Rational sum;
        for (unsigned k = 0; k <= n; ++k)
            sum += Rational(Integer(binomial(n, k) * sign_pow(n - k))) * b[k];
        a[n] = sum;
    }
    return a;
}

}  // namespace sforge
