#include "sforge/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "sforge/errors.hpp"
#include "sforge/stirling.hpp"

namespace sforge {

Polynomial exponential_poly(unsigned n) {
    const Triangle s2 = second_kind_table(n);
    std::vector<Rational> c;
    for (const auto& v : s2.row(n))
        c.emplace_back(v);
    return Polynomial(std::move(c));
}

Polynomial geometric_poly(unsigned m) {
    const Triangle s2 = second_kind_table(m);
    std::vector<Rational> c(m + 1);
    Integer nf = 1;
    for (unsigned n = 0; n <= m; ++n) {
        if (n > 0)
            nf *= n;
        c[n] = Rational(Integer(s2.at(m, n) * nf));
    }
    return Polynomial(std::move(c));
}

Polynomial euler_poly(unsigned m) {
    const Rational minus_half(Integer(-1), Integer(2));
    std::vector<Rational> c(m + 1);
    for (unsigned k = 0; k <= m; ++k)
        c[m - k] = Rational(binomial(m, k)) * evaluate(geometric_poly(k), minus_half);
    return Polynomial(std::move(c));
}

Polynomial eulerian_poly(unsigned m) {
    const Polynomial one_minus_x({Rational(1), Rational(-1)});
    const Polynomial omega = geometric_poly(m);
    Polynomial sum;
    Polynomial power = Polynomial::constant(1);  // (1-x)^(m-n), built from n = m down
    for (unsigned n = m + 1; n-- > 0;) {
        sum += Polynomial::monomial(n, omega.coefficient(n)) * power;
        power = power * one_minus_x;
    }
    return sum;
}

namespace {

Rational bernoulli_from_row(const Triangle& s2, unsigned m) {
    Rational sum;
    Integer nf = 1;
    for (unsigned n = 0; n <= m; ++n) {
        if (n > 0)
            nf *= n;
        Rational term(Integer(nf * s2.at(m, n)), Integer(n + 1));
        sum += (n % 2 == 0) ? term : -term;
    }
    return sum;
}

}  // namespace

Rational bernoulli_number(unsigned m) { return bernoulli_from_row(second_kind_table(m), m); }

std::vector<Rational> bernoulli_numbers(unsigned max_m) {
    const Triangle s2 = second_kind_table(max_m);
    std::vector<Rational> out;
    out.reserve(max_m + 1);
    for (unsigned m = 0; m <= max_m; ++m)
        out.push_back(bernoulli_from_row(s2, m));
    return out;
}

Rational power_sum_bernoulli(unsigned m, unsigned n) {
    if (n == 0)
        throw std::invalid_argument("power_sum_bernoulli: n must be positive");
    const auto b = bernoulli_numbers(m);
    Rational sum;
    const Rational nn(static_cast<long>(n));
    for (unsigned k = 0; k <= m; ++k) {
        const Rational& bk = b[k];
        if (bk.is_zero())
            continue;
        sum += Rational(binomial(m + 1, k)) * bk * pow(nn, m + 1 - k);
    }
    sum /= Rational(static_cast<long>(m + 1));
    // The closed form sums k^m over 0 <= k < n; at m = 0 that includes 0^0 = 1.
    if (m == 0)
        sum -= Rational(1);
    return sum;
}

Integer power_sum_stirling(unsigned m, unsigned n) {
    if (n == 0)
        throw std::invalid_argument("power_sum_stirling: n must be positive");
    const Triangle s2 = second_kind_table(m);
    Integer sum = 0;
    Integer kf = 1;
    for (unsigned k = 0; k <= std::min(n, m); ++k) {
        if (k > 0)
            kf *= k;
        // sum_{p=1}^{n} C(p,k) is C(n+1,k+1) for k >= 1 but only n for k = 0,
        // which matters when m = 0 and S(0,0) = 1.
        const Integer weight = k == 0 ? Integer(n) : binomial(n + 1, k + 1);
        sum += weight * s2.at(m, k) * kf;
    }
    return sum;
}

Integer power_sum_naive(unsigned m, unsigned n) {
    Integer sum = 0;
    for (unsigned j = 1; j <= n; ++j)
        sum += pow(Integer(j), m);
    return sum;
}

namespace {

Integer power_via_stirling_upto(unsigned n, unsigned m, unsigned top) {
    const Triangle s2 = second_kind_table(m);
    Integer sum = 0;
    Integer kf = 1;
    for (unsigned k = 0; k <= top; ++k) {
        if (k > 0)
            kf *= k;
        if (k <= m)
            sum += binomial(n, k) * s2.at(m, k) * kf;
    }
    return sum;
}

}  // namespace

Integer power_via_stirling(unsigned n, unsigned m) {
    return power_via_stirling_upto(n, m, std::min(n, m));
}

Integer power_via_stirling_full(unsigned n, unsigned m) {
    return power_via_stirling_upto(n, m, n);
}

Integer alternating_power_sum(unsigned n, unsigned m) {
    Integer sum = 0;
    for (unsigned k = 0; k <= n; ++k) {
        Integer term = binomial(n, k) * pow(Integer(k), m);
        if (k % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

Rational alternating_affine_power_sum(unsigned n, unsigned m, const Rational& x,
                                      const Rational& y) {
    Rational sum;
    for (unsigned k = 0; k <= n; ++k) {
        const Rational base = x * Rational(static_cast<long>(k)) + y;
        Rational term = Rational(binomial(n, k)) * pow(base, m);
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

Rational alternating_affine_power_sum_stirling(unsigned n, unsigned m, const Rational& x,
                                               const Rational& y) {
    if (n > m)
        return {};
    const Triangle s2 = second_kind_table(m);
    Rational inner;
    for (unsigned j = n; j <= m; ++j)
        inner += Rational(Integer(binomial(m, j) * s2.at(j, n))) * pow(x, j) * pow(y, m - j);
    return Rational(Integer(sign_pow(n) * factorial(n))) * inner;
}

Rational alternating_poly_sum(unsigned n, const Polynomial& f) {
    Rational sum;
    for (unsigned k = 0; k <= n; ++k) {
        Rational term = Rational(binomial(n, k)) * evaluate(f, Rational(static_cast<long>(k)));
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

Rational alternating_poly_sum_stirling(unsigned n, const Polynomial& f) {
    const auto deg = f.degree();
    if (!deg || *deg < n)
        return {};
    const Triangle s2 = second_kind_table(*deg);
    Rational inner;
    for (unsigned m = n; m <= *deg; ++m)
        inner += f.coefficient(m) * Rational(s2.at(m, n));
    return Rational(Integer(sign_pow(n) * factorial(n))) * inner;
}

Integer sum_1_9_check(unsigned n) {
    const Integer lhs = alternating_power_sum(n, n + 1);
    // (-1)^n (n/2) (n+1)!; n (n+1)! is always even.
    Integer rhs = Integer(n) * factorial(n + 1) / 2;
    if (n % 2 == 1)
        rhs = -rhs;
    if (lhs != rhs)
        throw IdentityViolation("sum_1_9_check failed at n = " + std::to_string(n) + ": " +
                                lhs.get_str() + " != " + rhs.get_str());
    return lhs;
}

}  // namespace sforge
