#include "sforge/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sforge/errors.hpp"
#include "sforge/families.hpp"
#include "sforge/stirling.hpp"

namespace sforge {

TruncatedSeries::TruncatedSeries(unsigned order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, unsigned order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::variable(unsigned order) {
    TruncatedSeries s(order);
    if (order >= 1)
        s.coeffs_[1] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, unsigned order) {
    auto c = p.coeffs();
    return TruncatedSeries(order, std::vector<Rational>(c.begin(), c.end()));
}

const Rational& TruncatedSeries::coefficient(unsigned i) const {
    if (i > order())
        throw std::out_of_range("coefficient " + std::to_string(i) + " beyond series order " +
                                std::to_string(order()));
    return coeffs_[i];
}

TruncatedSeries TruncatedSeries::truncated(unsigned new_order) const {
    if (new_order > order())
        throw std::invalid_argument("cannot extend a truncated series");
    return TruncatedSeries(new_order, std::vector<Rational>(coeffs_.begin(),
                                                            coeffs_.begin() + new_order + 1));
}

TruncatedSeries TruncatedSeries::shifted(unsigned k) const {
    TruncatedSeries r(order());
    for (unsigned i = 0; i + k <= order(); ++i)
        r.coeffs_[i + k] = coeffs_[i];
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (unsigned i = 0; i <= r.order(); ++i)
        r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    const unsigned n = r.order();
    for (unsigned i = 0; i <= n; ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (unsigned j = 0; i + j <= n; ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s) {
    TruncatedSeries r = s;
    for (auto& v : r.coeffs_)
        v *= c;
    return r;
}

namespace {

void require_zero_constant(const TruncatedSeries& s, const char* what) {
    if (!s.coefficient(0).is_zero())
        throw ConstantTermError(std::string(what) + ": constant term must be zero, got " +
                                s.coefficient(0).to_string());
}

Rational index(unsigned k) { return Rational(static_cast<long>(k)); }

}  // namespace

TruncatedSeries series_exp(const TruncatedSeries& s) {
    require_zero_constant(s, "series_exp");
    const unsigned n = s.order();
    std::vector<Rational> e(n + 1);
    e[0] = 1;
    // E' = S' E, so i e_i = sum_k k s_k e_{i-k}.
    for (unsigned i = 1; i <= n; ++i) {
        Rational acc;
        for (unsigned k = 1; k <= i; ++k)
            if (!s.coefficient(k).is_zero())
                acc += index(k) * s.coefficient(k) * e[i - k];
        e[i] = acc / index(i);
    }
    return TruncatedSeries(n, std::move(e));
}

TruncatedSeries series_log1p(const TruncatedSeries& s) {
    require_zero_constant(s, "series_log1p");
    const unsigned n = s.order();
    std::vector<Rational> l(n + 1);
    // (1 + S) L' = S', so i l_i = i s_i - sum_{k<i} k l_k s_{i-k}.
    for (unsigned i = 1; i <= n; ++i) {
        Rational acc = index(i) * s.coefficient(i);
        for (unsigned k = 1; k < i; ++k)
            acc -= index(k) * l[k] * s.coefficient(i - k);
        l[i] = acc / index(i);
    }
    return TruncatedSeries(n, std::move(l));
}

TruncatedSeries series_reciprocal(const TruncatedSeries& s) {
    const Rational& c0 = s.coefficient(0);
    if (c0.is_zero())
        throw ConstantTermError("series_reciprocal: constant term is zero");
    const unsigned n = s.order();
    const Rational inv = Rational(1) / c0;
    std::vector<Rational> r(n + 1);
    r[0] = inv;
    for (unsigned i = 1; i <= n; ++i) {
        Rational acc;
        for (unsigned k = 1; k <= i; ++k)
            if (!s.coefficient(k).is_zero())
                acc += s.coefficient(k) * r[i - k];
        r[i] = -acc * inv;
    }
    return TruncatedSeries(n, std::move(r));
}

TruncatedSeries series_compose(const Polynomial& outer, const TruncatedSeries& inner) {
    require_zero_constant(inner, "series_compose");
    const unsigned n = inner.order();
    TruncatedSeries r(n);
    auto c = outer.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        r = r * inner + TruncatedSeries::constant(c[i], n);
    return r;
}

TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    require_zero_constant(inner, "series_compose");
    const unsigned n = std::min(outer.order(), inner.order());
    // Terms of outer beyond n only reach t^(n+1) and higher.
    auto c = outer.coeffs().first(n + 1);
    return series_compose(Polynomial(std::vector<Rational>(c.begin(), c.end())),
                          inner.truncated(n));
}

TruncatedSeries exp_series(unsigned order) {
    return series_exp(TruncatedSeries::variable(order));
}

TruncatedSeries egf_stirling2_column(unsigned n, unsigned order) {
    const TruncatedSeries base = exp_series(order) - TruncatedSeries::constant(1, order);
    TruncatedSeries r = TruncatedSeries::constant(1, order);
    for (unsigned i = 0; i < n; ++i)
        r = r * base;
    return Rational(Integer(1), factorial(n)) * r;
}

TruncatedSeries bell_egf(const Rational& x, unsigned order) {
    const TruncatedSeries base = exp_series(order) - TruncatedSeries::constant(1, order);
    return series_exp(x * base);
}

TruncatedSeries grunert_apply(const TruncatedSeries& s, unsigned m) {
    std::vector<Rational> c(s.coeffs().begin(), s.coeffs().end());
    for (unsigned k = 0; k < c.size(); ++k)
        c[k] *= Rational(pow(Integer(k), m));
    return TruncatedSeries(s.order(), std::move(c));
}

TruncatedSeries bernoulli_egf(unsigned order) {
    // (e^t - 1)/t = sum_k t^k / (k+1)!
    std::vector<Rational> c(order + 1);
    for (unsigned k = 0; k <= order; ++k)
        c[k] = Rational(Integer(1), factorial(k + 1));
    return series_reciprocal(TruncatedSeries(order, std::move(c)));
}

TruncatedSeries bernoulli_log_trick(unsigned order) {
    const TruncatedSeries u = exp_series(order) - TruncatedSeries::constant(1, order);
    TruncatedSeries sum(order);
    TruncatedSeries power = TruncatedSeries::constant(1, order);
    for (unsigned n = 0; n <= order; ++n) {
        const Rational w(Integer(sign_pow(n)), Integer(n + 1));
        sum = sum + w * power;
        power = power * u;
    }
    return sum;
}

TruncatedSeries euler_poly_egf(const Rational& x, unsigned order) {
    const TruncatedSeries ext = series_exp(x * TruncatedSeries::variable(order));
    const TruncatedSeries denom = exp_series(order) + TruncatedSeries::constant(1, order);
    return Rational(2) * ext * series_reciprocal(denom);
}

TruncatedSeries fermi_expansion(const Rational& lambda, const Rational& mu, unsigned order) {
    if (mu == Rational(-1))
        throw ConstantTermError("fermi_expansion: mu = -1 leaves no constant term");
    const TruncatedSeries elt = series_exp(lambda * TruncatedSeries::variable(order));
    const TruncatedSeries f =
        series_reciprocal(mu * elt + TruncatedSeries::constant(1, order));

    const Rational mu1 = mu + Rational(1);
    const Rational point = -mu / mu1;
    Rational lambda_pow = 1;
    Integer mf = 1;
    for (unsigned m = 0; m <= order; ++m) {
        if (m > 0) {
            lambda_pow *= lambda;
            mf *= m;
        }
        const Rational expected = lambda_pow / mu1 * evaluate(geometric_poly(m), point);
        const Rational actual = Rational(mf) * f.coefficient(m);
        if (expected != actual)
            throw IdentityViolation("fermi_expansion: coefficient " + std::to_string(m) +
                                    " is " + actual.to_string() + ", expected " +
                                    expected.to_string());
    }
    return f;
}

namespace {

TruncatedSeries power_ogf(unsigned m, unsigned order) {
    std::vector<Rational> c(order + 1);
    for (unsigned n = 0; n <= order; ++n)
        c[n] = Rational(pow(Integer(n), m));
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries one_minus_t(unsigned order) {
    return TruncatedSeries::constant(1, order) - TruncatedSeries::variable(order);
}

void compare_coefficients(VerificationReport& report, const std::string& label,
                          const TruncatedSeries& expected, const TruncatedSeries& actual,
                          unsigned through) {
    for (unsigned i = 0; i <= through; ++i)
        report.expect_equal(label + " coeff " + std::to_string(i), expected.coefficient(i),
                            actual.coefficient(i));
}

}  // namespace

VerificationReport ogf_power_check(unsigned m, unsigned order) {
    VerificationReport report;
    report.identity_id = "ogf-power";
    report.range_description = "m=" + std::to_string(m) + " order=" + std::to_string(order);
    const TruncatedSeries lhs = power_ogf(m, order);
    const TruncatedSeries inv = series_reciprocal(one_minus_t(order));
    const TruncatedSeries inner = TruncatedSeries::variable(order) * inv;
    const TruncatedSeries rhs = series_compose(geometric_poly(m), inner) * inv;
    compare_coefficients(report, "m=" + std::to_string(m), lhs, rhs, order);
    return report;
}

VerificationReport eulerian_ogf_check(unsigned m, unsigned order) {
    VerificationReport report;
    report.identity_id = "eulerian-ogf";
    report.range_description = "m=" + std::to_string(m) + " order=" + std::to_string(order);
    const TruncatedSeries lhs = power_ogf(m, order);
    TruncatedSeries denom = TruncatedSeries::constant(1, order);
    for (unsigned i = 0; i <= m; ++i)
        denom = denom * one_minus_t(order);
    const TruncatedSeries rhs =
        TruncatedSeries::from_polynomial(eulerian_poly(m), order) * series_reciprocal(denom);
    compare_coefficients(report, "m=" + std::to_string(m), lhs, rhs, order);
    return report;
}

TruncatedSeries inverse_factorial_partial_sum(unsigned m, unsigned K) {
    if (m == 0)
        throw std::invalid_argument("inverse factorial expansion needs m >= 1");
    const unsigned order = m + K + 1;
    const Triangle sigma = first_kind_table(m + K);
    TruncatedSeries sum(order);
    // prod_{j=1}^{m+k} 1/(1 + j u), extended one factor per k.
    TruncatedSeries product = TruncatedSeries::constant(1, order);
    for (unsigned j = 1; j <= m; ++j) {
        const TruncatedSeries factor(order, {Rational(1), Rational(static_cast<long>(j))});
        product = product * series_reciprocal(factor);
    }
    for (unsigned k = 0; k <= K; ++k) {
        if (k > 0) {
            const TruncatedSeries factor(order,
                                         {Rational(1), Rational(static_cast<long>(m + k))});
            product = product * series_reciprocal(factor);
        }
        sum = sum + Rational(sigma.at(m + k, m)) * product.shifted(m + k + 1);
    }
    return sum;
}

VerificationReport inverse_factorial_expansion_check(unsigned m, unsigned K) {
    VerificationReport report;
    report.identity_id = "inverse-factorial";
    report.range_description = "m=" + std::to_string(m) + " K=" + std::to_string(K);
    const TruncatedSeries partial = inverse_factorial_partial_sum(m, K);
    const unsigned order = partial.order();
    const TruncatedSeries target = TruncatedSeries::constant(1, order).shifted(m + 1);
    compare_coefficients(report, "m=" + std::to_string(m) + " K=" + std::to_string(K), target,
                         partial, order);
    return report;
}

}  // namespace sforge
