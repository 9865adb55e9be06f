#pragma once

// Truncated formal power series over Rational.
//
// A series of order N carries exactly the coefficients c_0..c_N.  Binary
// operations truncate to the smaller order of their operands.  Nothing here
// picks an order on the caller's behalf.

#include <span>
#include <vector>

#include "sforge/exactnum.hpp"
#include "sforge/polybasis.hpp"
#include "sforge/report.hpp"

namespace sforge {

class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(unsigned order);
    /// Missing coefficients are zero; coefficients beyond `order` are dropped.
    TruncatedSeries(unsigned order, std::vector<Rational> coeffs);

    static TruncatedSeries constant(const Rational& c, unsigned order);
    /// The series t.
    static TruncatedSeries variable(unsigned order);
    static TruncatedSeries from_polynomial(const Polynomial& p, unsigned order);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    std::span<const Rational> coeffs() const { return coeffs_; }
    /// Throws std::out_of_range when i > order().
    const Rational& coefficient(unsigned i) const;

    /// Keeps c_0..c_order.  Throws std::invalid_argument when order exceeds
    /// the current order.
    TruncatedSeries truncated(unsigned order) const;
    /// Multiplies by t^k, keeping the order.
    TruncatedSeries shifted(unsigned k) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// exp(s).  Throws ConstantTermError unless s has constant term 0.
TruncatedSeries series_exp(const TruncatedSeries& s);
/// log(1 + s).  Throws ConstantTermError unless s has constant term 0.
TruncatedSeries series_log1p(const TruncatedSeries& s);
/// 1 / s.  Throws ConstantTermError when s has constant term 0.
TruncatedSeries series_reciprocal(const TruncatedSeries& s);
/// outer(inner).  Throws ConstantTermError unless inner has constant term 0.
TruncatedSeries series_compose(const Polynomial& outer, const TruncatedSeries& inner);
/// outer(inner), of order min(outer.order(), inner.order()).  Throws
/// ConstantTermError unless inner has constant term 0.
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// e^t.
TruncatedSeries exp_series(unsigned order);

/// (e^t - 1)^n / n!; m! c_m = S(m, n).
TruncatedSeries egf_stirling2_column(unsigned n, unsigned order);

/// e^{x(e^t - 1)}; n! c_n is the exponential polynomial at x.
TruncatedSeries bell_egf(const Rational& x, unsigned order);

/// Applies (t d/dt) m times: c_k -> k^m c_k.
TruncatedSeries grunert_apply(const TruncatedSeries& s, unsigned m);

/// t / (e^t - 1) as the reciprocal of (e^t - 1)/t; m! c_m = B_m.
TruncatedSeries bernoulli_egf(unsigned order);

/// sum_{n<=order} (-1)^n/(n+1) (e^t - 1)^n, which is log(1 + u)/u at
/// u = e^t - 1.  Agrees with bernoulli_egf coefficientwise.
TruncatedSeries bernoulli_log_trick(unsigned order);

/// 2 e^{xt} / (e^t + 1); m! c_m = E_m(x).
TruncatedSeries euler_poly_egf(const Rational& x, unsigned order);

/// 1 / (mu e^{lambda t} + 1).  Each coefficient is checked against
/// lambda^m/(mu+1) w_m(-mu/(mu+1)) / m!, with w_m the geometric polynomial;
/// a mismatch throws IdentityViolation.  Throws ConstantTermError when
/// mu = -1.
TruncatedSeries fermi_expansion(const Rational& lambda, const Rational& mu, unsigned order);

/// Compares sum_n n^m x^n against w_m(x/(1-x)) / (1-x) coefficientwise.
VerificationReport ogf_power_check(unsigned m, unsigned order);

/// Compares sum_n n^m x^n against A_m(x) / (1-x)^(m+1) coefficientwise.
VerificationReport eulerian_ogf_check(unsigned m, unsigned order);

/// With u = 1/z, checks that
///   sum_{k<=K} s(m+k, m) u^{m+k+1} / prod_{j=1}^{m+k} (1 + j u)
/// agrees with u^{m+1} through u^{m+K+1}, s being the unsigned first-kind
/// numbers.  Throws std::invalid_argument when m == 0.
VerificationReport inverse_factorial_expansion_check(unsigned m, unsigned K);

/// The partial sum above as a series of order m+K+1.
TruncatedSeries inverse_factorial_partial_sum(unsigned m, unsigned K);

}  // namespace sforge
