#include "sforge/cli/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <utility>

#include "sforge/errors.hpp"
#include "sforge/exactnum.hpp"
#include "sforge/families.hpp"
#include "sforge/findiff.hpp"
#include "sforge/polybasis.hpp"
#include "sforge/series.hpp"
#include "sforge/stirling.hpp"

namespace sforge::cli {

namespace {

constexpr unsigned kRandomPairs = 20;
constexpr unsigned kRandomPoints = 5;
constexpr unsigned kPowerSumRange = 100;
constexpr unsigned kMaxRandomDegree = 10;

// Draws small rationals from the raw engine output so the stream is the same
// on every standard library.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

    Rational next() {
        const long num = static_cast<long>(engine_() % 19) - 9;
        const long den = static_cast<long>(engine_() % 9) + 1;
        return Rational(Integer(num), Integer(den));
    }

    Rational next_nonzero() {
        Rational r;
        while (r.is_zero())
            r = next();
        return r;
    }

    Polynomial polynomial(unsigned degree) {
        std::vector<Rational> c(degree + 1);
        for (unsigned i = 0; i < degree; ++i)
            c[i] = next();
        c[degree] = next_nonzero();
        return Polynomial(std::move(c));
    }

private:
    std::mt19937_64 engine_;
};

std::string str(unsigned v) { return std::to_string(v); }

std::string at(std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::string s;
    for (const auto& [k, v] : kv) {
        if (!s.empty())
            s += ' ';
        s += k;
        s += '=';
        s += v;
    }
    return s;
}

Rational factorial_q(unsigned n) { return Rational(factorial(n)); }

Rational signed_factorial(unsigned n) { return Rational(Integer(sign_pow(n) * factorial(n))); }

using Sweep = std::function<void(VerificationReport&, const VerifyParams&)>;

struct Entry {
    IdentityInfo info;
    Sweep sweep;
};

void sweep_1_1(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "0 <= m <= n <= " + str(p.max);
    for (unsigned n = 0; n <= p.max; ++n)
        for (unsigned m = 0; m <= n; ++m) {
            const Integer expected = m < n ? Integer(0) : Integer(sign_pow(n) * factorial(n));
            r.expect_equal(at({{"n", str(n)}, {"m", str(m)}}), expected,
                           alternating_power_sum(n, m));
        }
}

void sweep_1_2(VerificationReport& r, const VerifyParams& p) {
    r.range_description =
        "1 <= m <= n <= " + str(p.max) + ", " + str(kRandomPairs) + " seeded (x, y) pairs";
    RationalSampler rng(p.seed);
    for (unsigned i = 0; i < kRandomPairs; ++i) {
        const Rational x = rng.next(), y = rng.next();
        for (unsigned n = 1; n <= p.max; ++n)
            for (unsigned m = 1; m <= n; ++m) {
                const Rational expected =
                    m < n ? Rational() : signed_factorial(n) * pow(x, n);
                r.expect_equal(at({{"n", str(n)}, {"m", str(m)}, {"x", x.to_string()},
                                   {"y", y.to_string()}}),
                               expected, alternating_affine_power_sum(n, m, x, y));
            }
    }
}

void sweep_1_9(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "0 <= n <= " + str(p.max);
    for (unsigned n = 0; n <= p.max; ++n) {
        Integer expected = Integer(n) * factorial(n + 1) / 2;
        if (n % 2 == 1)
            expected = -expected;
        r.expect_equal(at({{"n", str(n)}}), expected, alternating_power_sum(n, n + 1));
        try {
            sum_1_9_check(n);
        } catch (const IdentityViolation& e) {
            r.failures.push_back({at({{"n", str(n)}}), "no violation", e.what()});
        }
    }
}

void sweep_1_10(VerificationReport& r, const VerifyParams& p) {
    r.range_description =
        "0 <= m, n <= " + str(p.max) + ", " + str(kRandomPairs) + " seeded (x, y) pairs";
    RationalSampler rng(p.seed);
    for (unsigned i = 0; i < kRandomPairs; ++i) {
        const Rational x = rng.next(), y = rng.next();
        for (unsigned n = 0; n <= p.max; ++n)
            for (unsigned m = 0; m <= p.max; ++m)
                r.expect_equal(at({{"n", str(n)}, {"m", str(m)}, {"x", x.to_string()},
                                   {"y", y.to_string()}}),
                               alternating_affine_power_sum_stirling(n, m, x, y),
                               alternating_affine_power_sum(n, m, x, y));
    }
}

void sweep_1_11(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "seeded polynomials of degree 0.." + str(p.max) + ", 0 <= n <= " +
                          str(p.max);
    RationalSampler rng(p.seed);
    for (unsigned d = 0; d <= p.max; ++d) {
        const Polynomial f = rng.polynomial(d);
        for (unsigned n = 0; n <= p.max; ++n) {
            const std::string in = at({{"deg", str(d)}, {"n", str(n)}});
            const Rational direct = alternating_poly_sum(n, f);
            r.expect_equal(in, alternating_poly_sum_stirling(n, f), direct);
            if (d < n)
                r.expect_equal(in + " (low degree)", Rational(), direct);
            else if (d == n)
                r.expect_equal(in + " (leading)", signed_factorial(n) * f.coefficient(n), direct);
        }
    }
}

void sweep_3_5(VerificationReport& r, const VerifyParams& p) {
    const unsigned max_deg = std::min(p.max, kMaxRandomDegree);
    r.range_description = "seeded polynomials of degree 0.." + str(max_deg) +
                          ", 0 <= n <= " + str(p.max) + "; Newton coefficients of z^m, m <= " +
                          str(p.max);
    RationalSampler rng(p.seed);
    for (unsigned d = 0; d <= max_deg; ++d) {
        const Polynomial f = rng.polynomial(d);
        for (unsigned n = 0; n <= p.max; ++n)
            r.expect_equal(at({{"deg", str(d)}, {"n", str(n)}}), iterated_delta_by_operator(f, n),
                           iterated_delta_at_zero(f, n));
        r.expect_equal(at({{"deg", str(d)}, {"roundtrip", "newton"}}), f,
                       newton_reconstruct(newton_coefficients(f)));
    }
    for (unsigned m = 0; m <= p.max; ++m) {
        const auto a = newton_coefficients(Polynomial::monomial(m));
        for (unsigned n = 0; n <= m; ++n)
            r.expect_equal(at({{"m", str(m)}, {"n", str(n)}}), Rational(stirling2(m, n)),
                           a.coefficient(n));
    }
}

void sweep_3_10(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "0 <= m <= " + str(p.max);
    for (unsigned m = 0; m <= p.max; ++m) {
        r.expect_equal(at({{"m", str(m)}, {"route", "delta"}}), Rational(1),
                       iterated_delta_at_zero(Polynomial::monomial(m), m) / factorial_q(m));
        r.expect_equal(at({{"m", str(m)}, {"route", "alternating"}}), Rational(1),
                       Rational(alternating_power_sum(m, m)) / signed_factorial(m));
    }
}

void sweep_5_3(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "0 <= m <= " + str(p.max) + ", order " + str(p.order);
    const TruncatedSeries ex = exp_series(p.order);
    const TruncatedSeries emx = series_exp(-TruncatedSeries::variable(p.order));
    for (unsigned m = 0; m <= p.max; ++m) {
        const TruncatedSeries lhs = emx * grunert_apply(ex, m);
        const TruncatedSeries rhs = TruncatedSeries::from_polynomial(exponential_poly(m), p.order);
        for (unsigned i = 0; i <= p.order; ++i)
            r.expect_equal(at({{"m", str(m)}, {"coeff", str(i)}}), rhs.coefficient(i),
                           lhs.coefficient(i));
    }
}

void sweep_5_4(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "n <= " + str(p.order) + ", x in {1} plus " + str(kRandomPoints) +
                          " seeded points";
    RationalSampler rng(p.seed);
    std::vector<Rational> xs{Rational(1)};
    for (unsigned i = 0; i < kRandomPoints; ++i)
        xs.push_back(rng.next());
    for (const auto& x : xs) {
        const TruncatedSeries s = bell_egf(x, p.order);
        for (unsigned n = 0; n <= p.order; ++n)
            r.expect_equal(at({{"x", x.to_string()}, {"n", str(n)}}),
                           evaluate(exponential_poly(n), x), factorial_q(n) * s.coefficient(n));
    }
}

void sweep_5_6(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "0 <= m <= " + str(p.max) + ", a in {1, 2, -1, 1/2}, order " +
                          str(p.order);
    const std::vector<Rational> as{Rational(1), Rational(2), Rational(-1),
                                   Rational(Integer(1), Integer(2))};
    for (const auto& a : as) {
        const TruncatedSeries eax = series_exp(a * TruncatedSeries::variable(p.order));
        for (unsigned m = 0; m <= p.max; ++m) {
            const Polynomial phi_ax = compose(exponential_poly(m), Polynomial::monomial(1, a));
            const TruncatedSeries rhs = TruncatedSeries::from_polynomial(phi_ax, p.order) * eax;
            const TruncatedSeries lhs = grunert_apply(eax, m);
            for (unsigned i = 0; i <= p.order; ++i)
                r.expect_equal(at({{"a", a.to_string()}, {"m", str(m)}, {"coeff", str(i)}}),
                               rhs.coefficient(i), lhs.coefficient(i));
        }
    }
}

void sweep_6_3(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "0 <= n <= " + str(p.max) + ", m <= order " + str(p.order);
    for (unsigned n = 0; n <= p.max; ++n) {
        const TruncatedSeries s = egf_stirling2_column(n, p.order);
        for (unsigned m = 0; m <= p.order; ++m)
            r.expect_equal(at({{"m", str(m)}, {"n", str(n)}}), Rational(stirling2(m, n)),
                           factorial_q(m) * s.coefficient(m));
    }
}

void sweep_7_6(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "0 <= m <= " + str(p.max) + ", order " + str(p.order);
    for (unsigned m = 0; m <= p.max; ++m)
        r.absorb(ogf_power_check(m, p.order));
}

void fermi_case(VerificationReport& r, const Rational& lambda, const Rational& mu,
                unsigned order) {
    const std::string base = at({{"lambda", lambda.to_string()}, {"mu", mu.to_string()}});
    TruncatedSeries f(order);
    try {
        f = fermi_expansion(lambda, mu, order);
    } catch (const IdentityViolation& e) {
        r.failures.push_back({base, "no violation", e.what()});
        return;
    }
    const Rational mu1 = mu + Rational(1);
    for (unsigned m = 0; m <= order; ++m) {
        const Rational expected =
            pow(lambda, m) / mu1 * evaluate(geometric_poly(m), -mu / mu1);
        r.expect_equal(base + " m=" + str(m), expected, factorial_q(m) * f.coefficient(m));
    }
}

void sweep_7_13(VerificationReport& r, const VerifyParams& p) {
    r.range_description = str(kRandomPoints) + " seeded (lambda, mu) pairs, order " +
                          str(p.order);
    RationalSampler rng(p.seed);
    for (unsigned i = 0; i < kRandomPoints; ++i) {
        const Rational lambda = rng.next();
        Rational mu = rng.next();
        while (mu == Rational(-1))
            mu = rng.next();
        fermi_case(r, lambda, mu, p.order);
    }
}

void sweep_7_14(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "lambda = mu = 1, order " + str(p.order);
    fermi_case(r, Rational(1), Rational(1), p.order);
    const TruncatedSeries f =
        Rational(2) * series_reciprocal(exp_series(p.order) + TruncatedSeries::constant(1, p.order));
    for (unsigned m = 0; m <= p.order; ++m) {
        Rational explicit_sum;
        for (unsigned n = 0; n <= m; ++n)
            explicit_sum += Rational(Integer(stirling2(m, n) * factorial(n))) *
                            Rational(Integer(sign_pow(n)), pow(Integer(2), n));
        r.expect_equal(at({{"m", str(m)}}), explicit_sum, factorial_q(m) * f.coefficient(m));
    }
}

void sweep_7_15(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "0 <= m <= " + str(p.max) + ", order " + str(p.order);
    for (unsigned m = 0; m <= p.max; ++m)
        r.absorb(eulerian_ogf_check(m, p.order));
}

void sweep_7_18(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "m <= order " + str(p.order) + ", x in {0, 1/2} plus " +
                          str(kRandomPoints) + " seeded points; E_m(x) + E_m(x+1) = 2x^m for m <= " +
                          str(p.max);
    RationalSampler rng(p.seed);
    std::vector<Rational> xs{Rational(0), Rational(Integer(1), Integer(2))};
    for (unsigned i = 0; i < kRandomPoints; ++i)
        xs.push_back(rng.next());
    std::vector<Polynomial> euler;
    for (unsigned m = 0; m <= std::max(p.order, p.max); ++m)
        euler.push_back(euler_poly(m));
    for (const auto& x : xs) {
        const TruncatedSeries s = euler_poly_egf(x, p.order);
        for (unsigned m = 0; m <= p.order; ++m)
            r.expect_equal(at({{"x", x.to_string()}, {"m", str(m)}}), evaluate(euler[m], x),
                           factorial_q(m) * s.coefficient(m));
    }
    const Polynomial shift({Rational(1), Rational(1)});
    for (unsigned m = 0; m <= p.max; ++m)
        r.expect_equal(at({{"m", str(m)}, {"functional", "E(x)+E(x+1)"}}),
                       Polynomial::monomial(m, 2), euler[m] + compose(euler[m], shift));
}

void sweep_7_19(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "0 <= m <= " + str(p.order);
    const Rational minus_half(Integer(-1), Integer(2));
    for (unsigned m = 0; m <= p.order; ++m) {
        const Rational omega = evaluate(geometric_poly(m), minus_half);
        r.expect_equal(at({{"m", str(m)}}), omega, euler_poly(m).coefficient(0));
        Rational explicit_sum;
        for (unsigned n = 0; n <= m; ++n)
            explicit_sum += Rational(Integer(stirling2(m, n) * factorial(n))) * pow(minus_half, n);
        r.expect_equal(at({{"m", str(m)}, {"form", "explicit"}}), explicit_sum, omega);
    }
}

void sweep_8_3(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "order " + str(p.order);
    const TruncatedSeries a = bernoulli_egf(p.order);
    const TruncatedSeries b = bernoulli_log_trick(p.order);
    for (unsigned i = 0; i <= p.order; ++i)
        r.expect_equal(at({{"coeff", str(i)}}), a.coefficient(i), b.coefficient(i));
}

void sweep_8_4(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "0 <= m <= " + str(p.order);
    const TruncatedSeries egf = bernoulli_egf(p.order);
    const auto b = bernoulli_numbers(p.order);
    for (unsigned m = 0; m <= p.order; ++m) {
        r.expect_equal(at({{"m", str(m)}}), factorial_q(m) * egf.coefficient(m), b[m]);
        if (m >= 3 && m % 2 == 1)
            r.expect_equal(at({{"m", str(m)}, {"odd", "zero"}}), Rational(), b[m]);
    }
}

void sweep_9_1(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "0 <= m <= " + str(p.max) + ", 1 <= n <= " + str(kPowerSumRange);
    for (unsigned m = 0; m <= p.max; ++m) {
        Integer naive = 0;
        for (unsigned n = 1; n <= kPowerSumRange; ++n) {
            naive += pow(Integer(n), m);
            r.expect_equal(at({{"m", str(m)}, {"n", str(n)}}), Rational(naive),
                           power_sum_bernoulli(m, n + 1));
        }
    }
}

void sweep_9_2(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "0 <= n, m <= " + str(p.max);
    for (unsigned n = 0; n <= p.max; ++n)
        for (unsigned m = 0; m <= p.max; ++m) {
            const Integer v = power_via_stirling(n, m);
            r.expect_equal(at({{"n", str(n)}, {"m", str(m)}}), pow(Integer(n), m), v);
            r.expect_equal(at({{"n", str(n)}, {"m", str(m)}, {"sum", "full"}}),
                           power_via_stirling_full(n, m), v);
        }
}

void sweep_9_6(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "0 <= k <= n <= " + str(p.max);
    for (unsigned n = 0; n <= p.max; ++n)
        for (unsigned k = 0; k <= n; ++k)
            r.expect_equal(at({{"n", str(n)}, {"k", str(k)}}), binomial(n + 1, k + 1),
                           hockey_stick(n, k));
}

void sweep_9_7(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "0 <= m <= " + str(p.max) + ", 1 <= n <= " + str(kPowerSumRange);
    for (unsigned m = 0; m <= p.max; ++m) {
        Integer naive = 0;
        for (unsigned n = 1; n <= kPowerSumRange; ++n) {
            naive += pow(Integer(n), m);
            r.expect_equal(at({{"m", str(m)}, {"n", str(n)}}), naive, power_sum_stirling(m, n));
        }
    }
}

void sweep_10_2(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "0 <= m, n <= " + str(p.max);
    const Triangle s2 = second_kind_table(p.max);
    const Triangle s1 = signed_first_kind_table(p.max);
    for (unsigned m = 0; m <= p.max; ++m)
        for (unsigned n = 0; n <= p.max; ++n) {
            Integer sum = 0;
            for (unsigned k = 0; k <= m; ++k)
                sum += s2.at(m, k) * s1.at(k, n);
            r.expect_equal(at({{"m", str(m)}, {"n", str(n)}}), Integer(m == n ? 1 : 0), sum);
        }
}

void sweep_10_3(VerificationReport& r, const VerifyParams& p) {
    r.range_description = "1 <= m <= " + str(p.max) + ", 0 <= K <= " + str(p.max);
    for (unsigned m = 1; m <= p.max; ++m)
        for (unsigned K = 0; K <= p.max; ++K)
            r.absorb(inverse_factorial_expansion_check(m, K));
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {{"eq1.1", "sum_k C(n,k) (-1)^k k^m is 0 for m < n and (-1)^n n! for m = n"}, sweep_1_1},
        {{"eq1.2", "sum_k C(n,k) (-1)^k (xk+y)^m is 0 for m < n and (-1)^n x^n n! for m = n"},
         sweep_1_2},
        {{"eq1.9", "sum_k C(n,k) (-1)^k k^(n+1) = (-1)^n (n/2) (n+1)!"}, sweep_1_9},
        {{"eq1.10", "sum_k C(n,k) (-1)^k (xk+y)^m = (-1)^n n! sum_j C(m,j) x^j y^(m-j) S(j,n)"},
         sweep_1_10},
        {{"eq1.11", "sum_k C(n,k) (-1)^k f(k) = (-1)^n n! sum_m c_m S(m,n) for polynomial f"},
         sweep_1_11},
        {{"eq3.5", "binomial-sum and operator routes to delta^n f(0) agree; Newton coefficients"},
         sweep_3_5},
        {{"eq3.10", "(1/m!) sum_k C(m,k) (-1)^(m-k) k^m = 1"}, sweep_3_10},
        {{"eq5.3", "e^-x (x d/dx)^m e^x = phi_m(x)"}, sweep_5_3},
        {{"eq5.4", "e^{x(e^t-1)} = sum_n phi_n(x) t^n/n!"}, sweep_5_4},
        {{"eq5.6", "(x d/dx)^m e^{ax} = phi_m(ax) e^{ax}"}, sweep_5_6},
        {{"eq6.3", "(e^x-1)^n/n! = sum_m S(m,n) x^m/m!"}, sweep_6_3},
        {{"eq7.6", "sum_n n^m x^n = w_m(x/(1-x))/(1-x)"}, sweep_7_6},
        {{"eq7.13", "1/(mu e^{lambda t}+1) = (1/(mu+1)) sum_m lambda^m w_m(-mu/(mu+1)) t^m/m!"},
         sweep_7_13},
        {{"eq7.14", "2/(e^t+1) = sum_m w_m(-1/2) t^m/m!"}, sweep_7_14},
        {{"eq7.15", "sum_n n^m x^n = A_m(x)/(1-x)^(m+1)"}, sweep_7_15},
        {{"eq7.18", "2e^{xt}/(e^t+1) = sum_m E_m(x) t^m/m! with E_m from w_k(-1/2)"}, sweep_7_18},
        {{"eq7.19", "E_m(0) = w_m(-1/2) = sum_n S(m,n) n! (-1/2)^n"}, sweep_7_19},
        {{"eq8.3", "t/(e^t-1) = sum_n (-1)^n/(n+1) (e^t-1)^n"}, sweep_8_3},
        {{"eq8.4", "B_m = sum_n (-1)^n n!/(n+1) S(m,n)"}, sweep_8_4},
        {{"eq9.1", "1^m + ... + (n-1)^m = (1/(m+1)) sum_k C(m+1,k) B_k n^(m+1-k)"}, sweep_9_1},
        {{"eq9.2", "n^m = sum_k C(n,k) S(m,k) k!"}, sweep_9_2},
        {{"eq9.6", "sum_{p=k}^n C(p,k) = C(n+1,k+1)"}, sweep_9_6},
        {{"eq9.7", "1^m + ... + n^m = sum_k C(n+1,k+1) S(m,k) k!"}, sweep_9_7},
        {{"eq10.2", "sum_k S(m,k) s(k,n) = delta(m,n)"}, sweep_10_2},
        {{"eq10.3", "1/z^(m+1) = sum_k s(m+k,m)/(z(z+1)...(z+m+k)) through u^(m+K+1), u = 1/z"},
         sweep_10_3},
    };
    return table;
}

}  // namespace

const std::vector<IdentityInfo>& identity_registry() {
    static const std::vector<IdentityInfo> infos = [] {
        std::vector<IdentityInfo> v;
        for (const auto& e : entries())
            v.push_back(e.info);
        return v;
    }();
    return infos;
}

bool is_known_identity(std::string_view id) {
    return std::any_of(entries().begin(), entries().end(),
                       [&](const Entry& e) { return e.info.id == id; });
}

VerificationReport run_identity(std::string_view id, const VerifyParams& params) {
    for (const auto& e : entries()) {
        if (e.info.id != id)
            continue;
        VerificationReport report;
        e.sweep(report, params);
        report.identity_id = e.info.id;
        return report;
    }
    throw std::invalid_argument("unknown identity id '" + std::string(id) + "'");
}

std::vector<VerificationReport> run_all_identities(const VerifyParams& params) {
    std::vector<VerificationReport> out;
    for (const auto& e : entries())
        out.push_back(run_identity(e.info.id, params));
    return out;
}

}  // namespace sforge::cli
