#include "sforge/findiff.hpp"

namespace sforge {

Polynomial delta(const Polynomial& f) {
    const Polynomial shift({Rational(1), Rational(1)});
    return compose(f, shift) - f;
}

Rational iterated_delta_at_zero(const Polynomial& f, unsigned n) {
    Rational sum;
    for (unsigned k = 0; k <= n; ++k) {
        Rational term = Rational(binomial(n, k)) * evaluate(f, Rational(static_cast<long>(k)));
        sum += ((n - k) % 2 == 0) ? term : -term;
    }
    return sum;
}

Rational iterated_delta_by_operator(const Polynomial& f, unsigned n) {
    Polynomial g = f;
    for (unsigned i = 0; i < n && !g.is_zero(); ++i)
        g = delta(g);
    return evaluate(g, Rational());
}

FallingFactorialExpansion newton_coefficients(const Polynomial& f) {
    std::vector<Rational> a;
    Polynomial g = f;
    Integer kf = 1;
    for (unsigned k = 0; !g.is_zero(); ++k) {
        if (k > 0)
            kf *= k;
        a.push_back(evaluate(g, Rational()) / Rational(kf));
        g = delta(g);
    }
    return FallingFactorialExpansion(std::move(a));
}

Polynomial newton_reconstruct(const FallingFactorialExpansion& a) {
    Polynomial sum;
    Polynomial basis = Polynomial::constant(1);
    auto c = a.coeffs();
    for (unsigned k = 0; k < c.size(); ++k) {
        if (k > 0)
            basis = basis * Polynomial({Rational(-static_cast<long>(k - 1)), Rational(1)});
        sum += c[k] * basis;
    }
    return sum;
}

}  // namespace sforge
