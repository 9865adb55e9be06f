#include <doctest.h>

#include "sforge/polybasis.hpp"
#include "sforge/stirling.hpp"
#include "test_support.hpp"

using namespace sforge;
using sforge::testing::q;

namespace {

Polynomial poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c)
        v.emplace_back(x);
    return Polynomial(std::move(v));
}

FallingFactorialExpansion ffe(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c)
        v.emplace_back(x);
    return FallingFactorialExpansion(std::move(v));
}

}  // namespace

TEST_CASE("ring operations") {
    const Polynomial x = Polynomial::monomial(1);
    CHECK(x * poly({1, 1}) == poly({0, 1, 1}));
    CHECK(derivative(Polynomial::monomial(3)) == poly({0, 0, 3}));
    CHECK(compose(Polynomial::monomial(2), poly({1, 1})) == poly({1, 2, 1}));
    CHECK(poly({1, 2}) + poly({-1, -2}) == Polynomial());
    CHECK(poly({1, 2, 3}) - poly({0, 0, 3}) == poly({1, 2}));
    CHECK(q(1, 2) * poly({2, 4}) == poly({1, 2}));
    CHECK((q(0) * poly({2, 4})).is_zero());
}

TEST_CASE("zero polynomial") {
    const Polynomial zero;
    CHECK(zero.is_zero());
    CHECK(!zero.degree());
    CHECK(Polynomial({q(0), q(0)}) == zero);
    CHECK(evaluate(zero, q(5)) == q(0));
    CHECK(derivative(zero).is_zero());
    CHECK((zero * poly({1, 1})).is_zero());
    CHECK(compose(poly({3, 1}), zero) == poly({3}));
    CHECK(format_polynomial(zero) == "0");
    CHECK(expand_in_falling_basis(zero) == FallingFactorialExpansion());
}

TEST_CASE("evaluation") {
    CHECK(evaluate(poly({0, 1, 1}), q(1)) == q(2));
    CHECK(evaluate(poly({0, 1, 3, 1}), q(1)) == q(5));
    CHECK(evaluate(poly({1, -2, 1}), q(1, 3)) == q(4, 9));
}

TEST_CASE("formatting") {
    CHECK(format_polynomial(poly({0, 1, 14, 36, 24})) == "x + 14x^2 + 36x^3 + 24x^4");
    CHECK(format_polynomial(Polynomial({q(-1, 2), q(1)})) == "-1/2 + x");
    CHECK(format_polynomial(poly({0, -1, 1})) == "-x + x^2");
    CHECK(format_polynomial(Polynomial({q(0), q(0), q(3, 2)})) == "3/2*x^2");
    CHECK(format_polynomial(poly({7})) == "7");
}

TEST_CASE("falling factorial polynomials") {
    CHECK(falling_factorial_poly(0) == poly({1}));
    CHECK(falling_factorial_poly(2) == poly({0, -1, 1}));
    CHECK(falling_factorial_poly(4) == poly({0, -6, 11, -6, 1}));
}

TEST_CASE("power to falling") {
    CHECK(power_to_falling(2) == ffe({0, 1, 1}));
    CHECK(power_to_falling(3) == ffe({0, 1, 3, 1}));
    CHECK(power_to_falling(0) == ffe({1}));
}

TEST_CASE("falling to power") {
    CHECK(falling_to_power(2) == poly({0, -1, 1}));
    CHECK(falling_to_power(4) == poly({0, -6, 11, -6, 1}));
    CHECK(falling_to_power(1) == poly({0, 1}));
    for (unsigned m = 0; m <= 20; ++m)
        CHECK(falling_to_power(m) == falling_factorial_poly(m));
}

TEST_CASE("expand in falling basis") {
    CHECK(expand_in_falling_basis(Polynomial::monomial(3)) == ffe({0, 1, 3, 1}));
    CHECK(expand_in_falling_basis(falling_factorial_poly(5)) == ffe({0, 0, 0, 0, 0, 1}));
    CHECK(expand_in_falling_basis(poly({0, 1, 2})) == ffe({0, 3, 2}));
}

TEST_CASE("conversion matrices are the Stirling triangles") {
    const Triangle s2 = second_kind_table(20);
    const Triangle s1 = signed_first_kind_table(20);
    for (unsigned m = 0; m <= 20; ++m) {
        const auto a = power_to_falling(m);
        const auto b = expand_in_falling_basis(Polynomial::monomial(m));
        CHECK(a == b);
        const auto p = falling_to_power(m);
        for (unsigned n = 0; n <= m; ++n) {
            CHECK(a.coefficient(n) == Rational(s2.at(m, n)));
            CHECK(p.coefficient(n) == Rational(s1.at(m, n)));
        }
        CHECK(a.degree() == std::optional<unsigned>(m));
        CHECK(p.degree() == std::optional<unsigned>(m));
    }
}

TEST_CASE("falling basis round trip on random polynomials") {
    sforge::testing::Gen gen(3);
    for (unsigned d = 0; d <= 12; ++d) {
        for (int trial = 0; trial < 3; ++trial) {
            const Polynomial p = gen.polynomial(d);
            const auto a = expand_in_falling_basis(p);
            CHECK(a.degree() == p.degree());
            Polynomial rebuilt;
            for (unsigned n = 0; n < a.coeffs().size(); ++n)
                rebuilt += a.coeffs()[n] * falling_factorial_poly(n);
            CHECK(rebuilt == p);
            CHECK(collapse_falling_basis(a) == p);
        }
    }
}
