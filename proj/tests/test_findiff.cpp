#include <doctest.h>

#include "sforge/findiff.hpp"
#include "sforge/polybasis.hpp"
#include "test_support.hpp"

using namespace sforge;
using sforge::testing::q;

TEST_CASE("forward difference") {
    const auto z2 = Polynomial::monomial(2);
    CHECK(delta(z2) == Polynomial({q(1), q(2)}));
    CHECK(delta(Polynomial::constant(q(7))).is_zero());
    CHECK(delta(falling_factorial_poly(3)) == q(3) * falling_factorial_poly(2));
    for (unsigned k = 1; k <= 10; ++k)
        CHECK(delta(falling_factorial_poly(k)) ==
              Rational(Integer(k)) * falling_factorial_poly(k - 1));
}

TEST_CASE("iterated differences at zero") {
    const auto z3 = Polynomial::monomial(3);
    CHECK(iterated_delta_at_zero(z3, 0) == q(0));
    CHECK(iterated_delta_at_zero(z3, 1) == q(1));
    CHECK(iterated_delta_at_zero(z3, 2) == q(6));
    CHECK(iterated_delta_at_zero(z3, 3) == q(6));
    CHECK(iterated_delta_at_zero(z3, 4) == q(0));
    sforge::testing::Gen gen(31);
    for (unsigned d = 0; d <= 10; ++d) {
        const auto f = gen.polynomial(d);
        for (unsigned n = 0; n <= 12; ++n)
            CHECK(iterated_delta_at_zero(f, n) == iterated_delta_by_operator(f, n));
    }
}

TEST_CASE("Newton coefficients of monomials") {
    CHECK(newton_coefficients(Polynomial::monomial(3)) ==
          FallingFactorialExpansion({q(0), q(1), q(3), q(1)}));
    CHECK(newton_coefficients(Polynomial::monomial(4)) ==
          FallingFactorialExpansion({q(0), q(1), q(7), q(6), q(1)}));
    for (unsigned m = 0; m <= 15; ++m)
        CHECK(newton_coefficients(Polynomial::monomial(m)) == power_to_falling(m));
}

TEST_CASE("Newton reconstruction") {
    CHECK(newton_reconstruct(FallingFactorialExpansion({q(0), q(1), q(1)})) ==
          Polynomial::monomial(2));
    CHECK(newton_reconstruct(FallingFactorialExpansion(std::vector<Rational>{})).is_zero());
    sforge::testing::Gen gen(17);
    for (unsigned d = 0; d <= 10; ++d)
        for (int trial = 0; trial < 3; ++trial) {
            const auto f = gen.polynomial(d);
            const auto a = newton_coefficients(f);
            CHECK(newton_reconstruct(a) == f);
            CHECK(a == expand_in_falling_basis(f));
        }
}

TEST_CASE("Newton coefficients are linear") {
    sforge::testing::Gen gen(19);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = gen.polynomial(6), g = gen.polynomial(8);
        const Rational c = gen.rational();
        const auto lhs = newton_coefficients(f + c * g);
        const auto af = newton_coefficients(f), ag = newton_coefficients(g);
        for (unsigned k = 0; k <= 8; ++k)
            CHECK(lhs.coefficient(k) == af.coefficient(k) + c * ag.coefficient(k));
    }
}
