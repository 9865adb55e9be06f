#include <doctest.h>

#include <stdexcept>

#include "sforge/errors.hpp"
#include "sforge/families.hpp"
#include "sforge/stirling.hpp"
#include "test_support.hpp"

using namespace sforge;

TEST_CASE("stirling2 recurrence values") {
    CHECK(stirling2(7, 3) == 301);
    CHECK(stirling2(5, 4) == 10);
    CHECK(stirling2(9, 7) == 462);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(4, 0) == 0);
    CHECK(stirling2(3, 5) == 0);
    for (unsigned m = 0; m <= 12; ++m)
        CHECK(stirling2(m, m) == 1);
}

TEST_CASE("stirling2 explicit sum") {
    CHECK(stirling2_explicit(4, 2) == 7);
    CHECK(stirling2_explicit(6, 4) == 65);
    CHECK(stirling2_explicit(0, 0) == 1);
    for (unsigned m = 0; m < 8; ++m)
        for (unsigned n = m + 1; n <= 9; ++n)
            CHECK(stirling2_explicit(m, n) == 0);
}

TEST_CASE("set partition enumeration") {
    CHECK(count_set_partitions(0, 0) == 1);
    CHECK(count_set_partitions(3, 2) == 3);
    CHECK(count_set_partitions(4, 2) == 7);
    CHECK(count_set_partitions(4, 7) == 0);
    CHECK_THROWS_AS(count_set_partitions(13, 2), SizeLimitError);
    CHECK_THROWS_AS(set_partition_counts(13), SizeLimitError);
}

TEST_CASE("triple agreement up to m = 12") {
    for (unsigned m = 0; m <= 12; ++m) {
        const auto enumerated = set_partition_counts(m);
        for (unsigned n = 0; n <= m; ++n) {
            const Integer rec = stirling2(m, n);
            CHECK(rec == stirling2_explicit(m, n));
            CHECK(rec == enumerated[n]);
        }
    }
}

TEST_CASE("recurrence agrees with explicit sum up to m = 60") {
    const Triangle t = second_kind_table(60);
    for (unsigned m = 0; m <= 60; ++m)
        for (unsigned n = 0; n <= m; ++n)
            REQUIRE(t.at(m, n) == stirling2_explicit(m, n));
    CHECK(stirling2(60, 30) == t.at(60, 30));
}

TEST_CASE("S(n+1, n) is a triangular number") {
    for (unsigned n = 0; n <= 50; ++n)
        CHECK(stirling2(n + 1, n) == Integer(n * (n + 1) / 2));
}

TEST_CASE("row sums are Bell numbers") {
    const Triangle t = second_kind_table(15);
    for (unsigned m = 0; m <= 15; ++m)
        CHECK(Rational(t.row_sum(m)) == evaluate(exponential_poly(m), Rational(1)));
    CHECK(t.row_sum(10) == 115975);
}

TEST_CASE("first kind against permutation enumeration") {
    CHECK(stirling1_unsigned(5, 2) == 50);
    CHECK(stirling1_unsigned(4, 3) == 6);
    CHECK(stirling1_unsigned(9, 3) == 118124);
    for (unsigned m = 0; m <= 8; ++m) {
        const auto counts = sforge::testing::permutations_by_cycles(m);
        for (unsigned k = 0; k <= m; ++k)
            CHECK(stirling1_unsigned(m, k) == counts[k]);
    }
    for (unsigned m = 0; m <= 12; ++m)
        CHECK(stirling1_unsigned(m, m) == 1);
    for (unsigned m = 1; m <= 20; ++m)
        CHECK(stirling1_unsigned(m, 1) == factorial(m - 1));
}

TEST_CASE("signed first kind") {
    CHECK(stirling1_signed(4, 2) == 11);
    CHECK(stirling1_signed(3, 2) == -3);
    CHECK(stirling1_signed(6, 6) == 1);
    CHECK(stirling1_signed(2, 5) == 0);
}

TEST_CASE("orthogonality") {
    CHECK(orthogonality_sum(5, 5) == 1);
    CHECK(orthogonality_sum(3, 2) == 0);
    CHECK(orthogonality_sum(4, 1) == 0);
    for (unsigned m = 0; m <= 25; ++m)
        for (unsigned n = 0; n <= 25; ++n)
            CHECK(orthogonality_sum(m, n) == Integer(m == n ? 1 : 0));
}

TEST_CASE("tables") {
    const Triangle s2 = second_kind_table(3);
    CHECK(s2.row(0).size() == 1);
    CHECK(std::vector<Integer>(s2.row(3).begin(), s2.row(3).end()) ==
          std::vector<Integer>{0, 1, 3, 1});
    CHECK(std::vector<Integer>(s2.row(2).begin(), s2.row(2).end()) ==
          std::vector<Integer>{0, 1, 1});

    const Triangle s1 = first_kind_table(4);
    CHECK(std::vector<Integer>(s1.row(4).begin(), s1.row(4).end()) ==
          std::vector<Integer>{0, 6, 11, 6, 1});

    const Triangle single = second_kind_table(0);
    CHECK(single.max_m() == 0);
    CHECK(single.at(0, 0) == 1);

    CHECK_THROWS_AS(second_kind_table(201), SizeLimitError);
    CHECK_THROWS_AS(first_kind_table(201), SizeLimitError);
    CHECK_THROWS_AS(s2.at(4, 0), std::out_of_range);
    CHECK(s2.at(2, 3) == 0);
}

TEST_CASE("table invariants") {
    const Triangle s2 = second_kind_table(40);
    const Triangle s1 = first_kind_table(40);
    for (unsigned m = 0; m <= 40; ++m) {
        CHECK(s2.at(m, m) == 1);
        CHECK(s1.at(m, m) == 1);
        if (m >= 1) {
            CHECK(s2.at(m, 0) == 0);
            CHECK(s1.at(m, 1) == factorial(m - 1));
        }
        for (unsigned n = 0; n <= m; ++n) {
            CHECK(s2.at(m, n) == stirling2(m, n));
            CHECK(s1.at(m, n) == stirling1_unsigned(m, n));
        }
    }
}
