#include <catch2/catch_amalgamated.hpp>

#include "singlet/fock.hpp"

using namespace singlet;

TEST_CASE("sector weights") {
    /* wt(e_j) = (j^2 - 2j(p-1)) / 4p */
    CHECK(sector_weight(2, 0) == Rational(0));
    CHECK(sector_weight(2, 1) == Rational(-1, 8));
    CHECK(sector_weight(2, 2) == Rational(0));
    CHECK(sector_weight(2, 4) == Rational(1));
    CHECK(sector_weight(2, -4) == Rational(3));
    CHECK(sector_weight(3, 2) == Rational(-1, 3));
    CHECK(sector_weight(3, 6) == Rational(1));
}

TEST_CASE("mode action and the Heisenberg bracket") {
    long p = 2;
    FockVector v = sector_bottom(p, 1);
    /* alpha(0) reads the sector label */
    CHECK(mode_act(0, v) == ExactScalar(1) * v);
    /* annihilator on the bottom */
    CHECK(mode_act(3, v).is_zero());
    /* [alpha(m), alpha(-m)] = 2pm on the bottom */
    FockVector w = mode_act(2, mode_act(-2, v));
    CHECK(w == ExactScalar(Rational(2 * p * 2)) * v);
    /* different modes commute through */
    FockVector a = mode_act(1, mode_act(-2, v));
    CHECK(a.is_zero());
}

TEST_CASE("fock vectors form a graded space") {
    FockVector v(2, 0);
    v.add_term(FockMonomial{{2, 1}}, ExactScalar(1));
    CHECK(degree(v) == 3);
    CHECK(weight(v) == Rational(3));
    CHECK(is_homogeneous(v));
    v.add_term(FockMonomial{{1}}, ExactScalar(1));
    CHECK_FALSE(is_homogeneous(v));
    CHECK_THROWS_AS(weight(v), NonHomogeneous);
    CHECK(component(v, 1).terms().size() == 1);
    CHECK(max_degree_of(v) == 3);
}

TEST_CASE("vector arithmetic cancels exactly") {
    FockVector v = sector_bottom(2, 0);
    FockVector w = ExactScalar(Rational(-1)) * v;
    CHECK((v + w).is_zero());
    CHECK_THROWS_AS(weight(v + w), NonHomogeneous);
}

TEST_CASE("sector mismatch is rejected") {
    FockVector a = sector_bottom(2, 0);
    FockVector b = sector_bottom(2, 2);
    CHECK_THROWS_AS(a + b, SectorMismatch);
}

TEST_CASE("graded basis and coordinates") {
    auto basis = graded_basis(4);
    CHECK(basis.size() == 5);
    FockVector v(2, 0);
    v.add_term(basis[2], ExactScalar(7));
    auto co = coordinates(v, 4);
    REQUIRE(co.size() == 5);
    CHECK(co[2] == ExactScalar(7));
    CHECK(co[0].is_zero());
}
