#include <catch2/catch_amalgamated.hpp>

#include "singlet/pairing.hpp"
#include "singlet/screening.hpp"
#include "singlet/virasoro.hpp"

using namespace singlet;

namespace {

FockVector from_monomial(long p, long j, const FockMonomial& m) {
    FockVector v(p, j);
    v.add_term(m, ExactScalar(1));
    return v;
}

} // namespace

TEST_CASE("pairing normalization and sector discipline") {
    for (long p : {2L, 3L}) {
        for (long j : {-2L, 0L, 1L, 3L}) {
            ExactScalar s = twisted_pairing(sector_bottom(p, j), sector_bottom(p, 2 * (p - 1) - j));
            CHECK(s == ExactScalar(1));
        }
    }
    CHECK_THROWS_AS(twisted_pairing(sector_bottom(2, 0), sector_bottom(2, 0)), SectorMismatch);
    CHECK_THROWS_AS(twisted_pairing(sector_bottom(2, 1), sector_bottom(3, 1)), SectorMismatch);
}

TEST_CASE("vectors of different degree pair to zero") {
    long p = 2;
    FockVector u(p, 0);
    u.add_term(FockMonomial{{1}}, ExactScalar(1));
    CHECK(twisted_pairing(u, sector_bottom(p, 2)).is_zero());
    CHECK(twisted_pairing(sector_bottom(p, 0), from_monomial(p, 2, FockMonomial{{2}})).is_zero());
}

TEST_CASE("oscillator adjoint rule") {
    /* <alpha(n) u, w> = -<u, alpha(-n) w> + 2(p-1) delta_{n,0} <u, w> */
    for (long p : {2L, 3L}) {
        long j = 1;
        FockVector u(p, j);
        u.add_term(FockMonomial{{2, 1}}, ExactScalar(Rational(1, 2)));
        u.add_term(FockMonomial{{1, 1, 1}}, ExactScalar(Rational(-2, 3)));
        FockVector w(p, 2 * (p - 1) - j);
        w.add_term(FockMonomial{{3}}, ExactScalar(1));
        w.add_term(FockMonomial{{2, 1}}, ExactScalar(Rational(1, 5)));
        for (long n : {-2L, -1L, 1L, 2L, 3L}) {
            ExactScalar lhs = twisted_pairing(mode_act(n, u), w);
            ExactScalar rhs = ExactScalar(-1) * twisted_pairing(u, mode_act(-n, w));
            CHECK(lhs == rhs);
        }
        ExactScalar lhs0 = twisted_pairing(mode_act(0, u), w);
        ExactScalar rhs0 = ExactScalar(-1) * twisted_pairing(u, mode_act(0, w)) +
                           ExactScalar(Rational(2 * (p - 1))) * twisted_pairing(u, w);
        CHECK(lhs0 == rhs0);
    }
}

TEST_CASE("virasoro modes are mutually adjoint across the pairing") {
    for (long p : {2L, 3L}) {
        for (long j : {0L, 1L, 2L}) {
            for (int du = 0; du <= 3; ++du) {
                for (const FockMonomial& mu : graded_basis(du)) {
                    FockVector u = from_monomial(p, j, mu);
                    for (long n : {-2L, -1L, 0L, 1L, 2L}) {
                        /* pick the degree on the other side that can pair */
                        int dw = du + static_cast<int>(n);
                        if (dw < 0 || dw > 3) continue;
                        for (const FockMonomial& mw : graded_basis(dw)) {
                            FockVector w = from_monomial(p, 2 * (p - 1) - j, mw);
                            ExactScalar lhs = twisted_pairing(virasoro_act(n, u), w);
                            ExactScalar rhs = twisted_pairing(u, virasoro_act(-n, w));
                            CHECK(lhs == rhs);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("pairing is symmetric") {
    long p = 2;
    for (const FockMonomial& a : graded_basis(2)) {
        for (const FockMonomial& b : graded_basis(2)) {
            FockVector u = from_monomial(p, 0, a);
            FockVector w = from_monomial(p, 2, b);
            CHECK(twisted_pairing(u, w) == twisted_pairing(w, u));
        }
    }
}

TEST_CASE("norm of the first typical singular vector") {
    /* sector p-1 is self-complementary, so the family pairs with itself */
    FockVector v2 = singular_vector_v(2, 1);
    CHECK(twisted_pairing(v2, v2) == ExactScalar(6));
}

TEST_CASE("singular vectors are orthogonal to descendants of the bottom") {
    /* adjointness moves every lowering mode onto the singular side */
    for (long p : {2L, 3L}) {
        FockVector v = singular_vector_v(p, 1);
        FockVector bot = sector_bottom(p, p - 1);
        long d = to_long(weight(v) - weight(bot));
        REQUIRE(is_singular(v));
        std::vector<FockVector> descendants;
        if (d == 2) {
            descendants.push_back(virasoro_act(-1, virasoro_act(-1, bot)));
            descendants.push_back(virasoro_act(-2, bot));
        } else {
            REQUIRE(d == 3);
            descendants.push_back(virasoro_act(-3, bot));
            descendants.push_back(virasoro_act(-1, virasoro_act(-2, bot)));
            descendants.push_back(virasoro_act(-2, virasoro_act(-1, bot)));
            descendants.push_back(virasoro_act(-1, virasoro_act(-1, virasoro_act(-1, bot))));
        }
        for (const FockVector& w : descendants) CHECK(twisted_pairing(v, w).is_zero());
    }
}
