#include <catch2/catch_amalgamated.hpp>

#include "singlet/singlet_algebra.hpp"

using namespace singlet;

TEST_CASE("generator of the kernel algebra") {
    for (long p : {2L, 3L}) {
        const FockVector& H = singlet_generator(p);
        CHECK(H.sector() == 0);
        CHECK(weight(H) == Rational(2 * p - 1));
        CHECK(is_singular(H));
        CHECK(is_in_kernel({ScreeningKind::Qtilde, 0}, 1, H));
        /* creation axiom for the calibrated modes */
        CHECK(H_laurent_mode(-1, sector_bottom(p, 0)) == H);
        for (long j : {0L, 1L, 5L}) CHECK(H_laurent_mode(j, sector_bottom(p, 0)).is_zero());
    }
}

TEST_CASE("calibrated zero mode preserves degree") {
    for (long p : {2L, 3L}) {
        FockVector v = singular_vector_v(p, 1);
        FockVector w = H_mode(0, v);
        REQUIRE_FALSE(w.is_zero());
        CHECK(weight(w) == weight(v));
        CHECK(w.sector() == v.sector());
        FockVector up = H_mode(-1, v);
        if (!up.is_zero()) CHECK(weight(up) == weight(v) + 1);
    }
}

TEST_CASE("generator modes commute with virasoro as a primary field") {
    /* calibrated modes of a weight 2p-1 primary: [L(m), H(n)] = ((2p-2) m - n) H(m+n) */
    long p = 2;
    FockVector v(p, 1);
    v.add_term(FockMonomial{{1}}, ExactScalar(1));
    v.add_term(FockMonomial{}, ExactScalar(Rational(1, 2)));
    for (long m : {-1L, 1L}) {
        for (long n : {-1L, 0L, 1L, 2L}) {
            FockVector lhs = virasoro_act(m, H_mode(n, v)) +
                             ExactScalar(-1) * H_mode(n, virasoro_act(m, v));
            FockVector rhs = ExactScalar(Rational((2 * p - 2) * m - n)) * H_mode(m + n, v);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("bottom level constraint polynomial") {
    ZhuPolynomial P2 = zhu_polynomial(2);
    CHECK(P2.g == std::vector<Rational>{Rational(0), Rational(0), Rational(16, 9),
                                        Rational(128, 9)});
    ZhuPolynomial P3 = zhu_polynomial(3);
    CHECK(P3.g == std::vector<Rational>{Rational(0), Rational(0), Rational(9, 25),
                                        Rational(99, 25), Rational(72, 5), Rational(432, 25)});
}

TEST_CASE("zero mode eigenvalues on the sector bottoms") {
    /* (weight, eigenvalue) pairs lie on y^2 = G(x) */
    std::vector<long> eig2{-10, -4, -1, 0, 0, 0, 1, 4, 10};
    for (long j = -3; j <= 5; ++j)
        CHECK(top_H0_scalar(sector_bottom(2, j)) == ExactScalar(eig2[static_cast<size_t>(j + 3)]));
    std::vector<long> eig3{-21, -6, -1, 0, 0, 0, 0, 0, 1, 6, 21};
    for (long j = -3; j <= 7; ++j)
        CHECK(top_H0_scalar(sector_bottom(3, j)) == ExactScalar(eig3[static_cast<size_t>(j + 3)]));
    for (long p : {2L, 3L})
        for (long j = -4; j <= 2 * p + 2; ++j) CHECK(check_zhu_on_sector_bottom(p, j));
}

TEST_CASE("constraint evaluation on commuting matrix pairs") {
    ZhuPolynomial P = zhu_polynomial(2);
    SECTION("diagonal pair from two complementary bottoms") {
        Matrix X{{ExactScalar(Rational(3, 8)), ExactScalar(0)},
                 {ExactScalar(0), ExactScalar(Rational(3, 8))}};
        Matrix Y{{ExactScalar(1), ExactScalar(0)}, {ExactScalar(0), ExactScalar(-1)}};
        CHECK(zhu_pair_holds(P, X, Y));
    }
    SECTION("rank two jordan pair fails by exactly the derivative") {
        ExactScalar x0(Rational(-1, 8));
        Matrix X{{x0, ExactScalar(1)}, {ExactScalar(0), x0}};
        Matrix Y{{ExactScalar(0), ExactScalar(Rational(2, 3))}, {ExactScalar(0), ExactScalar(0)}};
        CHECK_FALSE(zhu_pair_holds(P, X, Y));
        Matrix R = zhu_eval(P, X, Y);
        CHECK(R[0][0].is_zero());
        CHECK(R[1][0].is_zero());
        CHECK(R[1][1].is_zero());
        /* Y^2 = 0 while G picks up G'(x0) on the off-diagonal */
        CHECK(R[0][1] == ExactScalar(Rational(-2, 9)));
    }
}

TEST_CASE("derivative of the constraint at the logarithmic point") {
    CHECK(zhu_g_derivative_eval(zhu_polynomial(2), ExactScalar(Rational(-1, 8))) ==
          ExactScalar(Rational(2, 9)));
    CHECK(zhu_g_derivative_eval(zhu_polynomial(3), ExactScalar(Rational(-1, 3))) ==
          ExactScalar(Rational(1, 75)));
    /* double roots of G at the intermediate bottom weights */
    for (long p : {2L, 3L}) {
        ZhuPolynomial P = zhu_polynomial(p);
        for (long i = 0; i <= p - 2; ++i) {
            ExactScalar xi(Rational(-i * (2 * p - 2 - i)) / (4 * p));
            CHECK(zhu_g_eval(P, xi).is_zero());
            CHECK(zhu_g_derivative_eval(P, xi).is_zero());
        }
    }
}

TEST_CASE("zero mode scalar requires a bottom level input") {
    FockVector v(2, 1);
    v.add_term(FockMonomial{{1}}, ExactScalar(1));
    CHECK_THROWS_AS(top_H0_scalar(v), NotTopLevel);
    CHECK_THROWS_AS(top_H0_scalar(FockVector(2, 0)), NotTopLevel);
}

TEST_CASE("simplicity witnesses pair the singular vectors back to the vacuum") {
    SimplicityWitness s2 = simplicity_witness(2, 1);
    CHECK(s2.i == 5);
    REQUIRE_FALSE(s2.image.is_zero());
    CHECK(weight(s2.image) == Rational(0));
    CHECK(s2.image.sector() == 0);

    SimplicityWitness s3 = simplicity_witness(3, 1);
    CHECK(s3.i == 9);
    CHECK(weight(s3.image) == Rational(0));
    CHECK_THROWS_AS(simplicity_witness(2, 0), IndexOutOfRange);
}

TEST_CASE("generator modes connect consecutive singular vectors") {
    IrreducibilityWitness w20 = irreducibility_witness(2, 0);
    CHECK(w20.j0 == 0);
    CHECK(w20.escapes_kernel);
    CHECK(w20.weight_identity);
    CHECK(w20.C == ExactScalar(1));

    IrreducibilityWitness w21 = irreducibility_witness(2, 1);
    CHECK(w21.j0 == -4);
    CHECK(w21.escapes_kernel);
    CHECK(w21.weight_identity);
    CHECK(w21.C == ExactScalar(Rational(1, 3)));

    IrreducibilityWitness w30 = irreducibility_witness(3, 0);
    CHECK(w30.j0 == 1);
    CHECK(w30.escapes_kernel);
    CHECK(w30.weight_identity);
    CHECK(w30.C == ExactScalar(1));
}

TEST_CASE("kernel modes act cyclically on the typical bottom") {
    CHECK(beta_cyclicity_dims(2, 5) == std::vector<long>{1, 1, 2, 3});
}

TEST_CASE("kernel of the short screening is closed under generator modes") {
    long p = 2;
    FockVector u = singlet_generator(p);
    for (long j : {-1L, 1L, 2L, 3L}) {
        FockVector w = H_laurent_mode(j, u);
        if (w.is_zero()) continue;
        CHECK(is_in_kernel({ScreeningKind::Qtilde, 0}, 1, w));
    }
    /* and the conformal vector stays inside as well */
    FockVector om = virasoro_act(-2, sector_bottom(p, 0));
    CHECK(is_in_kernel({ScreeningKind::Qtilde, 0}, 1, om));
    CHECK(is_in_kernel({ScreeningKind::Qtilde, 0}, 1, H_laurent_mode(0, om)));
}
