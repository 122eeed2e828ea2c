#include <catch2/catch_amalgamated.hpp>

#include "singlet/dyson.hpp"
#include "singlet/multi_product.hpp"
#include "singlet/screening.hpp"

using namespace singlet;

namespace {

std::vector<long> kernel_dims(const KernelReport& r) {
    std::vector<long> out;
    for (const auto& row : r.rows) out.push_back(row.kernel);
    return out;
}

} // namespace

TEST_CASE("iterated screenings produce virasoro singular vectors") {
    for (long p : {2L, 3L}) {
        for (long n : {1L, 2L}) {
            FockVector u = singular_vector_u(p, n);
            REQUIRE_FALSE(u.is_zero());
            CHECK(u.sector() == 0);
            CHECK(weight(u) == Rational(n * n * p + n * p - n));
            CHECK(is_singular(u));

            FockVector v = singular_vector_v(p, n);
            REQUIRE_FALSE(v.is_zero());
            CHECK(v.sector() == p - 1);
            CHECK(weight(v) == Rational(4 * p * p * n * n - (p - 1) * (p - 1)) / (4 * p));
            CHECK(is_singular(v));
        }
    }
}

TEST_CASE("intermediate sector families") {
    FockVector s = singular_vector_family(3, 1, 1);
    REQUIRE_FALSE(s.is_zero());
    CHECK(s.sector() == 1);
    CHECK(is_singular(s));
    /* bottom of sector 1 - 2p has the same weight, screening preserves it */
    CHECK(weight(s) == sector_weight(3, 1 - 6));
}

TEST_CASE("short screening kernel on the vacuum sector") {
    KernelReport r2 = kernel_graded({ScreeningKind::Qtilde, 0}, 1, 2, 0, 8);
    CHECK(kernel_dims(r2) == std::vector<long>{1, 0, 1, 2, 3, 4, 6, 8, 12});
    KernelReport r3 = kernel_graded({ScreeningKind::Qtilde, 0}, 1, 3, 0, 8);
    CHECK(kernel_dims(r3) == std::vector<long>{1, 0, 1, 1, 2, 3, 5, 6, 9});
    for (const auto& row : r2.rows) CHECK(row.dim == row.rank + row.kernel);
}

TEST_CASE("long screening kernel on the vacuum sector is a single irreducible") {
    KernelReport r = kernel_graded({ScreeningKind::Q, 0}, 1, 2, 0, 4);
    CHECK(kernel_dims(r) == std::vector<long>{1, 0, 1, 1, 2});
}

TEST_CASE("kernel filtration of screening powers on the typical sector") {
    /* complete reducibility makes Ker Q^{n+1} an exact direct sum of the
       first n+1 irreducible pieces */
    KernelReport r1 = kernel_graded({ScreeningKind::Q, 0}, 1, 2, 1, 8);
    KernelReport r2 = kernel_graded({ScreeningKind::Q, 0}, 2, 2, 1, 8);
    KernelReport r3 = kernel_graded({ScreeningKind::Q, 0}, 3, 2, 1, 8);
    CHECK(kernel_dims(r1) == std::vector<long>{1, 1, 1, 2, 3, 4, 6, 8, 11});
    CHECK(kernel_dims(r2) == std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15, 21});
    CHECK(kernel_dims(r3) == std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15, 22});
    /* nested kernels */
    for (size_t d = 0; d < r1.rows.size(); ++d) {
        CHECK(r1.rows[d].kernel <= r2.rows[d].kernel);
        CHECK(r2.rows[d].kernel <= r3.rows[d].kernel);
    }
}

TEST_CASE("screening powers vanish exactly past twice the shift") {
    for (long p : {2L, 3L}) {
        for (long i = 0; i < p; ++i) {
            FockVector bottom = sector_bottom(p, i - 2 * p);
            CHECK_FALSE(power_apply({ScreeningKind::Q, 0}, 2, bottom).is_zero());
            CHECK(power_apply({ScreeningKind::Q, 0}, 3, bottom).is_zero());
        }
    }
    /* two-step case on the vacuum tower */
    FockVector deep = sector_bottom(2, -8);
    CHECK_FALSE(power_apply({ScreeningKind::Q, 0}, 4, deep).is_zero());
    CHECK(power_apply({ScreeningKind::Q, 0}, 5, deep).is_zero());
}

TEST_CASE("membership probe agrees with the graded kernel") {
    /* the weight-3 singular vector generates inside Ker Qtilde */
    FockVector u = singular_vector_u(2, 1);
    CHECK(is_in_kernel({ScreeningKind::Qtilde, 0}, 1, u));
    FockVector off(2, 0);
    off.add_term(FockMonomial{{1}}, ExactScalar(1));
    CHECK_FALSE(is_in_kernel({ScreeningKind::Qtilde, 0}, 1, off));
}

TEST_CASE("nonzero-mode screening realizes the constant term identity") {
    /* 2n applications of (e_alpha)_{p-1} carry e_{-n alpha} to a known
       multiple of e_{n alpha} */
    FockVector a2 = A_apply(0, A_apply(0, sector_bottom(2, -4)));
    CHECK(a2 == ExactScalar(6) * sector_bottom(2, 4));
    FockVector a3 = A_apply(0, A_apply(0, sector_bottom(3, -6)));
    CHECK(a3 == ExactScalar(-20) * sector_bottom(3, 6));

    FockVector a4 = sector_bottom(2, -8);
    for (int k = 0; k < 4; ++k) a4 = A_apply(0, a4);
    CHECK(a4 == ExactScalar(2520) * sector_bottom(2, 8));
}

TEST_CASE("constant term table") {
    CHECK(dyson_constant_closed(1, 1) == BigInt(-2));
    CHECK(dyson_constant_closed(1, 2) == BigInt(6));
    CHECK(dyson_constant_closed(1, 3) == BigInt(-20));
    CHECK(dyson_constant_closed(2, 2) == BigInt(2520));
    for (long n : {1L, 2L}) {
        for (long p : {1L, 2L}) {
            CHECK(dyson_constant_brute(n, p) == dyson_constant_closed(n, p));
        }
    }
    CHECK(dyson_constant_brute(1, 3) == BigInt(-20));
    CHECK_THROWS_AS(dyson_constant_brute(2, 2, 10), BudgetExceeded);
    CHECK_THROWS_AS(dyson_constant_brute(0, 2), IndexOutOfRange);
}

TEST_CASE("windowed product identity for one and two insertions") {
    FockVector v = sector_bottom(2, 1);
    CHECK(product_formula_check(4, v, {AbsWindow{Rational(-2), Rational(2)}}));
    CHECK(product_formula_check(4, v,
                                {AbsWindow{Rational(-2), Rational(2)},
                                 AbsWindow{Rational(-2), Rational(2)}}));
    /* short screening momentum at p = 2 has integer self-pairing */
    FockVector w(2, 0);
    w.add_term(FockMonomial{{1}}, ExactScalar(1));
    CHECK(product_formula_check(-2, w,
                                {AbsWindow{Rational(-3, 2), Rational(3, 2)},
                                 AbsWindow{Rational(-3, 2), Rational(3, 2)}}));
    /* non-integer self-pairing is rejected */
    CHECK_THROWS_AS(
        product_formula_rhs(-2, sector_bottom(3, 0), {AbsWindow{Rational(0), Rational(1)}}),
        UnsupportedMode);
}

TEST_CASE("degree shift bookkeeping") {
    /* zero-mode screenings preserve weight, so the graded shift matches
       the gap between bottom weights */
    CHECK(screening_degree_shift(2, {ScreeningKind::Q, 0}, -4) == 3);
    /* the target bottom sits one unit higher, so the graded degree drops */
    CHECK(screening_degree_shift(2, {ScreeningKind::Qtilde, 0}, 0) == -1);
    CHECK(screening_degree_shift(3, {ScreeningKind::Q, 0}, -6) == 5);
}

TEST_CASE("descendant span ranks reproduce the self dual characters") {
    SECTION("vacuum tower at p = 2") {
        std::vector<FockVector> gens;
        for (long n = 0; n <= 2; ++n) gens.push_back(singular_vector_u(2, n));
        std::vector<long> dims;
        for (long d = 0; d <= 8; ++d) dims.push_back(virasoro_span_dim(2, gens, d));
        CHECK(dims == std::vector<long>{1, 0, 1, 2, 3, 4, 6, 8, 12});
    }
    SECTION("vacuum tower at p = 3") {
        std::vector<FockVector> gens;
        for (long n = 0; n <= 2; ++n) gens.push_back(singular_vector_u(3, n));
        std::vector<long> dims;
        for (long d = 0; d <= 8; ++d) dims.push_back(virasoro_span_dim(3, gens, d));
        CHECK(dims == std::vector<long>{1, 0, 1, 1, 2, 3, 5, 6, 9});
    }
    SECTION("first intermediate tower at p = 3") {
        std::vector<FockVector> gens;
        for (long n = 0; n <= 2; ++n) gens.push_back(singular_vector_family(3, 1, n));
        std::vector<long> dims;
        for (long d = 0; d <= 8; ++d) dims.push_back(virasoro_span_dim(3, gens, d));
        CHECK(dims == std::vector<long>{1, 1, 1, 2, 4, 5, 8, 11, 16});
    }
    SECTION("mixed sector generators are rejected") {
        std::vector<FockVector> gens{sector_bottom(2, 0), sector_bottom(2, 1)};
        CHECK_THROWS_AS(virasoro_span_dim(2, gens, 2), SectorMismatch);
    }
}
