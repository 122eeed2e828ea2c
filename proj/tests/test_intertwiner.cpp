#include <catch2/catch_amalgamated.hpp>

#include "singlet/intertwiner.hpp"

using namespace singlet;

namespace {

Rational lead_exp(long p) { return Rational((p - 1) * (p - 1), 2 * p); }

JordanVector w1_bottom(long p) { return jordan_w1_bottom(omega_spec(p)); }
JordanVector w2_bottom(long p) { return jordan_w2_bottom(omega_spec(p)); }

const JordanVector& target_w1_top(long p) {
    static std::map<long, JordanVector> cache;
    auto it = cache.find(p);
    if (it == cache.end())
        it = cache.emplace(p, jordan_w1_bottom(omega1_spec(p))).first;
    return it->second;
}

} // namespace

TEST_CASE("window and sector guards") {
    long p = 2;
    CHECK_THROWS_AS(eval_Y(w1_bottom(p), sector_bottom(p, 0), Window{0, 1, 4}), SectorMismatch);
    CHECK_THROWS_AS(eval_Y(jordan_w1_bottom(omega0_spec(p)), sector_bottom(p, 1),
                           Window{0, 1, 4}),
                    SectorMismatch);
    CHECK_THROWS_AS(eval_Y(w1_bottom(p), sector_bottom(p, 1), Window{0, 1, -1}),
                    IndexOutOfRange);
    CHECK_THROWS_AS(check_commutator(2, w1_bottom(p), sector_bottom(p, 1), Window{0, 1, 4}),
                    IndexOutOfRange);
}

TEST_CASE("leading cell and exponent coset") {
    for (long p : {2L, 3L}) {
        Rational e0 = lead_exp(p);
        LogLaurentSeries s =
            eval_Y(w1_bottom(p), sector_bottom(p, p - 1), Window{e0 - 3, e0 + 2, 8});
        REQUIRE_FALSE(s.terms.empty());
        auto first = s.terms.begin();
        CHECK(first->first.first == e0);
        CHECK(first->first.second == 0);
        CHECK(first->second == target_w1_top(p));
        for (const auto& [key, vec] : s.terms) CHECK(is_integer(key.first - e0));
    }
}

TEST_CASE("second top vector produces a single logarithm") {
    for (long p : {2L, 3L}) {
        Rational e0 = lead_exp(p);
        LogLaurentSeries s =
            eval_Y(w2_bottom(p), sector_bottom(p, p - 1), Window{e0, e0 + 2, 8});
        /* log^1 coefficient at the leading exponent is lam_p times the w1 top */
        auto it = s.terms.find({e0, 1});
        REQUIRE(it != s.terms.end());
        CHECK(it->second == lambda_p(p) * target_w1_top(p));
        /* log^0 leading cell is the classical w2 copy */
        auto it0 = s.terms.find({e0, 0});
        REQUIRE(it0 != s.terms.end());
        CHECK(it0->second == jordan_w2_bottom(omega1_spec(p)));
        /* no higher powers of the logarithm anywhere */
        for (const auto& [key, vec] : s.terms) CHECK(key.second <= 1);
    }
}

TEST_CASE("top level transport is the identity in the normalized bases") {
    for (long p : {2L, 3L}) {
        TransporterT T = transporter(p);
        CHECK(transporter_intertwines(T));
        Rational e0 = lead_exp(p);
        LogLaurentSeries s1 =
            eval_Y(w1_bottom(p), sector_bottom(p, p - 1), Window{e0, e0, 0});
        LogLaurentSeries s2 =
            eval_Y(w2_bottom(p), sector_bottom(p, p - 1), Window{e0, e0, 0});
        /* columns of the log^0 top matrix */
        CHECK(s1.terms.at({e0, 0}) == jordan_w1_bottom(omega1_spec(p)));
        CHECK(s2.terms.at({e0, 0}) == jordan_w2_bottom(omega1_spec(p)));
    }
}

TEST_CASE("semisimple degeneration drops every logarithm") {
    long p = 2;
    Rational e0 = lead_exp(p);
    FockVector v(p, 1);
    v.add_term(FockMonomial{{1}}, ExactScalar(1));
    v.add_term(FockMonomial{}, ExactScalar(Rational(2, 7)));
    LogLaurentSeries s = eval_Y(w2_bottom(p), v, Window{e0 - 2, e0 + 2, 8}, ExactScalar(0));
    for (const auto& [key, vec] : s.terms) {
        CHECK(key.second == 0);
        CHECK(vec.w1().is_zero());
    }
    /* and the first channel collapses to the plain lattice operator */
    LogLaurentSeries c = eval_Y(w1_bottom(p), v, Window{e0 - 2, e0 + 2, 8}, ExactScalar(0));
    Rational base = lead_exp(p);
    VSeries<FockVector> S = vertex_series(p - 1, v, -2, 2);
    for (const auto& [off, vec] : S.terms) {
        auto it = c.terms.find({base + off, 0});
        REQUIRE(it != c.terms.end());
        CHECK(it->second == jordan_component(omega1_spec(p), 1, vec));
    }
}

TEST_CASE("exponential factors on the doubled sector") {
    long p = 2;
    JordanVector top = jordan_w1_bottom(omega1_spec(p));
    SECTION("raising half") {
        LogLaurentSeries s = E_minus_apply(top, Window{0, 1, 4});
        CHECK(s.terms.at({0, 0}) == top);
        FockVector expect(p, 2);
        expect.add_term(FockMonomial{{1}}, ExactScalar(Rational(1, 4)));
        CHECK(s.terms.at({1, 0}) == jordan_component(omega1_spec(p), 1, expect));
    }
    SECTION("lowering half is the identity on a top vector") {
        LogLaurentSeries s = E_plus_apply(top, Window{-3, 0, 4});
        CHECK(s.terms.size() == 1);
        CHECK(s.terms.at({0, 0}) == top);
    }
    SECTION("lowering half annihilates one unit of degree") {
        JordanVector v = mode_act(-1, top);
        LogLaurentSeries s = E_plus_apply(v, Window{-3, 0, 4});
        CHECK(s.terms.at({0, 0}) == v);
        auto it = s.terms.find({-1, 0});
        REQUIRE(it != s.terms.end());
        CHECK(it->second == ExactScalar(-1) * top);
    }
}

TEST_CASE("antiderivative fields on the rank two module") {
    for (long p : {2L, 3L}) {
        JordanVector w2 = w2_bottom(p);
        SECTION("upper half on p = " + std::to_string(p)) {
            LogLaurentSeries s = int_h_apply(+1, w2, Window{-4, 4, 4});
            /* only the log cell survives on a bottom vector */
            REQUIRE(s.terms.size() == 1);
            auto it = s.terms.find({0, 1});
            REQUIRE(it != s.terms.end());
            CHECK(it->second == w1_bottom(p) + lambda_p(p) * w2);
        }
        SECTION("lower half on p = " + std::to_string(p)) {
            LogLaurentSeries s = int_h_apply(-1, w2, Window{-4, 4, 4});
            for (const auto& [key, vec] : s.terms) {
                CHECK(key.second == 0);
                CHECK(key.first >= 1);
            }
            ExactScalar inv_kappa = ExactScalar(1) / sqrt_2p(p);
            CHECK(s.terms.at({1, 0}) == inv_kappa * mode_act(-1, w2));
        }
    }
}

TEST_CASE("derivative compatibility") {
    for (long p : {2L, 3L}) {
        Rational e0 = lead_exp(p);
        Window win{e0 - 2, e0 + 2, 12};
        FockVector v1 = sector_bottom(p, p - 1);
        FockVector v2 = mode_act(-1, v1);
        for (const JordanVector& w : {w1_bottom(p), w2_bottom(p)}) {
            CHECK(check_L_minus1_derivative(w, v1, win));
            CHECK(check_L_minus1_derivative(w, v2, win));
        }
        /* dressed left argument */
        JordanVector wd = mode_act(-2, w2_bottom(p));
        CHECK(check_L_minus1_derivative(wd, v1, win));
    }
}

TEST_CASE("virasoro commutator inside the window") {
    for (long p : {2L, 3L}) {
        Rational e0 = lead_exp(p);
        Window win{e0 - 2, e0 + 2, 12};
        FockVector v1 = sector_bottom(p, p - 1);
        FockVector v2 = mode_act(-1, v1);
        for (long m : {-1L, 0L, 1L}) {
            CHECK(check_commutator(m, w1_bottom(p), v1, win));
            CHECK(check_commutator(m, w2_bottom(p), v1, win));
            CHECK(check_commutator(m, w2_bottom(p), v2, win));
        }
        JordanVector wd = mode_act(-1, w1_bottom(p));
        CHECK(check_commutator(1, wd, v1, win));
    }
}

TEST_CASE("zero arguments are vacuously compatible") {
    long p = 2;
    JordanVector z(omega_spec(p));
    CHECK(check_L_minus1_derivative(z, sector_bottom(p, 1), Window{0, 1, 4}));
    CHECK(check_commutator(0, z, sector_bottom(p, 1), Window{0, 1, 4}));
    CHECK(eval_Y(z, sector_bottom(p, 1), Window{0, 1, 4}).terms.empty());
}

TEST_CASE("depth filter strips dressed cells") {
    long p = 2;
    Rational e0 = lead_exp(p);
    LogLaurentSeries s = eval_Y(w1_bottom(p), sector_bottom(p, 1), Window{e0, e0 + 3, 0});
    for (const auto& [key, vec] : s.terms) CHECK(max_degree_of(vec) == 0);
}
