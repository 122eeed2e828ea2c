#include <catch2/catch_amalgamated.hpp>

#include "singlet/linalg.hpp"

using namespace singlet;

namespace {
Row row(std::initializer_list<long> xs) {
    Row r;
    for (long x : xs) r.emplace_back(Rational(x));
    return r;
}
} // namespace

TEST_CASE("exact rank") {
    Matrix m{row({1, 2, 3}), row({2, 4, 6}), row({0, 1, 1})};
    CHECK(exact_rank(m) == 2);
    Matrix id{row({1, 0}), row({0, 1})};
    CHECK(exact_rank(id) == 2);
    Matrix z{row({0, 0})};
    CHECK(exact_rank(z) == 0);
}

TEST_CASE("span membership") {
    Matrix m{row({1, 0, 1}), row({0, 1, 1})};
    CHECK(in_span(m, row({2, 3, 5})));
    CHECK_FALSE(in_span(m, row({0, 0, 1})));
}

TEST_CASE("solve picks the free variables zero") {
    /* x + y = 2 with one free variable */
    Matrix m{row({1, 1})};
    Row rhs = row({2});
    Row sol;
    REQUIRE(solve(m, rhs, sol));
    CHECK(sol[0] == ExactScalar(2));
    CHECK(sol[1].is_zero());
    /* inconsistent system */
    Matrix m2{row({1, 1}), row({1, 1})};
    Row rhs2 = row({1, 2});
    Row sol2;
    CHECK_FALSE(solve(m2, rhs2, sol2));
}

TEST_CASE("left nullspace") {
    /* rows 0 and 1 sum to row 2 */
    Matrix m{row({1, 0}), row({0, 1}), row({1, 1})};
    Matrix ns = left_nullspace(m);
    REQUIRE(ns.size() == 1);
    const Row& c = ns[0];
    for (std::size_t j = 0; j < 2; ++j) {
        ExactScalar s(0);
        for (std::size_t i = 0; i < 3; ++i) s += c[i] * m[i][j];
        CHECK(s.is_zero());
    }
    /* independent rows: trivial left kernel */
    Matrix m2{row({1, 0}), row({0, 1})};
    CHECK(left_nullspace(m2).empty());
}

TEST_CASE("surd entries eliminate exactly") {
    ExactScalar r = sqrt_2p(3);
    Matrix m{{r, ExactScalar(1)}, {ExactScalar(6), r}};
    /* second row = sqrt(6) times the first: rank 1 */
    CHECK(exact_rank(m) == 1);
}
