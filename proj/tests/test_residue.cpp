#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vscgw/errors.hpp"
#include "vscgw/residue.hpp"

using namespace vscgw;

namespace {

RatFunExpr X(const std::string& s) { return RatFunExpr::var(s); }
SparsePoly P(const std::string& s) { return SparsePoly::var(s); }
const RatFunExpr one{Rational(1)};

}  // namespace

TEST_CASE("single residue basics") {
    auto [p, q] = residue_at_zero(SparsePoly{Rational(1)}, P("x"), "x");
    CHECK(p == SparsePoly{Rational(1)});
    CHECK(q == SparsePoly{Rational(1)});

    auto [p2, q2] = residue_at_zero(SparsePoly{Rational(1)}, SparsePoly{Rational(1)}, "x");
    CHECK(p2.is_zero());
    CHECK(q2 == SparsePoly{Rational(1)});

    // res_x of x^2/x = x is 0: pole order cancelled by the numerator
    auto [p3, q3] = residue_at_zero(SparsePoly::var("x", 2), P("x"), "x");
    CHECK(p3.is_zero());
}

TEST_CASE("residue with higher-order pole") {
    SparsePoly x0 = P("x0"), x1 = P("x1");
    SparsePoly num = (x0 + x1 * Rational(3)) * (x0 * Rational(3) + x1) * Rational(2);
    SparsePoly den = x0 * x1 * (x0 + x1).pow(2);
    auto [p, q] = residue_at_zero(num, den, "x0");
    CHECK(p == SparsePoly{Rational(6)});
    CHECK(q == x1);
}

TEST_CASE("iterated residue basics") {
    CHECK(iterated_residue(one / (X("x0") * X("x1")), {"x0", "x1"}) == Rational(1));

    RatFunExpr num = RatFunExpr(Rational(2)) * (X("x0") + RatFunExpr(Rational(3)) * X("x1")) *
                     (RatFunExpr(Rational(3)) * X("x0") + X("x1"));
    RatFunExpr den = X("x0") * X("x1") * (X("x0") + X("x1")).pow(2);
    CHECK(iterated_residue(num / den, {"x0", "x1"}) == Rational(6));
}

TEST_CASE("three variable chain") {
    RatFunExpr num = RatFunExpr(Rational(4)) * (X("x0") + X("x1")) * (X("x1") + X("x2"));
    RatFunExpr den = X("x0") * X("x1").pow(2) * X("x2") *
                     (RatFunExpr(Rational(2)) * X("x1") - X("x0") - X("x2"));
    CHECK(iterated_residue(num / den, {"x0", "x1", "x2"}) == Rational(-4));
}

TEST_CASE("polynomials have no residue") {
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> coeff(-9, 9), expo(0, 4);
    for (int trial = 0; trial < 10; ++trial) {
        SparsePoly p;
        for (int i = 0; i < 4; ++i)
            p += SparsePoly::var("x", expo(rng)) * Rational(coeff(rng));
        CHECK(iterated_residue(Fraction{p}, {"x"}) == Rational(0));
    }
}

TEST_CASE("linearity") {
    std::mt19937 rng(915);
    std::uniform_int_distribution<int> c(1, 9);
    for (int trial = 0; trial < 8; ++trial) {
        Rational alpha(c(rng), c(rng)), beta(-c(rng), c(rng));
        RatFunExpr f = (X("x") + RatFunExpr(Rational(c(rng))) * X("y")) /
                       (X("x").pow(2) * X("y"));
        RatFunExpr g = RatFunExpr(Rational(c(rng))) / (X("x") * X("y"));
        RatFunExpr combo = RatFunExpr(alpha) * f + RatFunExpr(beta) * g;
        std::vector<std::string> ord{"x", "y"};
        CHECK(iterated_residue(combo, ord) ==
              alpha * iterated_residue(f, ord) + beta * iterated_residue(g, ord));
    }
}

TEST_CASE("homogeneity filter") {
    // homogeneous of degree != -(#vars) always vanishes
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(1, 5);
    for (int trial = 0; trial < 8; ++trial) {
        // degree -4 in three variables
        RatFunExpr f = (X("x0") * Rational(c(rng)) + X("x1") * Rational(c(rng))) /
                       (X("x0").pow(2) * X("x1") * X("x2") *
                        (X("x0") + X("x1") * Rational(c(rng))));
        CHECK(iterated_residue(f, {"x0", "x1", "x2"}) == Rational(0));
    }
}

TEST_CASE("order sensitivity") {
    // genuinely order-dependent integrand
    RatFunExpr f = one / (X("x0") * X("x1") *
                          (RatFunExpr(Rational(2)) * X("x1") - X("x0") - X("x2")));
    CHECK(iterated_residue(f, {"x0", "x1", "x2"}) == Rational(-1));
    CHECK(iterated_residue(f, {"x2", "x1", "x0"}) == Rational(0));
    // adding an x2 pole makes the degree filter kill both orders
    RatFunExpr g = f / X("x2");
    CHECK(iterated_residue(g, {"x0", "x1", "x2"}) == Rational(0));
    CHECK(iterated_residue(g, {"x2", "x1", "x0"}) == Rational(0));
}

TEST_CASE("order mismatch") {
    RatFunExpr f = one / (X("x") * X("y"));
    CHECK_THROWS_AS(iterated_residue(f, {"x", "x", "y"}), OrderMismatch);
    CHECK_THROWS_AS(iterated_residue(f, {"x"}), OrderMismatch);
    // a variable in the order but not the expression is allowed: residue 0
    CHECK(iterated_residue(f, {"x", "y", "z"}) == Rational(0));
}

TEST_CASE("series divisors with polynomial leading coefficient") {
    // res_x0 of 1/(x0 (x1 - x0)) = 1/x1, then res_x1 -> 0 by analyticity;
    // against 1/(x0 x1 (x1 - x0)) -> res_x0 = 1/x1^2, res_x1 = 0
    Fraction f{SparsePoly{Rational(1)}};
    f.push_den(P("x0"));
    f.push_den(P("x1") - P("x0"));
    Fraction r = residue_step(f, "x0");
    CHECK(r.num == SparsePoly{Rational(1)});
    CHECK(r.den_expanded() == P("x1"));
    // residue commutes with scaling by a var-free rational function
    Fraction g{P("x1") * Rational(5)};
    g.push_den(P("x0"), 2);
    g.push_den(P("x1") + P("x0"));
    Fraction rg = residue_step(g, "x0");
    // 5 x1 / (x0^2 (x0+x1)): Laurent coeff of x0^{-1} is -5 x1/x1^2 = -5/x1
    CHECK(rg.num == SparsePoly{Rational(-5)});
    CHECK(rg.den_expanded() == P("x1"));
}

TEST_CASE("deep pole order") {
    // res_x of (x+y)^6 / x^5 = binom(6,4) y^2 = 15 y^2
    Fraction f{(P("x") + P("y")).pow(6)};
    f.push_den(P("x"), 5);
    Fraction r = residue_step(f, "x");
    CHECK(r.num == SparsePoly::var("y", 2) * Rational(15));
    CHECK(r.den.empty());
}
