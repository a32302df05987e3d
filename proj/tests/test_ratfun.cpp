#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vscgw/errors.hpp"
#include "vscgw/ratfun.hpp"

using namespace vscgw;

namespace {

RatFunExpr X(const std::string& s) { return RatFunExpr::var(s); }
SparsePoly P(const std::string& s) { return SparsePoly::var(s); }

RatFunExpr random_expr(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> coeff(-4, 4), pick(0, 3);
    if (depth == 0) {
        switch (pick(rng)) {
            case 0: return X("x");
            case 1: return X("y");
            case 2: return RatFunExpr(Rational(coeff(rng)));
            default: return X("x") + RatFunExpr(Rational(1));
        }
    }
    RatFunExpr a = random_expr(rng, depth - 1), b = random_expr(rng, depth - 1);
    switch (pick(rng)) {
        case 0: return a + b;
        case 1: return a - b;
        case 2: return a * b;
        default: return a * b + RatFunExpr(Rational(1));  // keep denominators tame
    }
}

bool same_value(const std::pair<SparsePoly, SparsePoly>& f,
                const std::pair<SparsePoly, SparsePoly>& g) {
    return f.first * g.second == g.first * f.second;
}

}  // namespace

TEST_CASE("normalize basics") {
    auto [p, q] = normalize(X("x") + X("x"));
    CHECK(p == P("x") * Rational(2));
    CHECK(q == SparsePoly{Rational(1)});

    auto [p2, q2] = normalize((X("x") * X("x") - X("y") * X("y")) / (X("x") - X("y")));
    CHECK(p2 == P("x") + P("y"));
    CHECK(q2 == SparsePoly{Rational(1)});
}

TEST_CASE("compound pole factor") {
    RatFunExpr one{Rational(1)};
    RatFunExpr e = one / (one / (X("x2") - X("x1")) + one / (X("x2") - X("x3")));
    auto [p, q] = normalize(e);
    SparsePoly x1 = P("x1"), x2 = P("x2"), x3 = P("x3");
    CHECK(p == (x2 - x1) * (x2 - x3));
    CHECK(q == x2 * Rational(2) - x1 - x3);
}

TEST_CASE("content and sign conventions") {
    auto [p, q] = normalize(X("x") * RatFunExpr(Rational(4, 6)));
    CHECK(p == P("x") * Rational(2));
    CHECK(q == SparsePoly{Rational(3)});

    auto [p2, q2] = normalize(X("x") / (RatFunExpr(Rational(1)) - X("y")));
    // denominator leading coefficient must be positive: 1 - y -> (-x, y - 1)
    CHECK(q2 == P("y") - SparsePoly{Rational(1)});
    CHECK(p2 == -P("x"));
}

TEST_CASE("division by zero polynomial") {
    CHECK_THROWS_AS(normalize(RatFunExpr(Rational(1)) / (X("x") - X("x"))),
                    DivisionByZeroPolynomial);
    CHECK_THROWS_AS(normalize(X("x") / RatFunExpr(Rational(0))), DivisionByZeroPolynomial);
    CHECK_THROWS_AS(normalize(X("x").pow(-1) * RatFunExpr(Rational(0)).pow(-2)),
                    DivisionByZeroPolynomial);
}

TEST_CASE("integer powers") {
    auto [p, q] = normalize((X("x") + X("y")).pow(2));
    CHECK(p == (P("x") + P("y")).pow(2));
    auto [p2, q2] = normalize(X("x").pow(-3));
    CHECK(p2 == SparsePoly{Rational(1)});
    CHECK(q2 == SparsePoly::var("x", 3));
    auto [p3, q3] = normalize((X("x") / X("y")).pow(0));
    CHECK(p3 == SparsePoly{Rational(1)});
    CHECK(q3 == SparsePoly{Rational(1)});
}

TEST_CASE("ring morphism on random expression pairs") {
    std::mt19937 rng(7119);
    int nontrivial = 0;
    for (int trial = 0; trial < 30; ++trial) {
        RatFunExpr a = random_expr(rng, 2), b = random_expr(rng, 2);
        auto na = normalize(a), nb = normalize(b);
        auto sum = normalize(a + b);
        CHECK(same_value(sum, {na.first * nb.second + nb.first * na.second,
                               na.second * nb.second}));
        auto prod = normalize(a * b);
        CHECK(same_value(prod, {na.first * nb.first, na.second * nb.second}));
        if (!na.second.is_constant() || !nb.second.is_constant()) ++nontrivial;
    }
}

TEST_CASE("fraction keeps denominators factored") {
    RatFunExpr one{Rational(1)};
    RatFunExpr e = (one / (X("a") - X("b"))) * (one / (X("a") + X("b"))).pow(2);
    Fraction f = e.fraction();
    CHECK(f.den.size() == 2);
    CHECK(f.num == SparsePoly{Rational(1)});
    CHECK(f.den_expanded() == (P("a") - P("b")) * (P("a") + P("b")).pow(2));

    // merging equal bases and folding signed content into the numerator
    Fraction g{SparsePoly{Rational(1)}};
    g.push_den((P("a") - P("b")) * Rational(-2));
    g.push_den(P("a") - P("b"), 2);
    REQUIRE(g.den.size() == 1);
    CHECK(g.den[0].base == P("a") - P("b"));
    CHECK(g.den[0].exp == 3);
    CHECK(g.num == SparsePoly{Rational(-1, 2)});
}

TEST_CASE("fraction light reduce cancels exact factors") {
    Fraction f{(P("x") + P("y")).pow(2) * (P("x") - P("y"))};
    f.push_den(P("x") + P("y"));
    f.push_den(P("x") - P("y"), 2);
    f.light_reduce();
    CHECK(f.num == P("x") + P("y"));
    REQUIRE(f.den.size() == 1);
    CHECK(f.den[0].base == P("x") - P("y"));
    CHECK(f.den[0].exp == 1);
}

TEST_CASE("fraction degree and homogeneity") {
    RatFunExpr one{Rational(1)};
    Fraction f = (one / (X("x").pow(2) * (X("x") - X("y")))).fraction();
    CHECK(f.is_homogeneous());
    CHECK(f.degree() == -3);
    Fraction g = ((X("x") + one) / X("y")).fraction();
    CHECK(!g.is_homogeneous());
}

TEST_CASE("multivariate gcd") {
    SparsePoly x = P("x"), y = P("y");
    CHECK(poly_gcd(x, y) == SparsePoly{Rational(1)});
    CHECK(poly_gcd(x * Rational(6), x * Rational(4)) == x);
    CHECK(poly_gcd(SparsePoly{}, x * Rational(-3)) == x);
    SparsePoly g = (x + y) * (x - y);
    CHECK(poly_gcd((x + y).pow(2) * (x - y), (x + y) * (x - y).pow(2)) == g);
    SparsePoly c = x + y + SparsePoly{Rational(1)};
    SparsePoly a = x - y + SparsePoly{Rational(2)};
    SparsePoly b = x + y * Rational(2) - SparsePoly{Rational(1)};
    CHECK(poly_gcd(c * a, c * b) == c);
}

TEST_CASE("reduce pair applies gcd only over threshold") {
    SparsePoly x = P("x"), y = P("y");
    SparsePoly g = x + y + SparsePoly{Rational(1)};
    SparsePoly a = x - y + SparsePoly{Rational(2)};
    SparsePoly b = x + y * Rational(2) - SparsePoly{Rational(1)};
    auto forced = reduce_pair(g * a, g * b, 0);
    auto direct = reduce_pair(a, b, 0);
    CHECK(forced.first == direct.first);
    CHECK(forced.second == direct.second);
    auto lazy = reduce_pair(g * a, g * b, 500);
    CHECK(same_value(lazy, direct));
    CHECK(lazy.first == g * a);  // below threshold the product stays
}
