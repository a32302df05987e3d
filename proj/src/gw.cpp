#include "vscgw/gw.hpp"

#include <string>
#include <vector>

#include "vscgw/errors.hpp"
#include "vscgw/ratfun.hpp"
#include "vscgw/residue.hpp"

namespace vscgw {

namespace {

void check_degree(unsigned d) {
    if (d < 1 || d > 3)
        throw UnsupportedDegree("two-point invariants implemented for d in {1,2,3}, got " +
                                std::to_string(d));
}

RatFunExpr rf(SparsePoly p) { return RatFunExpr(std::move(p)); }

// prod_{m=1}^{d-1} ((m u + (d-m) v)/d)^{-N}, factor by factor so every pole
// base stays linear.
RatFunExpr t_factors_inv(unsigned N, unsigned d, const SparsePoly& u, const SparsePoly& v) {
    RatFunExpr out(1);
    for (unsigned m = 1; m < d; ++m) {
        SparsePoly base = (u * Rational(m) + v * Rational(d - m)) * Rational(1, d);
        out = out * rf(base).pow(-static_cast<int>(N));
    }
    return out;
}

}  // namespace

bool GwRequest::dimension_match() const {
    const long lhs = a + b;
    const long rhs = static_cast<long>(N) - 3 +
                     (static_cast<long>(N) - static_cast<long>(k)) * static_cast<long>(d);
    return lhs == rhs;
}

Rational gw_residue(const GwRequest& req) {
    check_degree(req.d);
    const long top = static_cast<long>(req.N) - 2;
    if (req.a < 0 || req.b < 0 || req.a > top || req.b > top) return Rational(0);
    if (!req.dimension_match()) return Rational(0);

    const unsigned N = req.N, k = req.k;
    const unsigned a = static_cast<unsigned>(req.a), b = static_cast<unsigned>(req.b);
    const int mN = -static_cast<int>(N);
    const SparsePoly x1 = SparsePoly::var("x1");
    const SparsePoly x2 = SparsePoly::var("x2");
    const SparsePoly x3 = SparsePoly::var("x3");
    const SparsePoly x4 = SparsePoly::var("x4");
    const RatFunExpr kx2 = rf(x2 * Rational(k));

    if (req.d == 1) {
        RatFunExpr ig = Rational(-1, 2) * rf(e_poly(k, 1, x1, x2)) * rf(x1 - x2).pow(2) *
                        rf(x1).pow(mN) * rf(x2).pow(mN) * rf(w_kernel(a, x1, x2)) *
                        rf(w_kernel(b, x1, x2));
        return iterated_residue(ig, {"x1", "x2"});
    }

    if (req.d == 2) {
        RatFunExpr ig1 = Rational(-1, 4) * rf(e_poly(k, 2, x1, x2)) * rf(x1 - x2).pow(2) *
                         t_factors_inv(N, 2, x1, x2) * rf(x1).pow(mN) * rf(x2).pow(mN) *
                         rf(w_kernel(a, x1, x2)) * rf(w_kernel(b, x1, x2));
        RatFunExpr comp = RatFunExpr(1) / rf(x2 - x1) + RatFunExpr(1) / rf(x2 - x3);
        RatFunExpr ig2 = Rational(1, 2) * rf(e_poly(k, 1, x1, x2)) * rf(e_poly(k, 1, x2, x3)) *
                         rf(x1).pow(mN) * rf(x2).pow(mN) * rf(x3).pow(mN) / kx2 / comp *
                         rf(w_kernel(a, x1, x2) + w_kernel(a, x2, x3)) *
                         rf(w_kernel(b, x1, x2) + w_kernel(b, x2, x3));
        return iterated_residue(ig1, {"x1", "x2"}) + iterated_residue(ig2, {"x1", "x2", "x3"});
    }

    const RatFunExpr kx1 = rf(x1 * Rational(k));
    const RatFunExpr kx3 = rf(x3 * Rational(k));
    RatFunExpr ig1 = Rational(-1, 6) * rf(e_poly(k, 3, x1, x2)) * rf(x1 - x2).pow(2) *
                     t_factors_inv(N, 3, x1, x2) * rf(x1).pow(mN) * rf(x2).pow(mN) *
                     rf(w_kernel(a, x1, x2)) * rf(w_kernel(b, x1, x2));

    RatFunExpr comp21 = RatFunExpr(2) / rf(x2 - x1) + RatFunExpr(1) / rf(x2 - x3);
    RatFunExpr ig2 = Rational(1, 4) * rf(e_poly(k, 2, x1, x2)) * rf(e_poly(k, 1, x2, x3)) *
                     t_factors_inv(N, 2, x1, x2) * rf(x1).pow(mN) * rf(x2).pow(mN) *
                     rf(x3).pow(mN) / kx2 / comp21 *
                     rf(w_kernel(a, x1, x2) * Rational(2) + w_kernel(a, x2, x3)) *
                     rf(w_kernel(b, x1, x2) * Rational(2) + w_kernel(b, x2, x3));

    RatFunExpr comp12 = RatFunExpr(1) / rf(x2 - x1) + RatFunExpr(2) / rf(x2 - x3);
    RatFunExpr ig3 = Rational(1, 4) * rf(e_poly(k, 1, x1, x2)) * rf(e_poly(k, 2, x2, x3)) *
                     t_factors_inv(N, 2, x2, x3) * rf(x1).pow(mN) * rf(x2).pow(mN) *
                     rf(x3).pow(mN) / kx2 / comp12 *
                     rf(w_kernel(a, x1, x2) + w_kernel(a, x2, x3) * Rational(2)) *
                     rf(w_kernel(b, x1, x2) + w_kernel(b, x2, x3) * Rational(2));

    RatFunExpr compL = RatFunExpr(1) / rf(x2 - x1) + RatFunExpr(1) / rf(x2 - x3);
    RatFunExpr compR = RatFunExpr(1) / rf(x3 - x2) + RatFunExpr(1) / rf(x3 - x4);
    RatFunExpr ig4 = Rational(-1, 2) * rf(e_poly(k, 1, x1, x2)) * rf(e_poly(k, 1, x2, x3)) *
                     rf(e_poly(k, 1, x3, x4)) * rf(x1).pow(mN) * rf(x2).pow(mN) *
                     rf(x3).pow(mN) * rf(x4).pow(mN) / kx2 / kx3 / compL / compR /
                     rf(x2 - x3).pow(2) *
                     rf(w_kernel(a, x1, x2) + w_kernel(a, x2, x3) + w_kernel(a, x3, x4)) *
                     rf(w_kernel(b, x1, x2) + w_kernel(b, x2, x3) + w_kernel(b, x3, x4));

    RatFunExpr ig5 = Rational(-1, 6) * rf(e_poly(k, 1, x1, x2)) * rf(e_poly(k, 1, x1, x3)) *
                     rf(e_poly(k, 1, x1, x4)) * rf(x1).pow(mN) * rf(x2).pow(mN) *
                     rf(x3).pow(mN) * rf(x4).pow(mN) / kx1.pow(2) *
                     rf(w_kernel(a, x1, x2) + w_kernel(a, x1, x3) + w_kernel(a, x1, x4)) *
                     rf(w_kernel(b, x1, x2) + w_kernel(b, x1, x3) + w_kernel(b, x1, x4));

    return iterated_residue(ig1, {"x1", "x2"}) + iterated_residue(ig2, {"x1", "x2", "x3"}) +
           iterated_residue(ig3, {"x1", "x2", "x3"}) +
           iterated_residue(ig4, {"x1", "x2", "x3", "x4"}) +
           iterated_residue(ig5, {"x1", "x2", "x3", "x4"});
}

namespace {

// 1 / (p/u + q/v); any vanishing piece marks a non-generic assignment.
Rational compound_inverse(const Rational& u, const Rational& v, unsigned p, unsigned q) {
    if (u.is_zero() || v.is_zero())
        throw DegenerateCharacters("coincident characters in a compound factor");
    Rational s = Rational(p) / u + Rational(q) / v;
    if (s.is_zero()) throw DegenerateCharacters("vanishing compound factor");
    return s.inverse();
}

Rational nonzero(const Rational& r, const char* what) {
    if (r.is_zero()) throw DegenerateCharacters(what);
    return r;
}

}  // namespace

Rational gw_equivariant(const GwRequest& req, const CharacterAssignment& lambda) {
    check_degree(req.d);
    const unsigned N = req.N, k = req.k, d = req.d;
    if (N < d + 1)
        throw RangeError("fixed-point sums need N >= d+1, got N = " + std::to_string(N));
    if (lambda.size() != N)
        throw RangeError("character assignment has " + std::to_string(lambda.size()) +
                         " values, expected " + std::to_string(N));
    const long top = static_cast<long>(N) - 2;
    if (req.a < 0 || req.b < 0 || req.a > top || req.b > top) return Rational(0);
    if (!req.dimension_match()) return Rational(0);

    const unsigned a = static_cast<unsigned>(req.a), b = static_cast<unsigned>(req.b);
    std::vector<Rational> V(N + 1);
    for (unsigned i = 1; i <= N; ++i) V[i] = equivariant_V(N, i, lambda);
    auto L = [&](unsigned i) -> const Rational& { return lambda.at(i); };
    auto w2 = [](unsigned e, const Rational& u, const Rational& v) { return w_value(e, u, v); };

    Rational tot(0);
    if (d == 1) {
        for (unsigned i = 1; i <= N; ++i)
            for (unsigned j = 1; j <= N; ++j) {
                if (i == j) continue;
                Rational diff = L(i) - L(j);
                tot += Rational(-1, 2) * equivariant_E(k, 1, i, j, lambda) * diff * diff /
                       (V[i] * V[j]) * w2(a, L(i), L(j)) * w2(b, L(i), L(j));
            }
        return tot;
    }

    if (d == 2) {
        for (unsigned i = 1; i <= N; ++i)
            for (unsigned j = 1; j <= N; ++j) {
                if (i == j) continue;
                Rational diff = L(i) - L(j);
                tot += Rational(-1, 4) * equivariant_E(k, 2, i, j, lambda) * diff * diff /
                       (equivariant_T(N, 2, i, j, lambda) * V[i] * V[j]) * w2(a, L(i), L(j)) *
                       w2(b, L(i), L(j));
            }
        for (unsigned i = 1; i <= N; ++i)
            for (unsigned j = 1; j <= N; ++j) {
                if (i == j) continue;
                for (unsigned l = 1; l <= N; ++l) {
                    if (j == l) continue;
                    Rational comp = compound_inverse(L(j) - L(i), L(j) - L(l), 1, 1);
                    tot += Rational(1, 2) * equivariant_E(k, 1, i, j, lambda) *
                           equivariant_E(k, 1, j, l, lambda) /
                           (V[i] * V[j] * V[l] * Rational(k) *
                            nonzero(L(j), "zero character at a chain vertex")) *
                           comp * (w2(a, L(i), L(j)) + w2(a, L(j), L(l))) *
                           (w2(b, L(i), L(j)) + w2(b, L(j), L(l)));
                }
            }
        return tot;
    }

    for (unsigned i = 1; i <= N; ++i)
        for (unsigned j = 1; j <= N; ++j) {
            if (i == j) continue;
            Rational diff = L(i) - L(j);
            tot += Rational(-1, 6) * equivariant_E(k, 3, i, j, lambda) * diff * diff /
                   (equivariant_T(N, 3, i, j, lambda) * V[i] * V[j]) * w2(a, L(i), L(j)) *
                   w2(b, L(i), L(j));
        }
    for (unsigned i = 1; i <= N; ++i)
        for (unsigned j = 1; j <= N; ++j) {
            if (i == j) continue;
            for (unsigned l = 1; l <= N; ++l) {
                if (j == l) continue;
                Rational comp = compound_inverse(L(j) - L(i), L(j) - L(l), 2, 1);
                tot += Rational(1, 2) * equivariant_E(k, 2, i, j, lambda) *
                       equivariant_E(k, 1, j, l, lambda) /
                       (equivariant_T(N, 2, i, j, lambda) * V[i] * V[j] * V[l] * Rational(k) *
                        nonzero(L(j), "zero character at a chain vertex")) *
                       comp * (Rational(2) * w2(a, L(i), L(j)) + w2(a, L(j), L(l))) *
                       (Rational(2) * w2(b, L(i), L(j)) + w2(b, L(j), L(l)));
            }
        }
    for (unsigned i = 1; i <= N; ++i)
        for (unsigned j = 1; j <= N; ++j) {
            if (i == j) continue;
            for (unsigned l = 1; l <= N; ++l) {
                if (j == l) continue;
                Rational comp1 = compound_inverse(L(j) - L(i), L(j) - L(l), 1, 1);
                for (unsigned m = 1; m <= N; ++m) {
                    if (l == m) continue;
                    Rational comp2 = compound_inverse(L(l) - L(j), L(l) - L(m), 1, 1);
                    Rational mid = L(j) - L(l);
                    tot += Rational(-1, 2) * equivariant_E(k, 1, i, j, lambda) *
                           equivariant_E(k, 1, j, l, lambda) *
                           equivariant_E(k, 1, l, m, lambda) /
                           (V[i] * V[j] * V[l] * V[m] * Rational(k) *
                            nonzero(L(j), "zero character at a chain vertex") * Rational(k) *
                            nonzero(L(l), "zero character at a chain vertex")) *
                           comp1 * comp2 / (mid * mid) *
                           (w2(a, L(i), L(j)) + w2(a, L(j), L(l)) + w2(a, L(l), L(m))) *
                           (w2(b, L(i), L(j)) + w2(b, L(j), L(l)) + w2(b, L(l), L(m)));
                }
            }
        }
    for (unsigned i = 1; i <= N; ++i) {
        Rational ki = Rational(k) * nonzero(L(i), "zero character at the star center");
        for (unsigned j = 1; j <= N; ++j) {
            if (i == j) continue;
            for (unsigned l = 1; l <= N; ++l) {
                if (i == l) continue;
                for (unsigned m = 1; m <= N; ++m) {
                    if (i == m) continue;
                    tot += Rational(-1, 6) * equivariant_E(k, 1, i, j, lambda) *
                           equivariant_E(k, 1, i, l, lambda) *
                           equivariant_E(k, 1, i, m, lambda) /
                           (V[i] * V[j] * V[l] * V[m] * ki * ki) *
                           (w2(a, L(i), L(j)) + w2(a, L(i), L(l)) + w2(a, L(i), L(m))) *
                           (w2(b, L(i), L(j)) + w2(b, L(i), L(l)) + w2(b, L(i), L(m)));
                }
            }
        }
    }
    return tot;
}

bool degenerate_characters(const CharacterAssignment& lambda, unsigned d) {
    const unsigned N = lambda.size();
    for (unsigned i = 1; i <= N; ++i) {
        if (lambda.at(i).is_zero()) return true;
        for (unsigned j = i + 1; j <= N; ++j)
            if (lambda.at(i) == lambda.at(j)) return true;
    }
    for (unsigned i = 1; i <= N; ++i)
        for (unsigned j = 1; j <= N; ++j) {
            if (i == j) continue;
            for (unsigned dd = 2; dd <= d && dd <= 3; ++dd)
                for (unsigned m = 1; m < dd; ++m) {
                    Rational mid = (Rational(m) * lambda.at(i) + Rational(dd - m) * lambda.at(j)) /
                                   Rational(dd);
                    for (unsigned c = 1; c <= N; ++c)
                        if (mid == lambda.at(c)) return true;
                }
        }
    if (d >= 2)
        for (unsigned i = 1; i <= N; ++i)
            for (unsigned j = 1; j <= N; ++j) {
                if (i == j) continue;
                for (unsigned l = 1; l <= N; ++l) {
                    if (j == l) continue;
                    if ((Rational(2) * lambda.at(j) - lambda.at(i) - lambda.at(l)).is_zero())
                        return true;
                    if (d >= 3 && (Rational(3) * lambda.at(j) - lambda.at(i) -
                                   Rational(2) * lambda.at(l))
                                      .is_zero())
                        return true;
                }
            }
    return false;
}

CharacterAssignment generic_characters(unsigned N, unsigned d, unsigned seed) {
    for (unsigned attempt = 0; attempt < 64; ++attempt) {
        CharacterAssignment lambda = CharacterAssignment::standard(N, seed, attempt);
        if (!degenerate_characters(lambda, d)) return lambda;
    }
    throw DegenerateCharacters("no generic character assignment within 64 perturbations");
}

Rational gw_equivariant_seeded(const GwRequest& req, unsigned seed) {
    for (unsigned attempt = 0; attempt < 64; ++attempt) {
        CharacterAssignment lambda = CharacterAssignment::standard(req.N, seed, attempt);
        if (degenerate_characters(lambda, req.d)) continue;
        try {
            return gw_equivariant(req, lambda);
        } catch (const DegenerateCharacters&) {
        }
    }
    throw DegenerateCharacters("no generic character assignment within 64 perturbations");
}

Rational gw_three_point(const GwRequest& req) { return Rational(req.d) * gw_residue(req); }

}  // namespace vscgw
