#include "vscgw/mirror.hpp"

#include <initializer_list>
#include <string>
#include <vector>

#include "vscgw/blocks.hpp"
#include "vscgw/errors.hpp"
#include "vscgw/gw.hpp"
#include "vscgw/ratfun.hpp"

namespace vscgw {

long a_coeff(long j, unsigned k, unsigned N) {
    const long g = static_cast<long>(k) - static_cast<long>(N);
    if (g < 0 || j < 0 || j > 2 * g)
        throw RangeError("A_j defined for 0 <= j <= 2(k-N), got j = " + std::to_string(j));
    return j <= g ? j + 1 : 1 + 2 * g - j;
}

namespace {

void check_degree(unsigned d) {
    if (d < 1 || d > 3)
        throw UnsupportedDegree("mirror transform implemented for d in {1,2,3}, got " +
                                std::to_string(d));
}

}  // namespace

Rational c11(unsigned N, unsigned k, long n, VscTable& table) {
    const long g = static_cast<long>(k) - static_cast<long>(N);
    auto L1 = [&](long m) { return vsc_recursive({N, k, 1, m}, table); };
    auto block = [&](long base) {
        Rational part(0);
        for (long j = 0; j <= g - 1; ++j) {
            Rational paired(0);
            for (long m = 0; m <= j; ++m) paired += L1(base - m) * L1(base - 2 * g + j - m);
            Rational full(0);
            for (long m = 0; m <= 2 * g; ++m) full += L1(base - m);
            Rational inner(0);
            for (long m = j + 1; m <= 2 * g - j - 1; ++m) inner += L1(base - m);
            part += paired - L1(g + 2 + j) * full + L1(1 + g) * inner;
        }
        return part;
    };
    return block(n) - block(1 + 3 * g);
}

Rational mirror_transform(const VscKey& key, VscTable& table) {
    check_degree(key.d);
    const long N = key.N, k = key.k, d = key.d, n = key.n;
    const long g = k - N;
    if (N - 2 - n < 0 || n - 1 + (N - k) * d < 0)
        throw RangeError("ineffective insertion for (N=" + std::to_string(N) +
                         ", k=" + std::to_string(k) + ", d=" + std::to_string(d) +
                         ", n=" + std::to_string(n) + ")");
    auto L = [&](unsigned dd, long m) { return vsc_recursive({key.N, key.k, dd, m}, table); };

    if (key.d == 1) return L(1, n) - L(1, 1 + g);

    if (key.d == 2) {
        Rational corr(0);
        for (long j = 0; j <= g; ++j) corr += L(1, n - j) - L(1, 1 + 2 * g - j);
        return Rational(1, 2) * (L(2, n) - L(2, 1 + 2 * g)) - L(1, 1 + g) * corr;
    }

    Rational s2(0);
    for (long j = 0; j <= g; ++j) s2 += L(2, n - j) - L(2, 1 + 3 * g - j);
    Rational s1(0), sA(0);
    for (long j = 0; j <= 2 * g; ++j) {
        Rational diff = L(1, n - j) - L(1, 1 + 3 * g - j);
        s1 += diff;
        sA += Rational(a_coeff(j, key.k, key.N)) * diff;
    }
    Rational l11 = L(1, 1 + g);
    return Rational(1, 3) * (L(3, n) - L(3, 1 + 3 * g)) - l11 * (s2 + c11(key.N, key.k, n, table)) -
           Rational(1, 2) * L(2, 1 + 2 * g) * s1 + Rational(3, 2) * l11 * l11 * sA;
}

std::vector<TransformReport> verify_theorem2(unsigned N, unsigned k, unsigned d) {
    check_degree(d);
    VscTable table;
    std::vector<TransformReport> out;
    for (long n = 0; n <= vsc_window_max(N, k, d); ++n) {
        const long a = static_cast<long>(N) - 2 - n;
        const long b = n - 1 + (static_cast<long>(N) - static_cast<long>(k)) * d;
        if (a < 0 || b < 0) continue;
        TransformReport r;
        r.key = {N, k, d, n};
        r.lhs = gw_residue({N, k, d, a, b}) / Rational(k);
        r.rhs = mirror_transform(r.key, table);
        r.equal = r.lhs == r.rhs;
        out.push_back(r);
    }
    return out;
}

namespace {

RatFunExpr rf(SparsePoly p) { return RatFunExpr(std::move(p)); }

bool vanishes(const RatFunExpr& e) { return normalize(e).first == SparsePoly{}; }

// w_a(x1,x2) + w_a(x2,x3) = (2 x2 - x1 - x3) w_a(x1,x2,x3) + 2 w_a(x1,x3)
bool check_rel1() {
    const SparsePoly X1 = SparsePoly::var("x1"), X2 = SparsePoly::var("x2"),
                     X3 = SparsePoly::var("x3");
    for (unsigned a = 0; a <= 8; ++a) {
        SparsePoly lhs = w_kernel(a, X1, X2) + w_kernel(a, X2, X3);
        SparsePoly rhs =
            (X2 * Rational(2) - X1 - X3) * w_kernel(a, X1, X2, X3) + w_kernel(a, X1, X3) * Rational(2);
        if (!vanishes(rf(lhs - rhs))) return false;
    }
    return true;
}

// e(k,2;u,2v-u) * kv = e(k,1;u,v) e(k,1;v,2v-u)  and the kernel halving
// w_a(u,v) + w_a(v,2v-u) = 2 w_a(u,2v-u)
bool check_rel2() {
    const SparsePoly U = SparsePoly::var("li"), V = SparsePoly::var("lj");
    const SparsePoly R = V * Rational(2) - U;
    for (unsigned k = 1; k <= 5; ++k) {
        SparsePoly lhs = e_poly(k, 2, U, R) * (V * Rational(k));
        SparsePoly rhs = e_poly(k, 1, U, V) * e_poly(k, 1, V, R);
        if (!vanishes(rf(lhs - rhs))) return false;
    }
    for (unsigned a = 0; a <= 8; ++a) {
        SparsePoly lhs = w_kernel(a, U, V) + w_kernel(a, V, R);
        SparsePoly rhs = w_kernel(a, U, R) * Rational(2);
        if (!vanishes(rf(lhs - rhs))) return false;
    }
    return true;
}

// (x1-x2)^2 w_a w_b = x1^{a+b} + x2^{a+b} - x1^a x2^b - x1^b x2^a
bool check_dec1() {
    const SparsePoly X1 = SparsePoly::var("x1"), X2 = SparsePoly::var("x2");
    for (unsigned a = 0; a <= 6; ++a)
        for (unsigned b = 0; b <= 6; ++b) {
            SparsePoly d = X1 - X2;
            SparsePoly lhs = d * d * w_kernel(a, X1, X2) * w_kernel(b, X1, X2);
            SparsePoly rhs = X1.pow(a + b) + X2.pow(a + b) - X1.pow(a) * X2.pow(b) -
                             X1.pow(b) * X2.pow(a);
            if (!vanishes(rf(lhs - rhs))) return false;
        }
    return true;
}

bool check_dec2() {
    const SparsePoly X1 = SparsePoly::var("x1"), X2 = SparsePoly::var("x2"),
                     X3 = SparsePoly::var("x3");
    const RatFunExpr one(1);
    for (unsigned a = 0; a <= 6; ++a)
        for (unsigned b = 0; b <= 6; ++b) {
            RatFunExpr Wa12 = rf(w_kernel(a, X1, X2)), Wa23 = rf(w_kernel(a, X2, X3));
            RatFunExpr Wb12 = rf(w_kernel(b, X1, X2)), Wb23 = rf(w_kernel(b, X2, X3));
            RatFunExpr lhs =
                (Wa12 + Wa23) * (Wb12 + Wb23) / (one / rf(X2 - X1) + one / rf(X2 - X3));
            RatFunExpr mid = rf((X2 - X1) * (X2 - X3)) * (Wa12 + Wa23) * (Wb12 + Wb23) /
                             rf(X2 * Rational(2) - X1 - X3);
            RatFunExpr rhs = rf(X1.pow(a) - X3.pow(a)) * rf(X3.pow(b) - X1.pow(b)) /
                                 rf(X2 * Rational(2) - X1 - X3) +
                             rf(X2 - X1) * Wa12 * Wb12 + rf(X2 - X3) * Wa23 * Wb23;
            if (!vanishes(lhs - mid) || !vanishes(mid - rhs)) return false;
        }
    return true;
}

bool check_dec3() {
    const SparsePoly X1 = SparsePoly::var("x1"), X2 = SparsePoly::var("x2"),
                     X3 = SparsePoly::var("x3");
    const RatFunExpr one(1);
    for (unsigned a = 0; a <= 6; ++a)
        for (unsigned b = 0; b <= 6; ++b) {
            RatFunExpr Ka = rf(w_kernel(a, X1, X2) * Rational(2) + w_kernel(a, X2, X3));
            RatFunExpr Kb = rf(w_kernel(b, X1, X2) * Rational(2) + w_kernel(b, X2, X3));
            RatFunExpr lhs =
                RatFunExpr(2) * Ka * Kb / (RatFunExpr(2) / rf(X2 - X1) + one / rf(X2 - X3));
            SparsePoly half = (X2 - X1) * Rational(1, 2) + (X2 - X3);
            RatFunExpr mid = rf((X2 - X1) * (X2 - X3)) * Ka * Kb / rf(half);
            RatFunExpr rhs =
                RatFunExpr(2) * rf(X1.pow(a) - X3.pow(a)) * rf(X3.pow(b) - X1.pow(b)) / rf(half) +
                RatFunExpr(4) * rf(X2 - X1) * rf(w_kernel(a, X1, X2) * w_kernel(b, X1, X2)) +
                RatFunExpr(2) * rf(X2 - X3) * rf(w_kernel(a, X2, X3) * w_kernel(b, X2, X3));
            if (!vanishes(lhs - mid) || !vanishes(mid - rhs)) return false;
        }
    return true;
}

bool check_dec4() {
    const SparsePoly X1 = SparsePoly::var("x1"), X2 = SparsePoly::var("x2"),
                     X3 = SparsePoly::var("x3");
    const RatFunExpr one(1);
    for (unsigned a = 0; a <= 6; ++a)
        for (unsigned b = 0; b <= 6; ++b) {
            RatFunExpr Ka = rf(w_kernel(a, X1, X2) + w_kernel(a, X2, X3) * Rational(2));
            RatFunExpr Kb = rf(w_kernel(b, X1, X2) + w_kernel(b, X2, X3) * Rational(2));
            RatFunExpr lhs =
                RatFunExpr(2) * Ka * Kb / (one / rf(X2 - X1) + RatFunExpr(2) / rf(X2 - X3));
            SparsePoly half = (X2 - X1) + (X2 - X3) * Rational(1, 2);
            RatFunExpr mid = rf((X2 - X1) * (X2 - X3)) * Ka * Kb / rf(half);
            RatFunExpr rhs =
                RatFunExpr(2) * rf(X1.pow(a) - X3.pow(a)) * rf(X3.pow(b) - X1.pow(b)) / rf(half) +
                RatFunExpr(2) * rf(X2 - X1) * rf(w_kernel(a, X1, X2) * w_kernel(b, X1, X2)) +
                RatFunExpr(4) * rf(X2 - X3) * rf(w_kernel(a, X2, X3) * w_kernel(b, X2, X3));
            if (!vanishes(lhs - mid) || !vanishes(mid - rhs)) return false;
        }
    return true;
}

bool check_dec5() {
    const SparsePoly X1 = SparsePoly::var("x1"), X2 = SparsePoly::var("x2"),
                     X3 = SparsePoly::var("x3"), X4 = SparsePoly::var("x4");
    const RatFunExpr one(1);
    const SparsePoly r1 = X2 * Rational(2) - X1 - X3;
    const SparsePoly r2 = X3 * Rational(2) - X2 - X4;
    for (unsigned a = 0; a <= 6; ++a)
        for (unsigned b = 0; b <= 6; ++b) {
            RatFunExpr sumA =
                rf(w_kernel(a, X1, X2) + w_kernel(a, X2, X3) + w_kernel(a, X3, X4));
            RatFunExpr sumB =
                rf(w_kernel(b, X1, X2) + w_kernel(b, X2, X3) + w_kernel(b, X3, X4));
            RatFunExpr compL = one / rf(X2 - X1) + one / rf(X2 - X3);
            RatFunExpr compR = one / rf(X3 - X2) + one / rf(X3 - X4);
            RatFunExpr lhs = -(sumA * sumB) / (compL * compR * rf(X2 - X3).pow(2));
            RatFunExpr mid = rf((X2 - X1) * (X3 - X4)) * sumA * sumB / (rf(r1) * rf(r2));
            RatFunExpr rhs =
                rf(X1.pow(a) - X4.pow(a)) * rf(X4.pow(b) - X1.pow(b)) / (rf(r1) * rf(r2)) +
                (RatFunExpr(2) * rf((X3 - X1) * w_kernel(a, X1, X3) * w_kernel(b, X1, X3)) +
                 rf((X3 - X4) * w_kernel(a, X3, X4) * w_kernel(b, X3, X4))) /
                    rf(r1) +
                (RatFunExpr(2) * rf((X2 - X4) * w_kernel(a, X2, X4) * w_kernel(b, X2, X4)) +
                 rf((X2 - X1) * w_kernel(a, X1, X2) * w_kernel(b, X1, X2))) /
                    rf(r2) +
                Rational(1, 2) *
                    rf(w_kernel(a, X1, X2) * w_kernel(b, X1, X2) +
                       w_kernel(a, X3, X4) * w_kernel(b, X3, X4) +
                       w_kernel(a, X1, X2) * w_kernel(b, X2, X3) +
                       w_kernel(a, X2, X3) * w_kernel(b, X1, X2) +
                       w_kernel(a, X2, X3) * w_kernel(b, X3, X4) +
                       w_kernel(a, X3, X4) * w_kernel(b, X2, X3)) +
                rf(X3 - X1) *
                    (rf(w_kernel(a, X1, X3) * w_kernel(b, X1, X2, X3) +
                        w_kernel(a, X1, X2, X3) * w_kernel(b, X1, X3)) +
                     Rational(1, 2) * rf(r1 * w_kernel(a, X1, X2, X3) * w_kernel(b, X1, X2, X3))) +
                rf(X2 - X4) *
                    (rf(w_kernel(a, X2, X4) * w_kernel(b, X2, X3, X4) +
                        w_kernel(a, X2, X3, X4) * w_kernel(b, X2, X4)) +
                     Rational(1, 2) * rf(r2 * w_kernel(a, X2, X3, X4) * w_kernel(b, X2, X3, X4)));
            if (!vanishes(lhs - mid) || !vanishes(mid - rhs)) return false;
        }
    return true;
}

// degree shift of one chain integrand: dropping N -> N+1 in all x-powers and
// t-factors costs exactly the factor (x_0...x_l) prod_j prod_i (i x_{j-1} +
// (d_j - i) x_j)/d_j
bool check_reduction() {
    auto side = [](unsigned N, unsigned k, const OrderedPartition& sigma, bool shifted) {
        const unsigned l = static_cast<unsigned>(sigma.size());
        const unsigned Nuse = shifted ? N + 1 : N;
        std::vector<SparsePoly> x(l + 1);
        for (unsigned j = 0; j <= l; ++j) x[j] = SparsePoly::var("x" + std::to_string(j));
        RatFunExpr expr(1);
        for (unsigned j = 0; j <= l; ++j) expr = expr * rf(x[j]).pow(-static_cast<int>(Nuse));
        for (unsigned j = 1; j < l; ++j) {
            SparsePoly comp = (x[j] - x[j - 1]) * Rational(1, sigma[j - 1]) +
                              (x[j] - x[j + 1]) * Rational(1, sigma[j]);
            expr = expr / rf(x[j] * Rational(k)) / rf(comp);
        }
        for (unsigned j = 1; j <= l; ++j)
            expr = expr * rf(e_poly(k, sigma[j - 1], x[j - 1], x[j])) /
                   rf(t_poly(Nuse, sigma[j - 1], x[j - 1], x[j]));
        if (shifted) {
            SparsePoly extra{Rational(1)};
            for (unsigned j = 0; j <= l; ++j) extra = extra * x[j];
            for (unsigned j = 1; j <= l; ++j) {
                const unsigned dj = sigma[j - 1];
                for (unsigned i = 1; i < dj; ++i)
                    extra = extra * (x[j - 1] * Rational(i, dj) + x[j] * Rational(dj - i, dj));
            }
            expr = expr * rf(extra);
        }
        return expr;
    };
    for (unsigned N : {3u, 4u})
        for (unsigned k : {2u, 3u})
            for (unsigned d = 1; d <= 3; ++d)
                for (const auto& sigma : ordered_partitions(d))
                    if (!vanishes(side(N, k, sigma, false) - side(N, k, sigma, true)))
                        return false;
    return true;
}

bool check_sigma_d2() {
    const SparsePoly X0 = SparsePoly::var("x0"), X1 = SparsePoly::var("x1"),
                     X2 = SparsePoly::var("x2");
    const SparsePoly r = X1 * Rational(2) - X0 - X2;
    SparsePoly lhs = X0 * X1 * X2;
    SparsePoly rhs = X0 * X2 * (X0 + X2) * Rational(1, 2) + r * X0 * X2 * Rational(1, 2);
    return vanishes(rf(lhs - rhs));
}

bool check_sigma_d3() {
    const SparsePoly X0 = SparsePoly::var("x0"), X1 = SparsePoly::var("x1"),
                     X2 = SparsePoly::var("x2"), X3 = SparsePoly::var("x3");
    auto core = [](const SparsePoly& u, const SparsePoly& v) {
        return u * u * Rational(2, 9) + u * v * Rational(5, 9) + v * v * Rational(2, 9);
    };
    SparsePoly lhs31 = X0 * X1 * (X0 * Rational(2) + X1) * Rational(1, 3) *
                       ((X0 + X1 * Rational(2)) * Rational(1, 3));
    if (!vanishes(rf(lhs31 - X0 * X1 * core(X0, X1)))) return false;

    const SparsePoly q1 = (X1 - X0) * Rational(1, 2) + X1 - X2;
    SparsePoly lhs21 = X0 * X1 * X2 * (X0 + X1) * Rational(1, 2);
    SparsePoly rhs21 =
        X0 * X2 *
        (core(X0, X2) + q1 * (X0 * Rational(4, 9) + X1 * Rational(1, 3) + X2 * Rational(2, 9)));
    if (!vanishes(rf(lhs21 - rhs21))) return false;

    const SparsePoly q2 = X1 - X0 + (X1 - X2) * Rational(1, 2);
    SparsePoly lhs12 = X0 * X1 * X2 * (X1 + X2) * Rational(1, 2);
    SparsePoly rhs12 =
        X0 * X2 *
        (core(X0, X2) + q2 * (X0 * Rational(2, 9) + X1 * Rational(1, 3) + X2 * Rational(4, 9)));
    if (!vanishes(rf(lhs12 - rhs12))) return false;

    const SparsePoly q3 = X1 * Rational(2) - X0 - X2;
    const SparsePoly q4 = X2 * Rational(2) - X1 - X3;
    SparsePoly lhs111 = X0 * X1 * X2 * X3;
    SparsePoly rhs111 =
        X0 * X3 *
        (core(X0, X3) + q3 * (X0 * Rational(2, 9) + X1 * Rational(1, 3) + X3 * Rational(4, 9)) +
         q4 * (X0 * Rational(4, 9) + X2 * Rational(1, 3) + X3 * Rational(2, 9)) +
         q3 * q4 * Rational(1, 3));
    return vanishes(rf(lhs111 - rhs111));
}

}  // namespace

std::vector<IdentityReport> identity_suite() {
    std::vector<IdentityReport> out;
    out.push_back({"rel1 kernel recombination", check_rel1()});
    out.push_back({"rel2 conic factorization", check_rel2()});
    out.push_back({"dec1 pair expansion", check_dec1()});
    out.push_back({"dec2 two-step chain", check_dec2()});
    out.push_back({"dec3 chain (2,1)", check_dec3()});
    out.push_back({"dec4 chain (1,2)", check_dec4()});
    out.push_back({"dec5 four-point chain", check_dec5()});
    out.push_back({"reduction degree shift", check_reduction()});
    out.push_back({"partition decomposition d=2", check_sigma_d2()});
    out.push_back({"partition decomposition d=3", check_sigma_d3()});
    return out;
}

}  // namespace vscgw
