#include "vscgw/blocks.hpp"

#include <stdexcept>

#include "vscgw/errors.hpp"

namespace vscgw {

std::vector<OrderedPartition> ordered_partitions(unsigned d) {
    if (d == 0) throw RangeError("ordered_partitions: d must be positive");
    std::vector<OrderedPartition> out;
    OrderedPartition cur;
    auto rec = [&](auto&& self, unsigned remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (unsigned first = 1; first <= remaining; ++first) {
            cur.push_back(first);
            self(self, remaining - first);
            cur.pop_back();
        }
    };
    rec(rec, d);
    return out;
}

SparsePoly e_poly(unsigned k, unsigned d, const SparsePoly& u, const SparsePoly& v) {
    SparsePoly p{Rational(1)};
    const unsigned kd = k * d;
    for (unsigned m = 0; m <= kd; ++m)
        p *= u * Rational(m, d) + v * Rational(kd - m, d);
    return p;
}

SparsePoly e_poly(unsigned k, unsigned d) {
    return e_poly(k, d, SparsePoly::var("u"), SparsePoly::var("v"));
}

SparsePoly t_poly(unsigned N, unsigned d, const SparsePoly& u, const SparsePoly& v) {
    SparsePoly p{Rational(1)};
    for (unsigned m = 1; m < d; ++m)
        p *= (u * Rational(m, d) + v * Rational(d - m, d)).pow(N);
    return p;
}

SparsePoly t_poly(unsigned N, unsigned d) {
    return t_poly(N, d, SparsePoly::var("u"), SparsePoly::var("v"));
}

SparsePoly w_kernel(unsigned a, const SparsePoly& u, const SparsePoly& v) {
    SparsePoly sum;
    if (a == 0) return sum;
    std::vector<SparsePoly> up(a), vp(a);
    up[0] = vp[0] = SparsePoly{Rational(1)};
    for (unsigned i = 1; i < a; ++i) {
        up[i] = up[i - 1] * u;
        vp[i] = vp[i - 1] * v;
    }
    for (unsigned p = 0; p < a; ++p) sum += up[p] * vp[a - 1 - p];
    return sum;
}

SparsePoly w_kernel(unsigned a, const SparsePoly& u, const SparsePoly& v, const SparsePoly& w) {
    SparsePoly sum;
    if (a <= 1) return sum;
    const unsigned deg = a - 2;
    std::vector<SparsePoly> up(deg + 1), vp(deg + 1), wp(deg + 1);
    up[0] = vp[0] = wp[0] = SparsePoly{Rational(1)};
    for (unsigned i = 1; i <= deg; ++i) {
        up[i] = up[i - 1] * u;
        vp[i] = vp[i - 1] * v;
        wp[i] = wp[i - 1] * w;
    }
    for (unsigned p = 0; p <= deg; ++p)
        for (unsigned q = 0; p + q <= deg; ++q) sum += up[p] * vp[q] * wp[deg - p - q];
    return sum;
}

SparsePoly w_kernel(unsigned a, const std::string& u, const std::string& v) {
    return w_kernel(a, SparsePoly::var(u), SparsePoly::var(v));
}

SparsePoly w_kernel(unsigned a, const std::string& u, const std::string& v,
                    const std::string& w) {
    return w_kernel(a, SparsePoly::var(u), SparsePoly::var(v), SparsePoly::var(w));
}

Rational w_value(unsigned a, const Rational& u, const Rational& v) {
    Rational sum(0);
    if (a == 0) return sum;
    Rational up(1);
    std::vector<Rational> vp(a, Rational(1));
    for (unsigned i = 1; i < a; ++i) vp[i] = vp[i - 1] * v;
    for (unsigned p = 0; p < a; ++p) {
        sum += up * vp[a - 1 - p];
        up *= u;
    }
    return sum;
}

Rational w_value(unsigned a, const Rational& u, const Rational& v, const Rational& w) {
    Rational sum(0);
    if (a <= 1) return sum;
    const unsigned deg = a - 2;
    std::vector<Rational> up(deg + 1, Rational(1)), vp(deg + 1, Rational(1)),
        wp(deg + 1, Rational(1));
    for (unsigned i = 1; i <= deg; ++i) {
        up[i] = up[i - 1] * u;
        vp[i] = vp[i - 1] * v;
        wp[i] = wp[i - 1] * w;
    }
    for (unsigned p = 0; p <= deg; ++p)
        for (unsigned q = 0; p + q <= deg; ++q) sum += up[p] * vp[q] * wp[deg - p - q];
    return sum;
}

unsigned nth_prime(unsigned n) {
    if (n == 0) throw RangeError("nth_prime: index is 1-based");
    static const std::vector<unsigned> primes = [] {
        std::vector<unsigned> ps;
        for (unsigned c = 2; ps.size() < 64; ++c) {
            bool prime = true;
            for (unsigned p : ps) {
                if (p * p > c) break;
                if (c % p == 0) {
                    prime = false;
                    break;
                }
            }
            if (prime) ps.push_back(c);
        }
        return ps;
    }();
    if (n > primes.size()) throw RangeError("nth_prime: index too large");
    return primes[n - 1];
}

CharacterAssignment CharacterAssignment::standard(unsigned N, unsigned seed, unsigned attempt) {
    if (seed == 0) throw RangeError("CharacterAssignment: seed is 1-based");
    CharacterAssignment a;
    a.values.reserve(N);
    for (unsigned j = 1; j <= N; ++j) {
        Rational v(static_cast<long>(nth_prime(seed - 1 + j)));
        if (attempt > 0) v += Rational(attempt, 100 + j);
        a.values.push_back(v);
    }
    return a;
}

const Rational& CharacterAssignment::at(unsigned i) const {
    if (i == 0 || i > values.size()) throw RangeError("CharacterAssignment: index out of range");
    return values[i - 1];
}

Rational equivariant_E(unsigned k, unsigned d, unsigned i, unsigned j,
                       const CharacterAssignment& lambda) {
    const Rational &li = lambda.at(i), &lj = lambda.at(j);
    Rational prod(1);
    const unsigned kd = k * d;
    for (unsigned m = 0; m <= kd; ++m) {
        Rational f = (li * Rational(m) + lj * Rational(kd - m)) / Rational(d);
        if (f.is_zero()) throw DegenerateCharacters("E factor vanishes");
        prod *= f;
    }
    return prod;
}

Rational equivariant_V(unsigned N, unsigned i, const CharacterAssignment& lambda) {
    const Rational& li = lambda.at(i);
    Rational prod(1);
    for (unsigned j = 1; j <= N; ++j) {
        if (j == i) continue;
        Rational f = li - lambda.at(j);
        if (f.is_zero()) throw DegenerateCharacters("coincident characters");
        prod *= f;
    }
    return prod;
}

Rational equivariant_T(unsigned N, unsigned d, unsigned i, unsigned j,
                       const CharacterAssignment& lambda) {
    const Rational &li = lambda.at(i), &lj = lambda.at(j);
    Rational prod(1);
    for (unsigned c = 1; c <= N; ++c)
        for (unsigned m = 1; m < d; ++m) {
            Rational f = (li * Rational(m) + lj * Rational(d - m)) / Rational(d) - lambda.at(c);
            if (f.is_zero()) throw DegenerateCharacters("T factor vanishes");
            prod *= f;
        }
    return prod;
}

}  // namespace vscgw
