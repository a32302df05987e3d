#pragma once

#include <string>
#include <vector>

#include "vscgw/poly.hpp"

namespace vscgw {

using OrderedPartition = std::vector<unsigned>;

// all 2^{d-1} compositions of d, ascending lexicographic
std::vector<OrderedPartition> ordered_partitions(unsigned d);

// e(k,d;u,v) = prod_{m=0}^{kd} (m u + (kd-m) v)/d, homogeneous of degree kd+1
SparsePoly e_poly(unsigned k, unsigned d, const SparsePoly& u, const SparsePoly& v);
SparsePoly e_poly(unsigned k, unsigned d);  // in variables (u, v)

// t(N,d;u,v) = prod_{m=1}^{d-1} ((m u + (d-m) v)/d)^N; 1 when d = 1
SparsePoly t_poly(unsigned N, unsigned d, const SparsePoly& u, const SparsePoly& v);
SparsePoly t_poly(unsigned N, unsigned d);  // in variables (u, v)

// w_a(u,v) = sum_{p+q=a-1} u^p v^q  (0 when a = 0)
SparsePoly w_kernel(unsigned a, const SparsePoly& u, const SparsePoly& v);
// w_a(u,v,w) = sum_{p+q+r=a-2} u^p v^q w^r  (0 when a <= 1)
SparsePoly w_kernel(unsigned a, const SparsePoly& u, const SparsePoly& v, const SparsePoly& w);
SparsePoly w_kernel(unsigned a, const std::string& u, const std::string& v);
SparsePoly w_kernel(unsigned a, const std::string& u, const std::string& v,
                    const std::string& w);
Rational w_value(unsigned a, const Rational& u, const Rational& v);
Rational w_value(unsigned a, const Rational& u, const Rational& v, const Rational& w);

// torus characters lambda_1..lambda_N; the standard assignment takes
// consecutive primes starting at the seed-th prime, nudged by
// attempt/(100+j) when a formula denominator degenerates
struct CharacterAssignment {
    std::vector<Rational> values;
    static CharacterAssignment standard(unsigned N, unsigned seed = 1, unsigned attempt = 0);
    const Rational& at(unsigned i) const;  // 1-based
    unsigned size() const { return static_cast<unsigned>(values.size()); }
};

// E(k,d;i,j) = prod_{m=0}^{kd} (m lambda_i + (kd-m) lambda_j)/d
Rational equivariant_E(unsigned k, unsigned d, unsigned i, unsigned j,
                       const CharacterAssignment& lambda);
// V(N;i) = prod_{j != i} (lambda_i - lambda_j)
Rational equivariant_V(unsigned N, unsigned i, const CharacterAssignment& lambda);
// T(N,d;i,j) = prod_{c=1}^{N} prod_{m=1}^{d-1} ((m lambda_i + (d-m) lambda_j)/d - lambda_c)
Rational equivariant_T(unsigned N, unsigned d, unsigned i, unsigned j,
                       const CharacterAssignment& lambda);

unsigned nth_prime(unsigned n);  // 1-based: nth_prime(1) = 2

}  // namespace vscgw
