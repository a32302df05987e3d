#pragma once

#include <string>
#include <vector>

#include "vscgw/vsc.hpp"

namespace vscgw {

// One verified instance of the degree-d transform at (N, k, d, n).
struct TransformReport {
    VscKey key;
    Rational lhs;  // (1/k) <O_{h^{N-2-n}} O_{h^{n-1+(N-k)d}}>_{0,d}
    Rational rhs;  // transformed combination of virtual structure constants
    bool equal = false;
};

// Piecewise weights A_j: j+1 on [0, k-N], 1+2(k-N)-j on [k-N, 2(k-N)];
// the branches agree at the overlap point j = k-N.
long a_coeff(long j, unsigned k, unsigned N);

// Degree-1 convolution correction C_{1,1}(n) entering the d=3 transform.
// Empty (0) for k <= N.  Out-of-window constants count as 0.
Rational c11(unsigned N, unsigned k, long n, VscTable& table);

// Right-hand side of the degree-d transform at key = (N, k, d, n): the
// predicted (1/k) <O O>.  Sums with empty ranges and out-of-window constants
// are 0, so for N >= k+2 the value collapses to L~_n / d.  Throws RangeError
// unless both insertion exponents N-2-n and n-1+(N-k)d are nonnegative.
Rational mirror_transform(const VscKey& key, VscTable& table);

// Compares (1/k) * gw_residue with mirror_transform for every n that keeps
// both insertions effective and in-window.
std::vector<TransformReport> verify_theorem2(unsigned N, unsigned k, unsigned d);

struct IdentityReport {
    std::string name;
    bool pass = false;
};

// Exact rational-function identities behind the degree <= 3 transforms:
// kernel recombination, conic factorization, the integrand decompositions,
// and the degree-shift reduction with its partition-wise polynomial forms.
std::vector<IdentityReport> identity_suite();

}  // namespace vscgw
