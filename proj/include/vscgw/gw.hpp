#pragma once

#include "vscgw/blocks.hpp"
#include "vscgw/rational.hpp"

namespace vscgw {

// Two-point request <O_{h^a} O_{h^b}>_{0,d} on a degree-k hypersurface in
// CP^{N-1}.  The invariant can be nonzero only on the virtual dimension
// a + b = N - 3 + (N - k) d, i.e. a = N-2-n, b = n-1+(N-k)d for some n.
struct GwRequest {
    unsigned N = 0;
    unsigned k = 1;
    unsigned d = 1;
    long a = 0;
    long b = 0;

    bool dimension_match() const;
};

enum class GwPipeline { residue, equivariant };

struct GwValue {
    Rational value;
    GwPipeline pipeline = GwPipeline::residue;
    GwRequest request;
};

// Non-equivariant evaluation: two to four nested residues at the origin,
// innermost variable first.  Requests off the virtual dimension, or with an
// insertion outside 0..N-2, give exactly 0.
Rational gw_residue(const GwRequest& req);

// Fixed-point sums over index tuples with explicit torus characters.  Throws
// DegenerateCharacters as soon as a summand denominator vanishes; callers
// retry with a perturbed assignment.  Needs lambda.size() == N >= d+1.
Rational gw_equivariant(const GwRequest& req, const CharacterAssignment& lambda);

// True if some denominator of the degree-d fixed-point sums vanishes for
// this assignment (coincident or zero characters, midpoint resonances, or a
// vanishing compound factor such as 2*l_j - l_i - l_l).
bool degenerate_characters(const CharacterAssignment& lambda, unsigned d);

// Standard prime-based assignment from the given seed, nudged deterministically
// until it passes degenerate_characters.
CharacterAssignment generic_characters(unsigned N, unsigned d, unsigned seed = 1);

// Equivariant pipeline with the default assignment-and-retry policy.
Rational gw_equivariant_seeded(const GwRequest& req, unsigned seed = 1);

// <O_{h^a} O_{h^b} O_h>_{0,d} = d * <O_{h^a} O_{h^b}>_{0,d} (divisor equation).
Rational gw_three_point(const GwRequest& req);

}  // namespace vscgw
