#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vscgw/ratfun.hpp"

namespace vscgw {

// Coefficient of var^{-1} in the Laurent expansion of num/den around var = 0,
// as a reduced (numerator, denominator) pair in the remaining variables.
// den is factored as var^m * h by trial division; the residue is the
// coefficient of var^{m-1} in the series num/h truncated at order m.
// Throws NonIsolatedPole if h vanishes identically at var = 0.
std::pair<SparsePoly, SparsePoly> residue_at_zero(const SparsePoly& num, const SparsePoly& den,
                                                  const std::string& var);

// One residue step on a factored fraction; the variable is eliminated from
// the result.  Only poles at the origin count: a factor with nonzero value at
// var = 0 is a series divisor, never a pole.
Fraction residue_step(const Fraction& f, const std::string& var);

// Residues applied sequentially, innermost variable first (equivalent to
// nested contour integrals of strictly increasing radius in list order).
// Throws OrderMismatch if the order repeats a variable or misses one that the
// expression depends on.
Rational iterated_residue(Fraction f, const std::vector<std::string>& order);
Rational iterated_residue(const RatFunExpr& expr, const std::vector<std::string>& order);

}  // namespace vscgw
