#include "vscgw/residue.hpp"

#include <algorithm>

#include "vscgw/errors.hpp"

namespace vscgw {

namespace {

SparsePoly drop_var(const SparsePoly& p, const std::string& var) {
    if (p.var_index(var) < 0) return p;
    std::vector<std::string> keep;
    for (const auto& v : p.vars())
        if (v != var) keep.push_back(v);
    return p.aligned_to(keep);
}

// In-place truncated division of the series c[0..M-1] by g = sum gs[s] var^s
// with gs[0] != 0.  Division by a non-constant gs[0] is cleared through the
// recurrence U_t = c_t g0^t - sum_{s>=1} gs[s] U_{t-s} g0^{s-1}, leaving every
// entry over the common denominator g0^M (reported to the caller so it can be
// pushed as a denominator factor).  Returns true when that factor is needed.
bool series_divide(std::vector<SparsePoly>& c, const std::vector<SparsePoly>& gs) {
    const std::size_t M = c.size();
    const SparsePoly& g0 = gs[0];
    const std::size_t delta = gs.size() - 1;
    if (g0.is_constant()) {
        Rational inv = g0.constant_value().inverse();
        for (std::size_t t = 0; t < M; ++t) {
            SparsePoly acc = std::move(c[t]);
            for (std::size_t s = 1; s <= std::min(t, delta); ++s) {
                if (gs[s].is_zero()) continue;
                acc -= gs[s] * c[t - s];
            }
            acc.scale(inv);
            c[t] = std::move(acc);
        }
        return false;
    }
    std::vector<SparsePoly> p(M);
    p[0] = SparsePoly{Rational(1)};
    for (std::size_t i = 1; i < M; ++i) p[i] = p[i - 1] * g0;
    std::vector<SparsePoly> U(M);
    for (std::size_t t = 0; t < M; ++t) {
        SparsePoly acc = c[t] * p[t];
        for (std::size_t s = 1; s <= std::min(t, delta); ++s) {
            if (gs[s].is_zero()) continue;
            acc -= gs[s] * U[t - s] * p[s - 1];
        }
        U[t] = std::move(acc);
    }
    for (std::size_t t = 0; t < M; ++t) c[t] = U[t] * p[M - 1 - t];
    return true;
}

}  // namespace

Fraction residue_step(const Fraction& f, const std::string& var) {
    Fraction zero;
    if (f.num.is_zero()) return zero;

    std::vector<FactorPow> rest;                          // factors free of var
    std::vector<std::pair<SparsePoly, unsigned>> active;  // series divisors
    unsigned m = 0;
    Rational scale(1);
    for (const auto& fac : f.den) {
        int vi = fac.base.var_index(var);
        if (vi < 0 || fac.base.degree_in(vi) == 0) {
            rest.push_back({drop_var(fac.base, var), fac.exp});
            continue;
        }
        unsigned s = fac.base.valuation_in(vi);
        SparsePoly g = fac.base;
        if (s > 0) {
            SparsePoly::Mono mono(g.vars().size(), 0);
            mono[vi] = s;
            g = g.divided_by_monomial(mono);
            m += s * fac.exp;
        }
        if (g.is_constant()) {
            for (unsigned r = 0; r < fac.exp; ++r) scale *= g.constant_value().inverse();
        } else if (g.degree_in(vi) > 0) {
            active.push_back({std::move(g), fac.exp});
        } else {
            rest.push_back({drop_var(g, var), fac.exp});
        }
    }

    int nvi = f.num.var_index(var);
    unsigned t = (nvi >= 0 && f.num.degree_in(nvi) > 0) ? f.num.valuation_in(nvi) : 0;
    if (t >= m) return zero;
    const unsigned M = m - t;

    std::vector<SparsePoly> c(M);
    if (nvi < 0) {
        c[0] = f.num;
    } else {
        auto cs = f.num.coefficients_in(nvi);
        for (unsigned k = 0; k < M && t + k < cs.size(); ++k) c[k] = std::move(cs[t + k]);
    }

    Fraction out;
    out.den = std::move(rest);
    std::vector<std::pair<SparsePoly, unsigned>> pushed;  // (g0, exponent)
    for (const auto& [g, e] : active) {
        auto gs = g.coefficients_in(g.var_index(var));
        for (auto& gg : gs) gg = drop_var(gg, var);
        for (auto& cc : c)
            if (!cc.is_zero() && cc.var_index(var) >= 0) cc = drop_var(cc, var);
        unsigned denominator_reps = 0;
        for (unsigned r = 0; r < e; ++r)
            if (series_divide(c, gs)) ++denominator_reps;
        if (denominator_reps > 0) pushed.push_back({gs[0], denominator_reps * M});
    }

    out.num = drop_var(c[M - 1], var);
    out.num.scale(scale);
    for (const auto& [g0, e] : pushed) out.push_den(g0, e);
    out.light_reduce();
    return out;
}

std::pair<SparsePoly, SparsePoly> residue_at_zero(const SparsePoly& num, const SparsePoly& den,
                                                  const std::string& var) {
    if (den.is_zero()) throw DivisionByZeroPolynomial("residue denominator is identically zero");
    int vi = den.var_index(var);
    if (vi >= 0 && den.degree_in(vi) > 0) {
        unsigned s = den.valuation_in(vi);
        SparsePoly::Mono mono(den.vars().size(), 0);
        mono[vi] = s;
        SparsePoly h = den.divided_by_monomial(mono);
        if (h.coefficients_in(vi)[0].is_zero())
            throw NonIsolatedPole("denominator does not factor as " + var + "^m * h with h(0) != 0");
    }
    Fraction f{num};
    f.push_den(den);
    Fraction r = residue_step(f, var);
    return reduce_pair(std::move(r.num), r.den_expanded());
}

Rational iterated_residue(Fraction f, const std::vector<std::string>& order) {
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (order[i] == order[j]) throw OrderMismatch("variable repeated in order: " + order[i]);
    for (const auto& v : f.variables())
        if (std::find(order.begin(), order.end(), v) == order.end())
            throw OrderMismatch("expression variable missing from order: " + v);
    for (const auto& v : order) {
        if (f.num.is_zero()) return Rational(0);
        if (f.is_homogeneous() &&
            f.degree() != -static_cast<long>(f.variables().size()))
            return Rational(0);
        f = residue_step(f, v);
    }
    if (f.num.is_zero()) return Rational(0);
    return f.num.constant_value() / f.den_expanded().constant_value();
}

Rational iterated_residue(const RatFunExpr& expr, const std::vector<std::string>& order) {
    return iterated_residue(expr.fraction(), order);
}

}  // namespace vscgw
