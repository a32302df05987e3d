#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vscgw/rational.hpp"

namespace vscgw {

// Sparse multivariate polynomial over Rational.
//
// Each polynomial carries its own ordered variable list (declaration order =
// first appearance); exponent vectors are dense against that list.  Binary
// operations align operands onto the union of their variable lists, keeping
// the left operand's order first.  Terms are kept sorted in graded-lex
// descending order with no zero coefficients.
class SparsePoly {
public:
    using Mono = std::vector<unsigned>;
    struct Term {
        Mono mono;
        Rational coeff;
    };

    SparsePoly() = default;
    explicit SparsePoly(const Rational& c);
    SparsePoly(const Rational& c, long) = delete;

    static SparsePoly constant(const Rational& c) { return SparsePoly(c); }
    static SparsePoly var(const std::string& name, unsigned power = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term value (the whole value if is_constant()).
    Rational constant_value() const;

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

    SparsePoly& scale(const Rational& c);           // *this *= c
    SparsePoly pow(unsigned e) const;

    friend bool operator==(const SparsePoly& a, const SparsePoly& b);
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    // Exact polynomial division; nullopt when the division leaves a remainder.
    std::optional<SparsePoly> divided_by(const SparsePoly& divisor) const;

    // Positive rational c with (*this)/c having coprime integer coefficients;
    // zero polynomial reports content 1.
    Rational integer_content() const;
    // Coefficient of the graded-lex leading term (0 for the zero polynomial).
    Rational leading_coeff() const;

    // Per-variable minimum exponent over all terms (the monomial content).
    Mono monomial_content() const;
    // Divide exactly by the monomial given against this->vars().
    SparsePoly divided_by_monomial(const Mono& m) const;
    SparsePoly times_monomial(const Mono& m) const;

    int total_degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;

    // Index of a variable in vars(), or -1.
    int var_index(const std::string& name) const;
    unsigned degree_in(int var_idx) const;
    unsigned valuation_in(int var_idx) const;
    // Coefficient polynomials of var^0..var^deg: result[t] has the same
    // variable list with the chosen variable's exponent zeroed.
    std::vector<SparsePoly> coefficients_in(int var_idx) const;

    Rational eval(const std::map<std::string, Rational>& point) const;

    std::string str() const;

    // Remap onto the given variable list (must contain all vars of *this).
    SparsePoly aligned_to(const std::vector<std::string>& vars) const;
    static std::vector<std::string> var_union(const std::vector<std::string>& a,
                                              const std::vector<std::string>& b);

    // term construction helper: caller guarantees canonical form afterwards
    static SparsePoly from_terms(std::vector<std::string> vars, std::vector<Term> terms);

private:
    std::vector<std::string> vars_;
    std::vector<Term> terms_;

    void normalize_sorted();  // sorts terms, merges equal monomials, drops zeros
};

// graded-lex: higher total degree first, then lexicographic on the exponent vector
bool mono_less(const SparsePoly::Mono& a, const SparsePoly::Mono& b);

std::ostream& operator<<(std::ostream& os, const SparsePoly& p);

inline SparsePoly operator*(SparsePoly p, const Rational& c) {
    p.scale(c);
    return p;
}
inline SparsePoly operator*(const Rational& c, SparsePoly p) {
    p.scale(c);
    return p;
}

}  // namespace vscgw
