#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vscgw/poly.hpp"

namespace vscgw {

// A denominator factor raised to a positive power; bases are kept primitive
// (integer coefficients, content 1) with positive leading coefficient.
struct FactorPow {
    SparsePoly base;
    unsigned exp = 1;
};

// num / prod(den[i].base ^ den[i].exp) with the denominator kept factored.
// Keeping factors separate is what makes iterated residues cheap: pole orders
// and series divisors are read off per factor instead of from an expanded
// product.
struct Fraction {
    SparsePoly num;
    std::vector<FactorPow> den;

    Fraction() = default;
    explicit Fraction(SparsePoly p) : num(std::move(p)) {}

    // Divide by f^e.  Constant factors fold into num; signs and integer
    // content are stripped off the base; equal bases merge.
    void push_den(const SparsePoly& f, unsigned e = 1);

    void mul(const Fraction& o);
    void div(const Fraction& o);
    void add(const Fraction& o);
    void power(unsigned e);
    void invert();

    SparsePoly den_expanded() const;
    // variables occurring with positive degree in num or a den factor
    std::vector<std::string> variables() const;
    bool is_homogeneous() const;
    // total degree num - den; meaningful only when homogeneous
    long degree() const;

    // Cheap cleanup: cancel den factors dividing num exactly, drop exhausted
    // factors.  Never changes the value.
    void light_reduce();
};

class RatFunExpr {
  public:
    RatFunExpr() : RatFunExpr(SparsePoly{}) {}
    RatFunExpr(SparsePoly p);
    RatFunExpr(const Rational& c) : RatFunExpr(SparsePoly{c}) {}
    RatFunExpr(int c) : RatFunExpr(SparsePoly{Rational(c)}) {}
    static RatFunExpr var(const std::string& name);

    RatFunExpr operator-() const;
    RatFunExpr pow(int e) const;

    friend RatFunExpr operator+(const RatFunExpr& a, const RatFunExpr& b);
    friend RatFunExpr operator-(const RatFunExpr& a, const RatFunExpr& b);
    friend RatFunExpr operator*(const RatFunExpr& a, const RatFunExpr& b);
    friend RatFunExpr operator/(const RatFunExpr& a, const RatFunExpr& b);

    // Factored normal form; throws DivisionByZeroPolynomial on a zero
    // denominator anywhere in the tree.
    Fraction fraction() const;
    std::vector<std::string> variables() const;

  private:
    enum class Kind { leaf, sum, product, quotient, power };
    struct Node {
        Kind kind = Kind::leaf;
        SparsePoly poly;
        std::vector<RatFunExpr> kids;
        int exp = 0;
    };
    explicit RatFunExpr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    static RatFunExpr make(Kind k, std::vector<RatFunExpr> kids, int exp = 0);
    std::shared_ptr<const Node> n_;
};

// Process-wide default for the gcd escape hatch below (initially 500).
std::size_t default_gcd_threshold();
void set_default_gcd_threshold(std::size_t value);

// (p, q) with expr == p/q, common integer content removed, q with positive
// leading coefficient in graded-lex order.  Exact single-polynomial
// cancellation is always attempted; a full multivariate gcd runs only when
// the combined term count exceeds gcd_threshold.
std::pair<SparsePoly, SparsePoly> normalize(const RatFunExpr& expr,
                                            std::size_t gcd_threshold = default_gcd_threshold());
std::pair<SparsePoly, SparsePoly> reduce_pair(SparsePoly p, SparsePoly q,
                                              std::size_t gcd_threshold = default_gcd_threshold());

// Primitive-PRS multivariate gcd over Q (result primitive with positive
// leading coefficient; gcd(0,0) = 0).
SparsePoly poly_gcd(const SparsePoly& a, const SparsePoly& b);

}  // namespace vscgw
