#include "vscgw/ratfun.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "vscgw/errors.hpp"

namespace vscgw {

namespace {

Rational rat_pow(const Rational& r, unsigned e) {
    Rational out(1);
    for (unsigned i = 0; i < e; ++i) out *= r;
    return out;
}

SparsePoly one_poly() { return SparsePoly{Rational(1)}; }

}  // namespace

void Fraction::push_den(const SparsePoly& f, unsigned e) {
    if (e == 0) return;
    if (f.is_zero()) throw DivisionByZeroPolynomial("denominator factor is identically zero");
    if (f.is_constant()) {
        num.scale(rat_pow(f.constant_value().inverse(), e));
        return;
    }
    Rational c = f.integer_content();
    if (f.leading_coeff().sign() < 0) c = -c;
    SparsePoly base = *f.divided_by(SparsePoly{c});
    num.scale(rat_pow(c.inverse(), e));
    for (auto& d : den)
        if (d.base == base) {
            d.exp += e;
            return;
        }
    den.push_back({std::move(base), e});
}

void Fraction::mul(const Fraction& o) {
    if (&o == this) {
        Fraction t = o;
        mul(t);
        return;
    }
    num *= o.num;
    for (const auto& f : o.den) push_den(f.base, f.exp);
}

void Fraction::div(const Fraction& o) {
    if (o.num.is_zero()) throw DivisionByZeroPolynomial("division by zero rational function");
    Fraction t = o;
    t.invert();
    mul(t);
}

void Fraction::invert() {
    if (num.is_zero()) throw DivisionByZeroPolynomial("inverting zero rational function");
    SparsePoly n = one_poly();
    for (const auto& f : den) n *= f.base.pow(f.exp);
    SparsePoly old = std::move(num);
    num = std::move(n);
    den.clear();
    push_den(old);
}

void Fraction::add(const Fraction& o) {
    Fraction rhs = o;  // copy also guards self-aliasing
    auto exp_of = [](const std::vector<FactorPow>& d, const SparsePoly& base) -> unsigned {
        for (const auto& f : d)
            if (f.base == base) return f.exp;
        return 0;
    };
    std::vector<FactorPow> u = den;
    for (const auto& f : rhs.den) {
        bool found = false;
        for (auto& g : u)
            if (g.base == f.base) {
                g.exp = std::max(g.exp, f.exp);
                found = true;
                break;
            }
        if (!found) u.push_back(f);
    }
    SparsePoly n1 = std::move(num), n2 = std::move(rhs.num);
    for (const auto& f : u) {
        unsigned e1 = exp_of(den, f.base), e2 = exp_of(rhs.den, f.base);
        if (f.exp > e1) n1 *= f.base.pow(f.exp - e1);
        if (f.exp > e2) n2 *= f.base.pow(f.exp - e2);
    }
    num = n1 + n2;
    den = std::move(u);
}

void Fraction::power(unsigned e) {
    if (e == 0) {
        if (num.is_zero()) throw DivisionByZeroPolynomial("0^0 of a zero rational function");
        num = one_poly();
        den.clear();
        return;
    }
    num = num.pow(e);
    for (auto& f : den) f.exp *= e;
}

SparsePoly Fraction::den_expanded() const {
    SparsePoly d = one_poly();
    for (const auto& f : den) d *= f.base.pow(f.exp);
    return d;
}

std::vector<std::string> Fraction::variables() const {
    auto active = [](const SparsePoly& p) {
        std::vector<std::string> v;
        for (const auto& name : p.vars())
            if (p.degree_in(p.var_index(name)) > 0) v.push_back(name);
        return v;
    };
    std::vector<std::string> u = active(num);
    for (const auto& f : den) u = SparsePoly::var_union(u, active(f.base));
    return u;
}

bool Fraction::is_homogeneous() const {
    if (!num.is_homogeneous()) return false;
    return std::all_of(den.begin(), den.end(),
                       [](const FactorPow& f) { return f.base.is_homogeneous(); });
}

long Fraction::degree() const {
    long d = num.total_degree();
    for (const auto& f : den) d -= static_cast<long>(f.exp) * f.base.total_degree();
    return d;
}

void Fraction::light_reduce() {
    if (num.is_zero()) {
        den.clear();
        return;
    }
    for (auto& f : den)
        while (f.exp > 0) {
            auto q = num.divided_by(f.base);
            if (!q) break;
            num = std::move(*q);
            --f.exp;
        }
    std::erase_if(den, [](const FactorPow& f) { return f.exp == 0; });
}

RatFunExpr::RatFunExpr(SparsePoly p) {
    auto n = std::make_shared<Node>();
    n->poly = std::move(p);
    n_ = std::move(n);
}

RatFunExpr RatFunExpr::var(const std::string& name) { return RatFunExpr(SparsePoly::var(name)); }

RatFunExpr RatFunExpr::make(Kind k, std::vector<RatFunExpr> kids, int exp) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->kids = std::move(kids);
    n->exp = exp;
    return RatFunExpr(std::move(n));
}

RatFunExpr RatFunExpr::operator-() const {
    return make(Kind::product, {RatFunExpr(Rational(-1)), *this});
}

RatFunExpr RatFunExpr::pow(int e) const { return make(Kind::power, {*this}, e); }

RatFunExpr operator+(const RatFunExpr& a, const RatFunExpr& b) {
    return RatFunExpr::make(RatFunExpr::Kind::sum, {a, b});
}
RatFunExpr operator-(const RatFunExpr& a, const RatFunExpr& b) {
    return RatFunExpr::make(RatFunExpr::Kind::sum, {a, -b});
}
RatFunExpr operator*(const RatFunExpr& a, const RatFunExpr& b) {
    return RatFunExpr::make(RatFunExpr::Kind::product, {a, b});
}
RatFunExpr operator/(const RatFunExpr& a, const RatFunExpr& b) {
    return RatFunExpr::make(RatFunExpr::Kind::quotient, {a, b});
}

Fraction RatFunExpr::fraction() const {
    switch (n_->kind) {
        case Kind::leaf:
            return Fraction(n_->poly);
        case Kind::sum: {
            Fraction f = n_->kids[0].fraction();
            for (std::size_t i = 1; i < n_->kids.size(); ++i) f.add(n_->kids[i].fraction());
            return f;
        }
        case Kind::product: {
            Fraction f = n_->kids[0].fraction();
            for (std::size_t i = 1; i < n_->kids.size(); ++i) f.mul(n_->kids[i].fraction());
            return f;
        }
        case Kind::quotient: {
            Fraction f = n_->kids[0].fraction();
            f.div(n_->kids[1].fraction());
            return f;
        }
        case Kind::power: {
            Fraction f = n_->kids[0].fraction();
            if (n_->exp >= 0) {
                f.power(static_cast<unsigned>(n_->exp));
            } else {
                f.power(static_cast<unsigned>(-n_->exp));
                f.invert();
            }
            return f;
        }
    }
    return Fraction{};
}

std::vector<std::string> RatFunExpr::variables() const {
    if (n_->kind == Kind::leaf) return n_->poly.vars();
    std::vector<std::string> u;
    for (const auto& k : n_->kids) u = SparsePoly::var_union(u, k.variables());
    return u;
}

namespace {
std::atomic<std::size_t> gcd_threshold_default{500};
}  // namespace

std::size_t default_gcd_threshold() { return gcd_threshold_default.load(); }
void set_default_gcd_threshold(std::size_t value) { gcd_threshold_default.store(value); }

std::pair<SparsePoly, SparsePoly> reduce_pair(SparsePoly p, SparsePoly q,
                                              std::size_t gcd_threshold) {
    if (q.is_zero()) throw DivisionByZeroPolynomial("denominator is identically zero");
    if (p.is_zero()) return {SparsePoly{}, one_poly()};
    auto u = SparsePoly::var_union(p.vars(), q.vars());
    p = p.aligned_to(u);
    q = q.aligned_to(u);

    auto mp = p.monomial_content(), mq = q.monomial_content();
    SparsePoly::Mono common(u.size(), 0);
    bool any = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        common[i] = std::min(mp[i], mq[i]);
        any = any || common[i] > 0;
    }
    if (any) {
        p = p.divided_by_monomial(common);
        q = q.divided_by_monomial(common);
    }

    auto strip_content = [&] {
        Rational cp = p.integer_content(), cq = q.integer_content();
        Rational r = cp / cq;
        p = *p.divided_by(SparsePoly{cp});
        q = *q.divided_by(SparsePoly{cq});
        p.scale(Rational(r.num()));
        q.scale(Rational(r.den()));
    };
    strip_content();

    if (q.is_constant()) {
        p.scale(q.constant_value().inverse());
        q = one_poly();
        strip_content();
    } else if (auto s = p.divided_by(q)) {
        p = std::move(*s);
        q = one_poly();
        strip_content();
    } else if (!p.is_constant()) {
        if (auto t = q.divided_by(p)) {
            q = std::move(*t);
            p = one_poly();
            strip_content();
        }
    }

    if (!q.is_constant() && p.term_count() + q.term_count() > gcd_threshold) {
        SparsePoly g = poly_gcd(p, q);
        if (g.total_degree() > 0) {
            p = *p.divided_by(g);
            q = *q.divided_by(g);
            strip_content();
        }
    }

    if (q.leading_coeff().sign() < 0) {
        p = -p;
        q = -q;
    }
    return {std::move(p), std::move(q)};
}

std::pair<SparsePoly, SparsePoly> normalize(const RatFunExpr& expr, std::size_t gcd_threshold) {
    Fraction f = expr.fraction();
    return reduce_pair(std::move(f.num), f.den_expanded(), gcd_threshold);
}

namespace {

SparsePoly make_primitive(SparsePoly p) {
    if (p.is_zero()) return p;
    p = *p.divided_by(SparsePoly{p.integer_content()});
    if (p.leading_coeff().sign() < 0) p = -p;
    return p;
}

SparsePoly gcd_list(const std::vector<SparsePoly>& polys) {
    SparsePoly g;
    for (const auto& c : polys) {
        g = poly_gcd(g, c);
        if (!g.is_zero() && g.is_constant()) return g;
    }
    return g;
}

// pseudo-remainder of A by B in variable v; all inputs share one var list
SparsePoly prem(SparsePoly A, const SparsePoly& B, int v) {
    unsigned db = B.degree_in(v);
    SparsePoly lb = B.coefficients_in(v)[db];
    while (!A.is_zero() && A.degree_in(v) >= db) {
        unsigned da = A.degree_in(v);
        SparsePoly la = A.coefficients_in(v)[da];
        SparsePoly::Mono shift(A.vars().size(), 0);
        shift[v] = da - db;
        A = lb * A - (la * B).times_monomial(shift);
    }
    return A;
}

SparsePoly primitive_wrt(const SparsePoly& p, int v) {
    if (p.is_zero()) return p;
    SparsePoly c = gcd_list(p.coefficients_in(v));
    return make_primitive(*p.divided_by(c));
}

}  // namespace

SparsePoly poly_gcd(const SparsePoly& a0, const SparsePoly& b0) {
    SparsePoly a = make_primitive(a0), b = make_primitive(b0);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) return one_poly();
    auto u = SparsePoly::var_union(a.vars(), b.vars());
    a = a.aligned_to(u);
    b = b.aligned_to(u);
    int v = -1;
    for (int i = static_cast<int>(u.size()) - 1; i >= 0; --i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
            v = i;
            break;
        }
    SparsePoly cont_a = gcd_list(a.coefficients_in(v));
    SparsePoly cont_b = gcd_list(b.coefficients_in(v));
    SparsePoly g_cont = poly_gcd(cont_a, cont_b);
    SparsePoly pa = *a.divided_by(cont_a);
    SparsePoly pb = *b.divided_by(cont_b);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    SparsePoly g_v;
    while (true) {
        if (pb.is_zero()) {
            g_v = std::move(pa);
            break;
        }
        if (pb.degree_in(v) == 0) {
            g_v = one_poly();
            break;
        }
        SparsePoly r = prem(pa, pb, v);
        pa = std::move(pb);
        pb = primitive_wrt(r, v);
    }
    return make_primitive(g_cont * g_v);
}

}  // namespace vscgw
