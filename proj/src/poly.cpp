#include "vscgw/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace vscgw {

bool mono_less(const SparsePoly::Mono& a, const SparsePoly::Mono& b) {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

namespace {

struct MonoHash {
    std::size_t operator()(const SparsePoly::Mono& m) const {
        std::size_t h = 1469598103934665603ull;
        for (unsigned e : m) {
            h ^= e;
            h *= 1099511628211ull;
        }
        return h;
    }
};

bool mono_greater(const SparsePoly::Term& a, const SparsePoly::Term& b) {
    return mono_less(b.mono, a.mono);
}

}  // namespace

SparsePoly::SparsePoly(const Rational& c) {
    if (!c.is_zero()) terms_.push_back({Mono{}, c});
}

SparsePoly SparsePoly::var(const std::string& name, unsigned power) {
    SparsePoly p;
    p.vars_ = {name};
    p.terms_.push_back({Mono{power}, Rational(1)});
    return p;
}

bool SparsePoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Mono& m = terms_[0].mono;
    return std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
}

Rational SparsePoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("SparsePoly: not a constant");
    return terms_[0].coeff;
}

void SparsePoly::normalize_sorted() {
    for (auto& t : terms_) t.mono.resize(vars_.size(), 0);
    std::sort(terms_.begin(), terms_.end(), mono_greater);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

std::vector<std::string> SparsePoly::var_union(const std::vector<std::string>& a,
                                               const std::vector<std::string>& b) {
    std::vector<std::string> u = a;
    for (const auto& v : b)
        if (std::find(u.begin(), u.end(), v) == u.end()) u.push_back(v);
    return u;
}

SparsePoly SparsePoly::aligned_to(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<int> where(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        where[i] = it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
    }
    SparsePoly out;
    out.vars_ = vars;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Mono m(vars.size(), 0);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (where[i] < 0) {
                if (t.mono[i] > 0)
                    throw std::logic_error("SparsePoly: alignment drops an active variable");
            } else {
                m[where[i]] = t.mono[i];
            }
        }
        out.terms_.push_back({std::move(m), t.coeff});
    }
    out.normalize_sorted();
    return out;
}

SparsePoly SparsePoly::from_terms(std::vector<std::string> vars, std::vector<Term> terms) {
    SparsePoly p;
    p.vars_ = std::move(vars);
    p.terms_ = std::move(terms);
    p.normalize_sorted();
    return p;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    if (vars_ != o.vars_) {
        auto u = var_union(vars_, o.vars_);
        *this = aligned_to(u);
        return *this += o.aligned_to(u);
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            Rational c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero()) merged.push_back({terms_[i].mono, std::move(c)});
            ++i, ++j;
        } else if (mono_greater(terms_[i], o.terms_[j])) {
            merged.push_back(terms_[i++]);
        } else {
            merged.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) merged.push_back(terms_[i++]);
    while (j < o.terms_.size()) merged.push_back(o.terms_[j++]);
    terms_ = std::move(merged);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) { return *this += -o; }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    if (a.vars_ != b.vars_) {
        auto u = SparsePoly::var_union(a.vars_, b.vars_);
        return a.aligned_to(u) * b.aligned_to(u);
    }
    SparsePoly out;
    out.vars_ = a.vars_;
    if (a.is_zero() || b.is_zero()) return out;
    std::unordered_map<SparsePoly::Mono, Rational, MonoHash> acc;
    acc.reserve(a.terms_.size() * 2);
    const std::size_t nv = a.vars_.size();
    SparsePoly::Mono m(nv);
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            for (std::size_t v = 0; v < nv; ++v) m[v] = ta.mono[v] + tb.mono[v];
            acc.try_emplace(m, Rational(0)).first->second += ta.coeff * tb.coeff;
        }
    }
    out.terms_.reserve(acc.size());
    for (auto& [mono, c] : acc)
        if (!c.is_zero()) out.terms_.push_back({mono, std::move(c)});
    std::sort(out.terms_.begin(), out.terms_.end(), mono_greater);
    return out;
}

SparsePoly& SparsePoly::scale(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

SparsePoly SparsePoly::pow(unsigned e) const {
    SparsePoly r(Rational(1));
    SparsePoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.vars_ == b.vars_) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }
    auto u = SparsePoly::var_union(a.vars_, b.vars_);
    return a.aligned_to(u) == b.aligned_to(u);
}

std::optional<SparsePoly> SparsePoly::divided_by(const SparsePoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("SparsePoly: division by zero polynomial");
    if (is_zero()) return SparsePoly{};
    if (divisor.is_constant())
        return SparsePoly(*this).scale(divisor.constant_value().inverse());
    if (vars_ != divisor.vars_) {
        auto u = var_union(vars_, divisor.vars_);
        return aligned_to(u).divided_by(divisor.aligned_to(u));
    }
    SparsePoly rem = *this;
    std::vector<Term> quot;
    const Term& dlt = divisor.terms_[0];
    while (!rem.is_zero()) {
        const Term& rlt = rem.terms_[0];
        Mono q(rlt.mono.size());
        for (std::size_t v = 0; v < q.size(); ++v) {
            if (rlt.mono[v] < dlt.mono[v]) return std::nullopt;
            q[v] = rlt.mono[v] - dlt.mono[v];
        }
        Rational qc = rlt.coeff / dlt.coeff;
        quot.push_back({q, qc});
        SparsePoly tq;
        tq.vars_ = vars_;
        tq.terms_.push_back({std::move(q), std::move(qc)});
        rem -= tq * divisor;
    }
    SparsePoly out;
    out.vars_ = vars_;
    out.terms_ = std::move(quot);
    out.normalize_sorted();
    return out;
}

Rational SparsePoly::integer_content() const {
    if (terms_.empty()) return Rational(1);
    mpz_class g = 0, l = 1;
    for (const auto& t : terms_) {
        g = int_gcd(g, t.coeff.num());
        l = int_lcm(l, t.coeff.den());
    }
    return Rational(g, l);
}

Rational SparsePoly::leading_coeff() const {
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

SparsePoly::Mono SparsePoly::monomial_content() const {
    Mono m(vars_.size(), 0);
    if (terms_.empty()) return m;
    m = terms_[0].mono;
    for (const auto& t : terms_)
        for (std::size_t v = 0; v < m.size(); ++v) m[v] = std::min(m[v], t.mono[v]);
    return m;
}

SparsePoly SparsePoly::divided_by_monomial(const Mono& m) const {
    SparsePoly out = *this;
    for (auto& t : out.terms_)
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (t.mono[v] < m[v]) throw std::logic_error("SparsePoly: monomial does not divide");
            t.mono[v] -= m[v];
        }
    return out;
}

SparsePoly SparsePoly::times_monomial(const Mono& m) const {
    SparsePoly out = *this;
    for (auto& t : out.terms_)
        for (std::size_t v = 0; v < m.size(); ++v) t.mono[v] += m[v];
    return out;
}

int SparsePoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Mono& m = terms_[0].mono;  // graded-lex leading term has maximal degree
    return static_cast<int>(std::accumulate(m.begin(), m.end(), 0u));
}

bool SparsePoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = std::accumulate(terms_[0].mono.begin(), terms_[0].mono.end(), 0u);
    for (const auto& t : terms_)
        if (std::accumulate(t.mono.begin(), t.mono.end(), 0u) != d) return false;
    return true;
}

int SparsePoly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

unsigned SparsePoly::degree_in(int var_idx) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var_idx]);
    return d;
}

unsigned SparsePoly::valuation_in(int var_idx) const {
    if (terms_.empty()) return 0;
    unsigned v = terms_[0].mono[var_idx];
    for (const auto& t : terms_) v = std::min(v, t.mono[var_idx]);
    return v;
}

std::vector<SparsePoly> SparsePoly::coefficients_in(int var_idx) const {
    std::vector<SparsePoly> out(degree_in(var_idx) + 1);
    for (auto& c : out) c.vars_ = vars_;
    for (const auto& t : terms_) {
        Term u = t;
        unsigned e = u.mono[var_idx];
        u.mono[var_idx] = 0;
        out[e].terms_.push_back(std::move(u));
    }
    for (auto& c : out) c.normalize_sorted();
    return out;
}

Rational SparsePoly::eval(const std::map<std::string, Rational>& point) const {
    std::vector<Rational> vals;
    vals.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = point.find(v);
        if (it == point.end()) throw std::invalid_argument("SparsePoly::eval: missing value for " + v);
        vals.push_back(it->second);
    }
    Rational sum(0);
    for (const auto& t : terms_) {
        Rational prod = t.coeff;
        for (std::size_t v = 0; v < vals.size(); ++v)
            for (unsigned e = 0; e < t.mono[v]; ++e) prod *= vals[v];
        sum += prod;
    }
    return sum;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        bool any_var = std::any_of(t.mono.begin(), t.mono.end(), [](unsigned e) { return e > 0; });
        bool coeff_shown = !any_var || !c.is_one();
        if (coeff_shown) os << c.str();
        bool need_star = coeff_shown;
        for (std::size_t v = 0; v < t.mono.size(); ++v) {
            if (t.mono[v] == 0) continue;
            if (need_star) os << "*";
            os << vars_[v];
            if (t.mono[v] > 1) os << "^" << t.mono[v];
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& p) { return os << p.str(); }

}  // namespace vscgw
