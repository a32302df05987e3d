#include "vscgw/vsc.hpp"

#include <stdexcept>
#include <string>

#include "vscgw/errors.hpp"
#include "vscgw/residue.hpp"

namespace vscgw {

long vsc_window_max(unsigned N, unsigned k, unsigned d) {
    return static_cast<long>(N) - 1 -
           (static_cast<long>(N) - static_cast<long>(k)) * static_cast<long>(d);
}

VscKey VscTable::storage_key(VscKey key) {
    if (key.d == 1) key.N = 0;
    return key;
}

void VscTable::store(const VscKey& key, const Rational& value, bool recursion, bool residue) {
    VscKey sk = storage_key(key);
    auto it = entries_.find(sk);
    if (it == entries_.end()) {
        entries_.emplace(sk, VscEntry{value, recursion, residue});
        return;
    }
    if (it->second.value != value)
        throw std::logic_error("VscTable: conflicting value for an already-stored key");
    it->second.from_recursion = it->second.from_recursion || recursion;
    it->second.from_residue = it->second.from_residue || residue;
}

const VscEntry* VscTable::find(const VscKey& key) const {
    auto it = entries_.find(storage_key(key));
    return it == entries_.end() ? nullptr : &it->second;
}

std::vector<Rational> vsc_initial_row(unsigned k) {
    if (k == 0) throw RangeError("vsc_initial_row: k must be positive");
    SparsePoly p{Rational(k)};
    SparsePoly w = SparsePoly::var("w");
    for (unsigned j = 1; j < k; ++j) p *= w * Rational(j) + SparsePoly{Rational(k - j)};
    std::vector<Rational> row(k, Rational(0));
    int wi = p.var_index("w");
    if (wi < 0) {
        row[0] = p.constant_value();
        return row;
    }
    auto cs = p.coefficients_in(wi);
    for (std::size_t n = 0; n < cs.size() && n < row.size(); ++n)
        row[n] = cs[n].constant_value();
    return row;
}

namespace {

void check_degree(unsigned d) {
    if (d < 1 || d > 3)
        throw UnsupportedDegree("virtual structure constants implemented for d in {1,2,3}, got " +
                                std::to_string(d));
}

bool in_window(const VscKey& key) {
    return key.n >= 0 && key.n <= vsc_window_max(key.N, key.k, key.d);
}

}  // namespace

Rational vsc_recursive(const VscKey& key, VscTable& table) {
    check_degree(key.d);
    if (!in_window(key)) return Rational(0);
    if (const VscEntry* e = table.find(key)) return e->value;
    Rational val;
    const long shift = static_cast<long>(key.N) - static_cast<long>(key.k);
    auto R = [&](unsigned d, long n) {
        return vsc_recursive({key.N + 1, key.k, d, n}, table);
    };
    if (key.d == 1) {
        val = vsc_initial_row(key.k)[static_cast<std::size_t>(key.n)];
    } else if (key.d == 2) {
        val = Rational(1, 2) * R(2, key.n - 1) + Rational(1, 2) * R(2, key.n) +
              R(1, key.n) * R(1, key.n + shift);
    } else {
        auto L1 = [&](long m) { return R(1, m); };
        auto L2h = [&](long m) { return R(2, m) * Rational(1, 2); };
        auto L3 = [&](long m) { return R(3, m); };
        val = Rational(2, 9) * L3(key.n - 2) + Rational(5, 9) * L3(key.n - 1) +
              Rational(2, 9) * L3(key.n) +
              Rational(4, 3) * L2h(key.n - 1) * L1(key.n + 2 * shift) +
              L2h(key.n) * L1(key.n + 2 * shift) +
              Rational(2, 3) * L2h(key.n) * L1(key.n + 1 + 2 * shift) +
              Rational(2, 3) * L1(key.n - 1) * L2h(key.n - 1 + shift) +
              L1(key.n) * L2h(key.n - 1 + shift) +
              Rational(4, 3) * L1(key.n) * L2h(key.n + shift) +
              L1(key.n) * L1(key.n + shift) * L1(key.n + 2 * shift);
    }
    table.store(key, val, true, false);
    return val;
}

Rational vsc_residue(const VscKey& key) {
    check_degree(key.d);
    if (!in_window(key)) return Rational(0);
    const unsigned N = key.N, k = key.k, d = key.d;
    const long n = key.n;
    Rational total(0);
    for (const auto& sigma : ordered_partitions(d)) {
        const unsigned l = static_cast<unsigned>(sigma.size());
        std::vector<std::string> names(l + 1);
        std::vector<SparsePoly> x(l + 1);
        for (unsigned j = 0; j <= l; ++j) {
            names[j] = "x" + std::to_string(j);
            x[j] = SparsePoly::var(names[j]);
        }
        std::vector<long> expo(l + 1, -static_cast<long>(N));
        expo[0] += static_cast<long>(N) - 2 - n;
        expo[l] += n - 1 + (static_cast<long>(N) - static_cast<long>(k)) * d;
        for (unsigned j = 1; j < l; ++j) expo[j] -= 1;

        Fraction f{SparsePoly{Rational(1)}};
        Rational scale(1);
        for (unsigned j = 1; j < l; ++j) scale /= Rational(k);
        for (unsigned part : sigma) scale /= Rational(part);

        for (unsigned j = 0; j <= l; ++j) {
            if (expo[j] > 0)
                f.num *= x[j].pow(static_cast<unsigned>(expo[j]));
            else if (expo[j] < 0)
                f.push_den(x[j], static_cast<unsigned>(-expo[j]));
        }
        for (unsigned j = 1; j < l; ++j) {
            SparsePoly comp = (x[j] - x[j - 1]) * Rational(1, sigma[j - 1]) +
                              (x[j] - x[j + 1]) * Rational(1, sigma[j]);
            f.push_den(comp);
        }
        for (unsigned j = 1; j <= l; ++j) {
            const unsigned dj = sigma[j - 1];
            f.num *= e_poly(k, dj, x[j - 1], x[j]);
            for (unsigned m = 1; m < dj; ++m)
                f.push_den(x[j - 1] * Rational(m, dj) + x[j] * Rational(dj - m, dj), N);
        }
        f.num.scale(scale);
        total += iterated_residue(std::move(f), names);
    }
    return Rational(d) * total / Rational(k);
}

VscTable vsc_table(unsigned N, unsigned k, unsigned d_max, bool verify_residue) {
    check_degree(d_max == 0 ? 1 : d_max);
    VscTable table;
    for (unsigned d = 1; d <= d_max; ++d) {
        const long wmax = vsc_window_max(N, k, d);
        for (long n = 0; n <= wmax; ++n) {
            VscKey key{N, k, d, n};
            vsc_recursive(key, table);
            if (verify_residue) table.store(key, vsc_residue(key), false, true);
        }
    }
    return table;
}

}  // namespace vscgw
