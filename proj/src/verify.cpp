#include "vscgw/verify.hpp"

#include <array>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "vscgw/gw.hpp"

namespace vscgw {

namespace {

struct Fragment {
    unsigned checked = 0;
    std::vector<std::string> failures;
};

using Cell = std::function<Fragment()>;

// Cells run on a small pool; fragments merge in cell order so reports are
// deterministic regardless of scheduling.
Fragment run_cells(const std::vector<Cell>& cells, unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (cells.size() < threads) threads = static_cast<unsigned>(cells.size());

    std::vector<Fragment> parts(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
            try {
                parts[i] = cells[i]();
            } catch (const std::exception& e) {
                parts[i].failures.push_back(std::string("unexpected exception: ") + e.what());
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    Fragment total;
    for (auto& p : parts) {
        total.checked += p.checked;
        total.failures.insert(total.failures.end(), p.failures.begin(), p.failures.end());
    }
    return total;
}

std::string cell_label(unsigned N, unsigned k, unsigned d, long n) {
    std::ostringstream os;
    os << "(N=" << N << ",k=" << k << ",d=" << d << ",n=" << n << ")";
    return os.str();
}

template <typename Body>
std::vector<Cell> grid_cells(const GridBounds& bounds, Body body) {
    std::vector<Cell> cells;
    for (unsigned d = 1; d <= bounds.d_max; ++d)
        for (unsigned k = 1; k <= bounds.k_max; ++k)
            for (unsigned N = 3; N <= 2 * k + 2; ++N)
                cells.push_back([=] { return body(N, k, d); });
    return cells;
}

SuiteReport with_name(std::string name, Fragment f) {
    return SuiteReport{std::move(name), f.checked, std::move(f.failures)};
}

Fragment theorem2_fragment(unsigned N, unsigned k, unsigned d) {
    Fragment f;
    for (const auto& r : verify_theorem2(N, k, d)) {
        ++f.checked;
        if (!r.equal)
            f.failures.push_back(cell_label(N, k, d, r.key.n) + ": two-point " + r.lhs.str() +
                                 " != transform " + r.rhs.str());
    }
    return f;
}

}  // namespace

SuiteReport verify_theorem1_suite(const GridBounds& bounds) {
    auto cells = grid_cells(bounds, [](unsigned N, unsigned k, unsigned d) {
        Fragment f;
        VscTable table;
        for (long n = 0; n <= vsc_window_max(N, k, d); ++n) {
            Rational rec = vsc_recursive({N, k, d, n}, table);
            Rational res = vsc_residue({N, k, d, n});
            ++f.checked;
            if (rec != res)
                f.failures.push_back(cell_label(N, k, d, n) + ": recursion " + rec.str() +
                                     " != residue " + res.str());
        }
        return f;
    });
    return with_name("theorem1", run_cells(cells, bounds.threads));
}

SuiteReport verify_reflection_suite(const GridBounds& bounds) {
    auto cells = grid_cells(bounds, [](unsigned N, unsigned k, unsigned d) {
        Fragment f;
        VscTable table;
        long wmax = vsc_window_max(N, k, d);
        for (long n = 0; n <= wmax; ++n) {
            Rational left = vsc_recursive({N, k, d, n}, table);
            Rational right = vsc_recursive({N, k, d, wmax - n}, table);
            ++f.checked;
            if (left != right)
                f.failures.push_back(cell_label(N, k, d, n) + ": " + left.str() +
                                     " != reflected " + right.str());
        }
        return f;
    });
    return with_name("reflection", run_cells(cells, bounds.threads));
}

SuiteReport verify_theorem2_instance(unsigned N, unsigned k, unsigned d) {
    return with_name("theorem2", theorem2_fragment(N, k, d));
}

SuiteReport verify_theorem2_suite() {
    static constexpr unsigned instances[][3] = {{5, 6, 1}, {5, 6, 2}, {7, 9, 2}, {6, 7, 3},
                                                {5, 5, 1}, {5, 5, 2}, {5, 5, 3}, {6, 5, 1}};
    Fragment total;
    for (auto [N, k, d] : instances) {
        Fragment f = theorem2_fragment(N, k, d);
        total.checked += f.checked;
        total.failures.insert(total.failures.end(), f.failures.begin(), f.failures.end());
    }
    return with_name("theorem2", total);
}

SuiteReport verify_identities() {
    Fragment f;
    for (const auto& r : identity_suite()) {
        ++f.checked;
        if (!r.pass) f.failures.push_back(r.name + ": does not normalize to zero");
    }
    return with_name("identities", f);
}

SuiteReport verify_localization_suite(const GridBounds& bounds) {
    std::vector<std::array<unsigned, 3>> grid;
    for (unsigned d = 1; d <= std::min(2u, bounds.d_max); ++d)
        for (unsigned N = 4; N <= 6; ++N)
            for (unsigned k = 2; k <= bounds.k_max; ++k) grid.push_back({N, k, d});
    if (bounds.d_max >= 3) {
        grid.push_back({5, 5, 3});
        grid.push_back({6, 7, 3});
    }

    std::vector<Cell> cells;
    for (auto [N, k, d] : grid)
        cells.push_back([N = N, k = k, d = d] {
            Fragment f;
            for (long n = 0; n <= static_cast<long>(N) - 2; ++n) {
                GwRequest req{N, k, d, static_cast<long>(N) - 2 - n,
                              n - 1 + (static_cast<long>(N) - static_cast<long>(k)) * d};
                if (req.b < 0 || req.b > static_cast<long>(N) - 2) continue;
                Rational res = gw_residue(req);
                Rational fixed1 = gw_equivariant_seeded(req, 1);
                Rational fixed2 = gw_equivariant_seeded(req, 2);
                f.checked += 2;
                if (res != fixed1)
                    f.failures.push_back(cell_label(N, k, d, n) + ": residue " + res.str() +
                                         " != fixed-point " + fixed1.str());
                if (fixed1 != fixed2)
                    f.failures.push_back(cell_label(N, k, d, n) + ": seed 1 gives " +
                                         fixed1.str() + ", seed 2 gives " + fixed2.str());
            }
            return f;
        });
    return with_name("localization", run_cells(cells, bounds.threads));
}

SuiteReport verify_fano_collapse_suite() {
    static constexpr unsigned instances[][3] = {{6, 3, 1}, {7, 4, 1}, {6, 4, 2},
                                                {7, 5, 2}, {8, 6, 2}, {8, 6, 3}};
    Fragment f;
    for (auto [N, k, d] : instances) {
        VscTable table;
        for (long n = 0; n <= vsc_window_max(N, k, d); ++n) {
            Rational transformed = mirror_transform({N, k, d, n}, table);
            Rational plain = vsc_recursive({N, k, d, n}, table) / Rational(d);
            GwRequest req{N, k, d, static_cast<long>(N) - 2 - n,
                          n - 1 + (static_cast<long>(N) - static_cast<long>(k)) * d};
            Rational two_point = gw_residue(req) / Rational(k);
            f.checked += 2;
            if (transformed != plain)
                f.failures.push_back(cell_label(N, k, d, n) + ": transform " + transformed.str() +
                                     " != constants/d " + plain.str());
            if (transformed != two_point)
                f.failures.push_back(cell_label(N, k, d, n) + ": transform " + transformed.str() +
                                     " != two-point/k " + two_point.str());
        }
    }
    return with_name("fano-collapse", f);
}

}  // namespace vscgw
