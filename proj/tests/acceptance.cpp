// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "vscgw/cache.hpp"
#include "vscgw/gw.hpp"
#include "vscgw/verify.hpp"

using namespace vscgw;

namespace {

struct Criterion {
    std::string name;
    std::function<SuiteReport()> run;
};

SuiteReport spot_check(std::string name, const std::vector<std::pair<std::string, bool>>& checks) {
    SuiteReport r{std::move(name), 0, {}};
    for (const auto& [label, ok] : checks) {
        ++r.checked;
        if (!ok) r.failures.push_back(label);
    }
    return r;
}

std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SuiteReport cache_round_trip() {
    VscTable grid;
    for (unsigned k = 1; k <= 6; ++k)
        for (unsigned N = 3; N <= 2 * k + 2; ++N) {
            VscTable cell = vsc_table(N, k, 3, true);
            for (const auto& [key, entry] : cell.entries())
                grid.store(key, entry.value, entry.from_recursion, entry.from_residue);
        }
    auto dir = std::filesystem::temp_directory_path();
    std::string first = (dir / "vscgw-acceptance-a.json").string();
    std::string second = (dir / "vscgw-acceptance-b.json").string();
    cache_write(grid, first);
    cache_write(cache_read(first), second);
    bool identical = slurp(first) == slurp(second);
    std::filesystem::remove(first);
    std::filesystem::remove(second);
    return spot_check("serialization round-trip on the theorem-1 grid",
                      {{"write-read-write bytes differ", identical}});
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"theorem 1: recursion = residues, d<=3, k<=6, 3<=N<=2k+2",
         [] { return verify_theorem1_suite({}); }},
        {"reflection symmetry on the same grid", [] { return verify_reflection_suite({}); }},
        {"spot value (N,k,d)=(3,2,2), n=0 by both pipelines",
         [] {
             VscTable t;
             return spot_check("spot",
                               {{"recursion", vsc_recursive({3, 2, 2, 0}, t) == Rational(4)},
                                {"residues", vsc_residue({3, 2, 2, 0}) == Rational(4)}});
         }},
        {"quintic degree 1: two-point 2875, transform 575",
         [] {
             VscTable t;
             return spot_check(
                 "quintic",
                 {{"two-point", gw_residue({5, 5, 1, 1, 1}) == Rational(2875)},
                  {"transform", mirror_transform({5, 5, 1, 2}, t) == Rational(2875, 5)}});
         }},
        {"theorem 2: two-point/k = transform on the standing instances",
         [] { return verify_theorem2_suite(); }},
        {"localization: fixed-point sums = residues, seed-independent",
         [] { return verify_localization_suite({}); }},
        {"kernel and decomposition identities normalize to zero",
         [] { return verify_identities(); }},
        {"fano collapse: transform = constants/d = two-point/k",
         [] { return verify_fano_collapse_suite(); }},
        {"serialization round-trip is bit-identical", cache_round_trip},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        SuiteReport r = c.run();
        std::cout << (r.pass() ? "PASS" : "FAIL") << "  " << c.name << " (" << r.checked
                  << " checks)\n";
        for (const auto& f : r.failures) std::cout << "      " << f << "\n";
        if (!r.pass()) ++failed;
    }
    if (failed) std::cout << failed << " criteria failed\n";
    return failed ? 1 : 0;
}
