#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vscgw/cache.hpp"
#include "vscgw/errors.hpp"
#include "vscgw/gw.hpp"
#include "vscgw/ratfun.hpp"
#include "vscgw/verify.hpp"

using vscgw::GridBounds;
using vscgw::GwRequest;
using vscgw::Rational;
using vscgw::SuiteReport;
using vscgw::VscKey;
using vscgw::VscTable;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_mismatch = 3;

std::string env_cache_path() {
    const char* p = std::getenv("VSCGW_CACHE");
    return p ? std::string(p) : std::string();
}

ordered_json value_json(const Rational& v) {
    return {{"num", v.num().get_str()}, {"den", v.den().get_str()}};
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

struct VscArgs {
    unsigned N = 0, k = 0, d = 0;
    long n = 0;
    bool has_n = false;
    std::string pipeline = "recursion";
    std::string format = "text";
    std::string cache_path = env_cache_path();
};

int run_vsc(const VscArgs& a) {
    const long wmax = vscgw::vsc_window_max(a.N, a.k, a.d);
    std::vector<long> ns;
    if (a.has_n)
        ns.push_back(a.n);
    else
        for (long n = 0; n <= wmax; ++n) ns.push_back(n);

    const bool recursion = a.pipeline != "residue";
    const bool residue = a.pipeline != "recursion";
    VscTable table;
    std::vector<Rational> values;
    for (long n : ns) {
        VscKey key{a.N, a.k, a.d, n};
        Rational rec, res;
        if (recursion) rec = vsc_recursive(key, table);
        if (residue) res = vscgw::vsc_residue(key);
        if (recursion && residue && rec != res) {
            std::cerr << "pipeline mismatch at n=" << n << ": recursion " << rec.str()
                      << " != residue " << res.str() << "\n";
            return exit_mismatch;
        }
        if (!recursion && n >= 0 && n <= wmax) table.store(key, res, false, true);
        values.push_back(recursion ? rec : res);
    }

    if (a.format == "json") {
        ordered_json rows = ordered_json::array();
        const std::string prov = recursion && residue ? "recursion+residue"
                                 : recursion         ? "recursion"
                                                     : "residue";
        for (std::size_t i = 0; i < ns.size(); ++i)
            rows.push_back({{"N", a.N},
                            {"k", a.k},
                            {"d", a.d},
                            {"n", ns[i]},
                            {"value", value_json(values[i])},
                            {"provenance", prov}});
        emit(rows);
    } else if (a.format == "csv") {
        std::cout << "N,k,d,n,value\n";
        for (std::size_t i = 0; i < ns.size(); ++i)
            std::cout << a.N << "," << a.k << "," << a.d << "," << ns[i] << ","
                      << values[i].str() << "\n";
    } else {
        for (std::size_t i = 0; i < values.size(); ++i)
            std::cout << values[i].str() << (i + 1 < values.size() ? ' ' : '\n');
        if (values.empty()) std::cout << "\n";
    }

    if (!a.cache_path.empty()) vscgw::cache_write(table, a.cache_path);
    return exit_ok;
}

struct GwArgs {
    unsigned N = 0, k = 0, d = 0;
    long n = 0, a = 0, b = 0;
    bool has_n = false, has_a = false, has_b = false;
    unsigned lambda_seed = 1;
    std::string pipeline = "residue";
    std::string format = "text";
};

int run_gw(const GwArgs& g) {
    if (g.has_n == (g.has_a || g.has_b)) {
        std::cerr << "specify the insertions via --n alone or via --a and --b\n";
        return exit_usage;
    }
    if (g.has_n != g.has_a && g.has_a != g.has_b) {
        std::cerr << "--a and --b go together\n";
        return exit_usage;
    }
    GwRequest req{g.N, g.k, g.d, g.a, g.b};
    if (g.has_n) {
        req.a = static_cast<long>(g.N) - 2 - g.n;
        req.b = g.n - 1 + (static_cast<long>(g.N) - static_cast<long>(g.k)) * g.d;
    }

    const bool residue = g.pipeline != "equivariant";
    const bool fixed_point = g.pipeline != "residue";
    Rational res, fix;
    if (residue) res = vscgw::gw_residue(req);
    if (fixed_point) fix = vscgw::gw_equivariant_seeded(req, g.lambda_seed);
    if (residue && fixed_point && res != fix) {
        std::cerr << "pipeline mismatch: residue " << res.str() << " != equivariant "
                  << fix.str() << "\n";
        return exit_mismatch;
    }
    Rational value = residue ? res : fix;

    if (g.format == "json")
        emit({{"N", g.N},
              {"k", g.k},
              {"d", g.d},
              {"a", req.a},
              {"b", req.b},
              {"value", value_json(value)},
              {"pipeline", g.pipeline}});
    else
        std::cout << value.str() << "\n";
    return exit_ok;
}

struct VerifyArgs {
    std::string target;
    GridBounds bounds;
    unsigned N = 0, k = 0, d = 0;
    bool has_instance = false;
    std::string format = "text";
};

int run_verify(const VerifyArgs& v) {
    std::vector<SuiteReport> reports;
    if (v.target == "theorem1" || v.target == "all") {
        reports.push_back(vscgw::verify_theorem1_suite(v.bounds));
        reports.push_back(vscgw::verify_reflection_suite(v.bounds));
    }
    if (v.target == "theorem2" || v.target == "all") {
        if (v.has_instance)
            reports.push_back(vscgw::verify_theorem2_instance(v.N, v.k, v.d));
        else
            reports.push_back(vscgw::verify_theorem2_suite());
    }
    if (v.target == "identities" || v.target == "all") reports.push_back(vscgw::verify_identities());
    if (v.target == "all") {
        reports.push_back(vscgw::verify_localization_suite(v.bounds));
        reports.push_back(vscgw::verify_fano_collapse_suite());
    }

    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass();

    if (v.format == "json") {
        ordered_json doc;
        doc["target"] = v.target;
        doc["pass"] = all_pass;
        auto& suites = doc["suites"] = ordered_json::array();
        for (const auto& r : reports)
            suites.push_back({{"name", r.name},
                              {"checked", r.checked},
                              {"pass", r.pass()},
                              {"failures", r.failures}});
        emit(doc);
    } else {
        for (const auto& r : reports) {
            std::cout << r.name << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.checked
                      << " checks)\n";
            for (const auto& f : r.failures) std::cout << "  " << f << "\n";
        }
        std::cout << (all_pass ? "all checks pass" : "FAILURES present") << "\n";
    }
    return all_pass ? exit_ok : exit_mismatch;
}

int run_cache_info(const std::string& path) {
    VscTable table = vscgw::cache_read(path);
    std::cout << "schema " << vscgw::cache_schema_name << " version "
              << vscgw::cache_schema_version << ", " << table.entries().size() << " entries\n";
    return exit_ok;
}

int run_cache_build(const std::string& path, const GridBounds& bounds, bool verify_residue) {
    VscTable merged;
    for (unsigned k = 1; k <= bounds.k_max; ++k)
        for (unsigned N = 3; N <= 2 * k + 2; ++N) {
            VscTable cell = vscgw::vsc_table(N, k, bounds.d_max, verify_residue);
            for (const auto& [key, entry] : cell.entries())
                merged.store(key, entry.value, entry.from_recursion, entry.from_residue);
        }
    vscgw::cache_write(merged, path);
    std::cout << "wrote " << merged.entries().size() << " entries to " << path << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"virtual structure constants and two-point Gromov-Witten invariants of "
                 "degree-k hypersurfaces in P^{N-1}"};
    app.require_subcommand(1);
    argv = app.ensure_utf8(argv);

    std::size_t gcd_threshold = vscgw::default_gcd_threshold();
    app.add_option("--gcd-threshold", gcd_threshold,
                   "term-count bound above which full multivariate gcd reduction runs");

    VscArgs vsc;
    auto* cmd_vsc = app.add_subcommand("vsc", "virtual structure constants for one (N, k, d)");
    cmd_vsc->add_option("--N", vsc.N, "ambient projective dimension + 1")->required();
    cmd_vsc->add_option("--k", vsc.k, "hypersurface degree")->required();
    cmd_vsc->add_option("--d", vsc.d, "curve degree")->required()->check(CLI::Range(1u, 3u));
    cmd_vsc->add_option("--n", vsc.n, "single grading index (default: whole window)");
    cmd_vsc->add_option("--pipeline", vsc.pipeline, "recursion, residue, or both")
        ->check(CLI::IsMember({"recursion", "residue", "both"}));
    cmd_vsc->add_option("--format", vsc.format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd_vsc->add_option("--cache", vsc.cache_path,
                        "also write the computed entries to this cache file ($VSCGW_CACHE)");

    GwArgs gw;
    auto* cmd_gw = app.add_subcommand("gw", "genus-0 two-point invariant");
    cmd_gw->add_option("--N", gw.N, "ambient projective dimension + 1")->required();
    cmd_gw->add_option("--k", gw.k, "hypersurface degree")->required();
    cmd_gw->add_option("--d", gw.d, "curve degree")->required()->check(CLI::Range(1u, 3u));
    auto* opt_n = cmd_gw->add_option("--n", gw.n, "grading index fixing both insertions");
    auto* opt_a = cmd_gw->add_option("--a", gw.a, "first insertion exponent");
    auto* opt_b = cmd_gw->add_option("--b", gw.b, "second insertion exponent");
    cmd_gw->add_option("--pipeline", gw.pipeline, "residue, equivariant, or both")
        ->check(CLI::IsMember({"residue", "equivariant", "both"}));
    cmd_gw->add_option("--lambda-seed", gw.lambda_seed, "seed for the torus character assignment");
    cmd_gw->add_option("--format", gw.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    VerifyArgs verify;
    auto* cmd_verify = app.add_subcommand("verify", "run exact verification suites");
    cmd_verify
        ->add_option("target", verify.target, "theorem1, theorem2, identities, or all")
        ->required()
        ->check(CLI::IsMember({"theorem1", "theorem2", "identities", "all"}));
    cmd_verify->add_option("--k-max", verify.bounds.k_max, "largest hypersurface degree")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--d-max", verify.bounds.d_max, "largest curve degree")
        ->check(CLI::Range(1u, 3u));
    cmd_verify->add_option("--threads", verify.bounds.threads, "worker count (0: all cores)");
    auto* opt_vn = cmd_verify->add_option("--N", verify.N, "single-instance N (theorem2)");
    auto* opt_vk = cmd_verify->add_option("--k", verify.k, "single-instance k (theorem2)");
    auto* opt_vd = cmd_verify->add_option("--d", verify.d, "single-instance d (theorem2)");
    cmd_verify->add_option("--format", verify.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* cmd_cache = app.add_subcommand("cache", "inspect or build cache files");
    cmd_cache->require_subcommand(1);
    std::string info_path = env_cache_path();
    auto* cmd_info = cmd_cache->add_subcommand("info", "validate a cache file");
    auto* opt_info = cmd_info->add_option("path", info_path, "cache file ($VSCGW_CACHE)");
    std::string build_path = env_cache_path();
    GridBounds build_bounds;
    bool build_verify = false;
    auto* cmd_build = cmd_cache->add_subcommand("build", "compute a grid and write it");
    auto* opt_out = cmd_build->add_option("--out", build_path, "output path ($VSCGW_CACHE)");
    cmd_build->add_option("--k-max", build_bounds.k_max, "largest hypersurface degree")
        ->check(CLI::PositiveNumber);
    cmd_build->add_option("--d-max", build_bounds.d_max, "largest curve degree")
        ->check(CLI::Range(1u, 3u));
    cmd_build->add_flag("--verify-residue", build_verify,
                        "store the residue pipeline alongside and require agreement");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    vscgw::set_default_gcd_threshold(gcd_threshold);
    vsc.has_n = cmd_vsc->count("--n") > 0;
    gw.has_n = opt_n->count() > 0;
    gw.has_a = opt_a->count() > 0;
    gw.has_b = opt_b->count() > 0;
    verify.has_instance = opt_vn->count() > 0 && opt_vk->count() > 0 && opt_vd->count() > 0;

    try {
        if (cmd_vsc->parsed()) return run_vsc(vsc);
        if (cmd_gw->parsed()) return run_gw(gw);
        if (cmd_verify->parsed()) {
            if ((opt_vn->count() | opt_vk->count() | opt_vd->count()) && !verify.has_instance) {
                std::cerr << "--N, --k, --d go together\n";
                return exit_usage;
            }
            return run_verify(verify);
        }
        if (cmd_info->parsed()) {
            if (info_path.empty()) {
                std::cerr << "no cache path: pass one or set $VSCGW_CACHE\n";
                return exit_usage;
            }
            (void)opt_info;
            return run_cache_info(info_path);
        }
        if (cmd_build->parsed()) {
            if (build_path.empty()) {
                std::cerr << "no output path: pass --out or set $VSCGW_CACHE\n";
                return exit_usage;
            }
            (void)opt_out;
            return run_cache_build(build_path, build_bounds, build_verify);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}
