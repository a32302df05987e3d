#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "vscgw/cache.hpp"
#include "vscgw/errors.hpp"

using namespace vscgw;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& stem)
        : path(std::filesystem::temp_directory_path() / stem) {}
    ~TempFile() { std::filesystem::remove(path); }
    std::string str() const { return path.string(); }
};

std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& p, const std::string& content) {
    std::ofstream(p, std::ios::binary | std::ios::trunc) << content;
}

}  // namespace

TEST_CASE("round trip is bit identical") {
    TempFile a("vscgw-cache-a.json"), b("vscgw-cache-b.json");
    VscTable table = vsc_table(5, 5, 3, true);
    cache_write(table, a.str());
    VscTable back = cache_read(a.str());
    cache_write(back, b.str());
    CHECK(slurp(a.str()) == slurp(b.str()));

    REQUIRE(back.entries().size() == table.entries().size());
    for (const auto& [key, entry] : table.entries()) {
        const VscEntry* e = back.find(key);
        REQUIRE(e != nullptr);
        CHECK(e->value == entry.value);
        CHECK(e->from_recursion == entry.from_recursion);
        CHECK(e->from_residue == entry.from_residue);
    }
}

TEST_CASE("degree one row round trips") {
    TempFile a("vscgw-cache-row.json");
    VscTable table;
    for (long n = 0; n <= vsc_window_max(5, 5, 1); ++n) vsc_recursive({5, 5, 1, n}, table);
    cache_write(table, a.str());
    VscTable back = cache_read(a.str());
    CHECK(back.find({5, 5, 1, 2})->value == Rational(1345));
    // degree-1 entries are N-independent and live under the sentinel
    CHECK(back.entries().begin()->first.N == 0);
}

TEST_CASE("malformed input") {
    TempFile a("vscgw-cache-bad.json");

    CHECK_THROWS_AS(cache_read((std::filesystem::temp_directory_path() /
                                "vscgw-no-such-file.json").string()),
                    CorruptFile);

    VscTable table;
    vsc_recursive({5, 5, 1, 0}, table);
    cache_write(table, a.str());
    std::string full = slurp(a.str());
    spit(a.str(), full.substr(0, full.size() / 2));
    CHECK_THROWS_AS(cache_read(a.str()), CorruptFile);

    spit(a.str(), "not json at all");
    CHECK_THROWS_AS(cache_read(a.str()), CorruptFile);

    spit(a.str(), R"({"version": 1, "entries": []})");
    CHECK_THROWS_AS(cache_read(a.str()), CorruptFile);

    spit(a.str(), R"({"schema": "something-else", "version": 1, "entries": []})");
    CHECK_THROWS_AS(cache_read(a.str()), SchemaMismatch);

    spit(a.str(), R"({"schema": "vscgw-vsc-cache", "version": 2, "entries": []})");
    CHECK_THROWS_AS(cache_read(a.str()), SchemaMismatch);

    spit(a.str(), R"({"schema": "vscgw-vsc-cache", "version": 1})");
    CHECK_THROWS_AS(cache_read(a.str()), CorruptFile);

    spit(a.str(), R"({"schema": "vscgw-vsc-cache", "version": 1,
                      "entries": [{"N": 0, "k": 5, "d": 1, "n": 0,
                                   "value": {"num": "1", "den": "0"}}]})");
    CHECK_THROWS_AS(cache_read(a.str()), CorruptFile);

    spit(a.str(), R"({"schema": "vscgw-vsc-cache", "version": 1,
                      "entries": [{"N": 0, "k": 5, "d": 1,
                                   "value": {"num": "1", "den": "1"}}]})");
    CHECK_THROWS_AS(cache_read(a.str()), CorruptFile);
}

TEST_CASE("unwritable destination") {
    std::string dir = (std::filesystem::temp_directory_path() / "vscgw-absent-dir").string();
    CHECK_THROWS_AS(cache_write(VscTable{}, dir + "/cache.json"), CorruptFile);
}

TEST_CASE("negative and non integer values survive") {
    TempFile a("vscgw-cache-frac.json");
    VscTable table;
    table.store({3, 7, 2, 0}, Rational(-22, 7), false, false);
    cache_write(table, a.str());
    VscTable back = cache_read(a.str());
    CHECK(back.find({3, 7, 2, 0})->value == Rational(-22, 7));
}
