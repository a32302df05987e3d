#include "vscgw/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "vscgw/errors.hpp"

namespace vscgw {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string provenance_label(const VscEntry& e) {
    if (e.from_recursion && e.from_residue) return "recursion+residue";
    if (e.from_recursion) return "recursion";
    if (e.from_residue) return "residue";
    return "imported";
}

Rational parse_value(const ordered_json& v) {
    if (!v.is_object() || !v.contains("num") || !v.contains("den") || !v["num"].is_string() ||
        !v["den"].is_string())
        throw CorruptFile("cache entry value is not {num, den} strings");
    mpz_class num, den;
    if (num.set_str(v["num"].get<std::string>(), 10) != 0 ||
        den.set_str(v["den"].get<std::string>(), 10) != 0)
        throw CorruptFile("cache entry value is not a decimal rational");
    if (den == 0) throw CorruptFile("cache entry has zero denominator");
    return Rational(num, den);
}

}  // namespace

void cache_write(const VscTable& table, const std::string& path) {
    ordered_json root;
    root["schema"] = cache_schema_name;
    root["version"] = cache_schema_version;
    auto& entries = root["entries"] = ordered_json::array();
    for (const auto& [key, entry] : table.entries()) {
        ordered_json e;
        e["N"] = key.N;
        e["k"] = key.k;
        e["d"] = key.d;
        e["n"] = key.n;
        e["value"] = {{"num", entry.value.num().get_str()}, {"den", entry.value.den().get_str()}};
        e["provenance"] = provenance_label(entry);
        entries.push_back(std::move(e));
    }

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CorruptFile("cannot write cache file '" + tmp + "'");
        out << root.dump(2) << '\n';
        if (!out.flush()) throw CorruptFile("short write to cache file '" + tmp + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::remove(tmp.c_str());
        throw CorruptFile("cannot move cache file into place at '" + path + "': " + ec.message());
    }
}

VscTable cache_read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CorruptFile("cannot open cache file '" + path + "'");

    ordered_json root;
    try {
        root = ordered_json::parse(in);
    } catch (const ordered_json::parse_error& e) {
        throw CorruptFile("cache file '" + path + "' is not valid JSON: " + e.what());
    }

    if (!root.is_object() || !root.contains("schema") || !root["schema"].is_string())
        throw CorruptFile("cache file '" + path + "' lacks a schema marker");
    if (root["schema"].get<std::string>() != cache_schema_name)
        throw SchemaMismatch("'" + path + "' holds schema '" + root["schema"].get<std::string>() +
                             "', expected '" + cache_schema_name + "'");
    if (!root.contains("version") || !root["version"].is_number_integer())
        throw CorruptFile("cache file '" + path + "' lacks a version");
    if (root["version"].get<int>() != cache_schema_version)
        throw SchemaMismatch("'" + path + "' is schema version " +
                             root["version"].dump() + ", this build reads version " +
                             std::to_string(cache_schema_version));
    if (!root.contains("entries") || !root["entries"].is_array())
        throw CorruptFile("cache file '" + path + "' lacks an entries array");

    VscTable table;
    for (const auto& e : root["entries"]) {
        if (!e.is_object() || !e.contains("N") || !e.contains("k") || !e.contains("d") ||
            !e.contains("n") || !e.contains("value"))
            throw CorruptFile("cache entry in '" + path + "' lacks a key field");
        VscKey key{e["N"].get<unsigned>(), e["k"].get<unsigned>(), e["d"].get<unsigned>(),
                   e["n"].get<long>()};
        std::string prov = e.value("provenance", "imported");
        bool rec = prov == "recursion" || prov == "recursion+residue";
        bool res = prov == "residue" || prov == "recursion+residue";
        table.store(key, parse_value(e["value"]), rec, res);
    }
    return table;
}

}  // namespace vscgw
