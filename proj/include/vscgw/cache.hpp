#pragma once

#include <string>

#include "vscgw/vsc.hpp"

namespace vscgw {

inline constexpr const char* cache_schema_name = "vscgw-vsc-cache";
inline constexpr int cache_schema_version = 1;

// Serializes every table entry under the schema above: numerator and
// denominator as decimal strings, entries in storage-key order, two-space
// indentation.  Identical tables produce byte-identical files; the write is
// temp-then-rename so readers never observe a partial file.
void cache_write(const VscTable& table, const std::string& path);

// Inverse of cache_write.  Unreadable or malformed content raises
// CorruptFile; a recognizable file with a different schema name or a newer
// version raises SchemaMismatch.
VscTable cache_read(const std::string& path);

}  // namespace vscgw
