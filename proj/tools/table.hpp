#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace pseudoanalytic::cli {

/// Null cells are written as empty CSV fields or JSON null; non-finite
/// doubles are treated as null.
using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { csv, json };

inline constexpr const char* schema_version = "pseudoanalytic/1";

/// CSV: header row, comma separated, '.' decimal, 17 significant digits.
/// JSON: {"schema": ..., "spec": spec, "rows": [{column: value, ...}]}.
void write_table(std::ostream& os, const Table& table, Format format, const nlohmann::ordered_json& spec);

}  // namespace pseudoanalytic::cli
