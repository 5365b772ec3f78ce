#include "table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace pseudoanalytic::cli {

namespace {

std::string csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_cell(const Cell& c) {
  struct Visit {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return std::isfinite(v) ? csv_number(v) : ""; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    }
  };
  return std::visit(Visit{}, c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  struct Visit {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double v) const { return std::isfinite(v) ? nlohmann::ordered_json(v) : nullptr; }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visit{}, c);
}

}  // namespace

void write_table(std::ostream& os, const Table& table, Format format, const nlohmann::ordered_json& spec) {
  if (format == Format::csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << '\n';
    }
    return;
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[table.columns[i]] = json_cell(row[i]);
    rows.push_back(std::move(r));
  }
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  doc["schema"] = schema_version;
  doc["spec"] = spec;
  doc["rows"] = std::move(rows);
  os << doc.dump(1) << '\n';
}

}  // namespace pseudoanalytic::cli
