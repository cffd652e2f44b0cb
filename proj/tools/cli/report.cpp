#include "weilcensus/cli/report.hpp"

#include <algorithm>

#include "json.hpp"
#include "weilcensus/errors.hpp"

namespace weilcensus::cli {

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw ContractError("unknown format '" + name + "' (expected table, csv or json)");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_line(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << '\n';
}

void render_table(const Report& r, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [k, v] : r.summary) width = std::max(width, k.size());
  for (const auto& [k, v] : r.summary) out << k << std::string(width - k.size(), ' ') << "  " << v << '\n';
  for (const auto& t : r.tables) {
    out << "\n[" << t.name << "]\n";
    std::vector<std::size_t> w(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      w[c] = t.columns[c].size();
      for (const auto& row : t.rows) w[c] = std::max(w[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        out << (c ? "  " : "") << std::string(w[c] - cells[c].size(), ' ') << cells[c];
      out << '\n';
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  }
}

void render_csv(const Report& r, std::ostream& out) {
  out << "# summary\n";
  csv_line(out, {"key", "value"});
  for (const auto& [k, v] : r.summary) csv_line(out, {k, v});
  for (const auto& t : r.tables) {
    out << "\n# " << t.name << '\n';
    csv_line(out, t.columns);
    for (const auto& row : t.rows) csv_line(out, row);
  }
}

void render_json(const Report& r, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["command"] = r.command;
  doc["summary"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.summary) doc["summary"][k] = v;
  doc["tables"] = nlohmann::ordered_json::object();
  for (const auto& t : r.tables) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj;
      for (std::size_t c = 0; c < t.columns.size(); ++c) obj[t.columns[c]] = row[c];
      rows.push_back(obj);
    }
    doc["tables"][t.name] = rows;
  }
  doc["warnings"] = r.warnings;
  out << doc.dump(2) << '\n';
}

}  // namespace

void render(const Report& r, Format f, std::ostream& out) {
  switch (f) {
    case Format::Table: render_table(r, out); break;
    case Format::Csv: render_csv(r, out); break;
    case Format::Json: render_json(r, out); break;
  }
}

}  // namespace weilcensus::cli
