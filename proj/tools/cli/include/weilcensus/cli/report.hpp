#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace weilcensus::cli {

enum class Format { Table, Csv, Json };

Format parse_format(const std::string& name);

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Command output: ordered key/value summary plus named tables. All values
/// are strings so integers of any size survive every format unchanged.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> summary;
  std::vector<Table> tables;
  std::vector<std::string> warnings;

  void add(std::string key, std::string value) { summary.emplace_back(std::move(key), std::move(value)); }
};

void render(const Report& r, Format f, std::ostream& out);

}  // namespace weilcensus::cli
