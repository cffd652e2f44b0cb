#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "weilcensus/dihedral_curves.hpp"
#include "weilcensus/twist_count.hpp"

namespace weilcensus::cli {

using Json = nlohmann::json;

/// Parsing context: in strict mode unknown keys are errors, otherwise they
/// are collected as warnings.
class ConfigReader {
 public:
  explicit ConfigReader(bool strict) : strict_(strict) {}

  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  // Throws ContractError naming the first key not in `allowed`.
  void check_keys(const Json& obj, const std::vector<std::string>& allowed, const std::string& where);

  BigInt integer(const Json& v, const std::string& where) const;
  std::uint64_t small(const Json& v, const std::string& where) const;
  std::vector<BigInt> integers(const Json& v, const std::string& where) const;
  IntPolynomial polynomial(const Json& v, const std::string& where) const;

  WeilPolynomial weil(const Json& v, const std::string& where);
  CurveSpec curve(const Json& v, const std::string& where);
  DihedralCensusInput census(const Json& doc, const EnumerationOptions& opt);
  std::optional<TwoTorsionModule> two_torsion(const Json& doc, const WeilPolynomial& base);
  DihedralDatum datum(const Json& v, const std::string& where);

 private:
  bool strict_;
  std::vector<std::string> warnings_;
};

Json load_json_file(const std::string& path);

// One integer per line; blank lines and lines starting with '#' are skipped.
std::vector<Rational> load_sequence_file(const std::string& path);

}  // namespace weilcensus::cli
