#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "weilcensus/cli/config.hpp"
#include "weilcensus/cli/report.hpp"

namespace weilcensus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitContract = 2;
inline constexpr int kExitTheorem = 3;

struct Options {
  std::optional<std::uint64_t> ell;
  std::optional<std::uint64_t> n_max;
  std::uint64_t enum_cap = kDefaultEnumerationCap;
  Format format = Format::Table;
  bool strict = false;
  std::uint64_t seed = 1;
  std::optional<std::string> q;  // recfit
  std::optional<unsigned> g;     // recfit
};

// Each command returns its report; `exit_code` is set to kExitTheorem when an
// internal consistency check fails.
struct CommandResult {
  Report report;
  int exit_code = kExitOk;
};

CommandResult cmd_zeta(const Json& doc, const Options& opt, ConfigReader& reader);
CommandResult cmd_torsion(const Json& doc, const Options& opt, ConfigReader& reader);
CommandResult cmd_dihedral(const Json& doc, const Options& opt, ConfigReader& reader);
CommandResult cmd_twistcount(const Json& doc, const Options& opt, ConfigReader& reader);
CommandResult cmd_recfit(const std::vector<Rational>& seq, const Options& opt);

// Full command line (args[0] is the program name). Exit codes: 0 success,
// 2 input or contract violation, 3 failed internal theorem check.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weilcensus::cli
