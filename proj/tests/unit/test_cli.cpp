#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "weilcensus/cli/commands.hpp"
#include "weilcensus/cli/config.hpp"

namespace fs = std::filesystem;
using weilcensus::cli::run;

namespace {

const std::string kConfigs = WEILCENSUS_CONFIG_DIR;

struct Outcome {
  int code;
  std::string out, err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "weil-census");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "weilcensus_cli_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

const std::string kSynthetic = R"("curve": {"q": 2, "genus": 2, "ch": [4, -4, 4, -2, 1]})";
const std::string kBeta = R"({"label": "b", "n_beta": 1, "e_beta": 2, "cover_ch": [8, 0, 4, 0, 2, 0, 1]})";

}  // namespace

TEST(CliZeta, EllipticPrintsWeilPolynomial) {
  const auto r = cli({"zeta", kConfigs + "/zeta_elliptic_f2.json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("T^2 + 2"), std::string::npos);
}

TEST(CliZeta, CountsOnlyGenusTwo) {
  const auto r = cli({"zeta", kConfigs + "/zeta_genus2_counts.json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("T^4 + 3*T^3 + 7*T^2 + 9*T + 9"), std::string::npos);
}

TEST(CliZeta, InvalidCountsExitTwoWithViolations) {
  const auto p = write_temp("bad_counts.json", R"({"curve": {"q": 2, "genus": 1, "counts": [6]}})");
  const auto r = cli({"zeta", p});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliZeta, EnumerationCapFlag) {
  // above the cap the brute-force column is skipped; below q nothing can be derived
  const auto r = cli({"--format", "csv", "--enum-cap", "4", "zeta", kConfigs + "/zeta_elliptic_f2.json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\n2,9,9,9,PASS\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\n3,9,9,-,PASS\n"), std::string::npos) << r.out;
  EXPECT_EQ(cli({"--enum-cap", "1", "zeta", kConfigs + "/zeta_elliptic_f2.json"}).code, 2);
}

TEST(CliTorsion, ShippedConfigPasses) {
  const auto r = cli({"--format", "csv", "torsion", kConfigs + "/torsion_elliptic_f2.json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("h_ell,2"), std::string::npos);
  EXPECT_NE(r.out.find("empirical_j_ell,0"), std::string::npos);
  EXPECT_NE(r.out.find("result,PASS"), std::string::npos);
}

TEST(CliTorsion, EllEqualToPExitTwo) {
  const auto r = cli({"--ell", "2", "torsion", kConfigs + "/torsion_elliptic_f2.json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ell must differ from p"), std::string::npos);
}

TEST(CliTorsion, GenusZeroTriviallyPasses) {
  const auto p = write_temp("g0.json", R"({"weil": {"q": 3, "ch": [1]}, "ell": 5, "n_max": 10})");
  const auto r = cli({"--format", "csv", "torsion", p});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("result,PASS"), std::string::npos);
}

TEST(CliDihedral, ShippedConfigRowTwo) {
  const auto r = cli({"--format", "csv", "dihedral", kConfigs + "/dihedral_synthetic_genus2.json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\n2,1,0,90,10,9,2\n"), std::string::npos) << r.out;
}

TEST(CliDihedral, EBetaThreeExitTwo) {
  std::string beta = kBeta;
  beta.replace(beta.find("\"e_beta\": 2"), 11, "\"e_beta\": 3");
  const auto p = write_temp("e3.json", "{" + kSynthetic + R"(, "betas": [)" + beta + "]}");
  EXPECT_EQ(cli({"dihedral", p}).code, 2);
}

TEST(CliDihedral, EmptyBetasAllZero) {
  const auto p = write_temp("empty.json", "{" + kSynthetic + R"(, "betas": [], "ell": 3, "n_max": 6})");
  const auto r = cli({"--format", "json", "dihedral", p});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto doc = weilcensus::cli::Json::parse(r.out);
  const auto& rows = doc.at("tables").at("census");
  ASSERT_EQ(rows.size(), 6u);
  for (const auto& row : rows) {
    EXPECT_EQ(row.at("T_dihedral_ell_adic"), "0");
    EXPECT_EQ(row.at("T_dihedral_mod_ell"), "0");
  }
}

TEST(CliTwistcount, ShippedConfigAgrees) {
  const auto r = cli({"--format", "csv", "twistcount", kConfigs + "/twistcount_examples.json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("formula_equals_oracle,PASS"), std::string::npos);
}

TEST(CliTwistcount, InconsistentDatumExitTwo) {
  const auto p = write_temp("bad_datum.json",
                            R"({"data": [{"label": "x", "orders": [5], "action": [[-1]], "m_order": 4}]})");
  EXPECT_EQ(cli({"twistcount", p}).code, 2);
}

TEST(CliRecfit, EllipticSequence) {
  const auto r = cli({"--format", "csv", "recfit", kConfigs + "/recfit_elliptic_counts.txt"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("min_poly,X^4 - 3*X^3 + 4*X^2 - 6*X + 4"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("prefix_determinacy,PASS"), std::string::npos);
}

TEST(CliRecfit, DrinfeldShape) {
  const auto r = cli({"--format", "csv", "recfit", kConfigs + "/recfit_lefschetz_shape.txt", "--q", "2", "--g", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("drinfeld_shape,true"), std::string::npos);
}

TEST(CliConfig, StrictRejectsUnknownKeys) {
  const auto p = write_temp("unknown.json", R"({"weil": {"q": 2, "ch": [2, 0, 1]}, "ell": 3, "colour": "blue"})");
  EXPECT_EQ(cli({"--strict", "torsion", p}).code, 2);
  const auto lenient = cli({"torsion", p});
  EXPECT_EQ(lenient.code, 0) << lenient.err;
  EXPECT_NE((lenient.out + lenient.err).find("colour"), std::string::npos);
}

TEST(CliConfig, MalformedInputsExitTwo) {
  EXPECT_EQ(cli({"zeta", write_temp("broken.json", "{ not json")}).code, 2);
  EXPECT_EQ(cli({"zeta", "/nonexistent/config.json"}).code, 2);
  EXPECT_EQ(cli({"zeta", write_temp("float.json", R"({"curve": {"q": 2.5, "genus": 1, "counts": [3]}})")}).code, 2);
  EXPECT_EQ(cli({"--format", "xml", "zeta", kConfigs + "/zeta_elliptic_f2.json"}).code, 2);
  EXPECT_NE(cli({}).code, 0);
}

TEST(CliConfig, BigIntegersAsStrings) {
  const auto p = write_temp("bigq.json", R"({"weil": {"q": "2", "ch": ["2", "0", "1"]}, "ell": "3", "n_max": 6})");
  EXPECT_EQ(cli({"torsion", p}).code, 0);
}

TEST(CliDeterminism, ByteIdenticalOutputs) {
  for (const auto& fmt : {"table", "csv", "json"}) {
    for (const auto& [cmd, file] : std::vector<std::pair<std::string, std::string>>{
             {"twistcount", "twistcount_examples.json"}, {"dihedral", "dihedral_synthetic_genus2.json"},
             {"zeta", "zeta_genus2_f3.json"}}) {
      const auto a = cli({"--format", fmt, "--seed", "7", cmd, kConfigs + "/" + file});
      const auto b = cli({"--format", fmt, "--seed", "7", cmd, kConfigs + "/" + file});
      EXPECT_EQ(a.code, 0);
      EXPECT_EQ(a.out, b.out);
    }
  }
}

TEST(CliDeterminism, SeedChangesRandomData) {
  const auto a = cli({"--format", "csv", "--seed", "1", "twistcount", kConfigs + "/twistcount_examples.json"});
  const auto b = cli({"--format", "csv", "--seed", "2", "twistcount", kConfigs + "/twistcount_examples.json"});
  EXPECT_NE(a.out, b.out);
}
