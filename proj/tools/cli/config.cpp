#include "weilcensus/cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "weilcensus/errors.hpp"

namespace weilcensus::cli {

void ConfigReader::check_keys(const Json& obj, const std::vector<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ContractError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!key.empty() && key[0] == '_') continue;  // annotations
    if (std::find(allowed.begin(), allowed.end(), key) != allowed.end()) continue;
    const std::string msg = where + ": unknown key '" + key + "'";
    if (strict_) throw ContractError(msg);
    warnings_.push_back(msg);
  }
}

BigInt ConfigReader::integer(const Json& v, const std::string& where) const {
  if (v.is_number_integer()) return BigInt(v.dump());
  if (v.is_string()) {
    try {
      return parse_integer(v.get<std::string>());
    } catch (const std::exception&) {
      throw ContractError(where + ": '" + v.get<std::string>() + "' is not an integer");
    }
  }
  throw ContractError(where + ": expected an integer (number or decimal string)");
}

std::uint64_t ConfigReader::small(const Json& v, const std::string& where) const {
  const BigInt x = integer(v, where);
  if (x < 0 || !x.fits_ulong_p()) throw ContractError(where + ": expected a nonnegative 64-bit integer");
  return x.get_ui();
}

std::vector<BigInt> ConfigReader::integers(const Json& v, const std::string& where) const {
  if (!v.is_array()) throw ContractError(where + ": expected an array of integers");
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(integer(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

IntPolynomial ConfigReader::polynomial(const Json& v, const std::string& where) const {
  return IntPolynomial(integers(v, where));
}

WeilPolynomial ConfigReader::weil(const Json& v, const std::string& where) {
  check_keys(v, {"q", "ch"}, where);
  if (!v.contains("q") || !v.contains("ch")) throw ContractError(where + ": needs 'q' and 'ch'");
  return WeilPolynomial::validate(integer(v["q"], where + ".q"), polynomial(v["ch"], where + ".ch"));
}

CurveSpec ConfigReader::curve(const Json& v, const std::string& where) {
  check_keys(v, {"q", "genus", "weierstrass", "hyperelliptic", "counts", "l_polynomial", "ch"}, where);
  if (!v.contains("q")) throw ContractError(where + ": needs 'q'");
  CurveSpec c;
  c.q = integer(v["q"], where + ".q");
  if (v.contains("genus")) c.genus = static_cast<unsigned>(small(v["genus"], where + ".genus"));
  auto coeffs = [&](const Json& arr, const std::string& w) {
    std::vector<std::uint64_t> out;
    for (const auto& x : integers(arr, w)) {
      if (x < 0 || x >= c.q) throw ContractError(w + ": coefficients must be field elements in [0, q)");
      out.push_back(x.get_ui());
    }
    return out;
  };
  if (v.contains("weierstrass")) {
    const auto a = coeffs(v["weierstrass"], where + ".weierstrass");
    if (a.size() != 5) throw ContractError(where + ".weierstrass: expected [a1, a2, a3, a4, a6]");
    WeierstrassModel w;
    std::copy(a.begin(), a.end(), w.a.begin());
    c.weierstrass = w;
  }
  if (v.contains("hyperelliptic")) {
    const Json& h = v["hyperelliptic"];
    check_keys(h, {"f", "h"}, where + ".hyperelliptic");
    if (!h.contains("f")) throw ContractError(where + ".hyperelliptic: needs 'f'");
    HyperellipticModel m;
    m.f = coeffs(h["f"], where + ".hyperelliptic.f");
    if (h.contains("h")) m.h = coeffs(h["h"], where + ".hyperelliptic.h");
    c.hyperelliptic = m;
  }
  if (v.contains("counts")) c.point_counts = integers(v["counts"], where + ".counts");
  if (v.contains("l_polynomial")) c.l_polynomial = polynomial(v["l_polynomial"], where + ".l_polynomial");
  if (v.contains("ch")) c.weil_polynomial = polynomial(v["ch"], where + ".ch");
  return c;
}

DihedralCensusInput ConfigReader::census(const Json& doc, const EnumerationOptions& opt) {
  if (!doc.contains("curve")) throw ContractError("census: needs 'curve'");
  ZetaData base = zeta_data(curve(doc["curve"], "curve"), opt);
  std::vector<BetaRecord> betas;
  if (doc.contains("betas")) {
    if (!doc["betas"].is_array()) throw ContractError("betas: expected an array");
    for (std::size_t i = 0; i < doc["betas"].size(); ++i) {
      const Json& b = doc["betas"][i];
      const std::string w = "betas[" + std::to_string(i) + "]";
      check_keys(b, {"label", "n_beta", "e_beta", "cover_ch"}, w);
      for (const char* key : {"n_beta", "e_beta", "cover_ch"})
        if (!b.contains(key)) throw ContractError(w + ": needs '" + std::string(key) + "'");
      const std::uint64_t n_beta = small(b["n_beta"], w + ".n_beta");
      if (n_beta < 1) throw ContractError(w + ".n_beta: must be >= 1");
      const std::uint64_t e_beta = small(b["e_beta"], w + ".e_beta");
      if (e_beta != 1 && e_beta != 2) throw ContractError(w + ".e_beta: must be 1 or 2");
      betas.push_back(BetaRecord{b.contains("label") ? b["label"].get<std::string>() : "beta" + std::to_string(i + 1),
                                 n_beta, static_cast<unsigned>(e_beta),
                                 WeilPolynomial::validate(power(base.q, static_cast<unsigned long>(n_beta)),
                                                          polynomial(b["cover_ch"], w + ".cover_ch"))});
    }
  }
  return DihedralCensusInput::make(std::move(base), std::move(betas));
}

std::optional<TwoTorsionModule> ConfigReader::two_torsion(const Json& doc, const WeilPolynomial& base) {
  if (!doc.contains("two_torsion")) return std::nullopt;
  const Json& t = doc["two_torsion"];
  if (!t.is_array()) throw ContractError("two_torsion: expected an array of polynomials over F_2");
  std::vector<FpPoly> factors;
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::uint64_t> c;
    for (const auto& x : integers(t[i], "two_torsion[" + std::to_string(i) + "]")) {
      if (x != 0 && x != 1) throw ContractError("two_torsion: coefficients must be 0 or 1");
      c.push_back(x.get_ui());
    }
    factors.emplace_back(2, c);
  }
  return TwoTorsionModule::make(base, std::move(factors));
}

DihedralDatum ConfigReader::datum(const Json& v, const std::string& where) {
  check_keys(v, {"label", "orders", "action", "m_order", "comm_hab", "e"}, where);
  for (const char* key : {"orders", "action", "m_order"})
    if (!v.contains(key)) throw ContractError(where + ": needs '" + std::string(key) + "'");
  std::vector<std::uint64_t> orders;
  for (const auto& x : integers(v["orders"], where + ".orders")) {
    if (x < 1 || !x.fits_ulong_p()) throw ContractError(where + ".orders: entries must be positive");
    orders.push_back(x.get_ui());
  }
  const std::size_t k = orders.size();
  const Json& a = v["action"];
  if (!a.is_array() || a.size() != k) throw ContractError(where + ".action: expected a " + std::to_string(k) + "x" +
                                                          std::to_string(k) + " matrix (list of rows)");
  IntMatrix action(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto row = integers(a[i], where + ".action[" + std::to_string(i) + "]");
    if (row.size() != k) throw ContractError(where + ".action: row " + std::to_string(i) + " has the wrong length");
    for (std::size_t j = 0; j < k; ++j) action(i, j) = row[j];
  }
  const auto presented = InvolutionModule::from_presentation(orders, action);
  std::vector<GroupElement> comm;
  if (v.contains("comm_hab")) {
    if (!v["comm_hab"].is_array()) throw ContractError(where + ".comm_hab: expected a list of elements");
    for (std::size_t i = 0; i < v["comm_hab"].size(); ++i) {
      const auto x = integers(v["comm_hab"][i], where + ".comm_hab[" + std::to_string(i) + "]");
      if (x.size() != k) throw ContractError(where + ".comm_hab: element has the wrong number of coordinates");
      comm.push_back(presented.map(x));
    }
  } else {
    const auto& m = presented.module;
    comm = commutators(m, subgroup_image(m, IntMatrix::identity(m.rank()))).generators;
  }
  std::optional<unsigned> e;
  if (v.contains("e")) e = static_cast<unsigned>(small(v["e"], where + ".e"));
  return DihedralDatum::make(presented.module, integer(v["m_order"], where + ".m_order"), std::move(comm), e);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open config file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ContractError("config file '" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<Rational> load_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open sequence file '" + path + "'");
  std::vector<Rational> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    try {
      out.emplace_back(parse_integer(line.substr(first, last - first + 1)));
    } catch (const std::exception&) {
      throw ContractError(path + ":" + std::to_string(lineno) + ": not an integer");
    }
  }
  return out;
}

}  // namespace weilcensus::cli
