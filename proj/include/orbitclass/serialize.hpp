#ifndef ORBITCLASS_SERIALIZE_HPP
#define ORBITCLASS_SERIALIZE_HPP

// JSON, CSV and plain-text renderings of reports. JSON objects keep a
// fixed field order.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitclass/classifier.hpp"
#include "orbitclass/intlinalg.hpp"
#include "orbitclass/root_system.hpp"
#include "orbitclass/verifier.hpp"

namespace orbitclass {

using Json = nlohmann::ordered_json;

inline Json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

inline Json integers_to_json(const std::vector<Integer>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(integer_to_json(v));
  return a;
}

inline Json to_json(const ClassificationReport& r) {
  Json j;
  j["group_label"] = r.group_label;
  j["p"] = r.p;
  j["s1_good"] = r.s1_good;
  j["s2_very_good"] = r.s2_very_good;
  j["s3_p_not_div_kappa"] = r.s3_p_not_div_kappa;
  j["s4_p_not_div_rho"] = r.s4_p_not_div_rho;
  j["s5_all_separable"] = r.s5_all_separable;
  j["s6_regular_separable"] = r.s6_regular_separable;
  j["s7_finitely_many_orbits"] = r.s7_finitely_many_orbits;
  j["s8_howe_holds"] = r.s8_howe_holds;
  j["kappa_v"] = integer_to_json(r.kappa_v);
  j["rho_v"] = integer_to_json(r.rho_v);
  j["bad_primes"] = Json::array();
  for (int b : r.bad_primes) j["bad_primes"].push_back(b);
  j["exponents"] = integers_to_json(r.exponents);
  return j;
}

inline std::string to_text(const ClassificationReport& r) {
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  os << r.group_label << " at p = " << r.p << '\n';
  os << "  bad primes        : ";
  if (r.bad_primes.empty()) os << '-';
  bool first = true;
  for (int b : r.bad_primes) os << (first ? "" : ",") << b, first = false;
  os << '\n';
  os << "  kappa_v           : " << r.kappa_v << '\n';
  os << "  rho_v             : " << r.rho_v << '\n';
  os << "  exponents         : ";
  for (std::size_t i = 0; i < r.exponents.size(); ++i) os << (i ? " " : "") << r.exponents[i];
  if (r.exponents.empty()) os << '-';
  os << '\n';
  os << "  (1) p good                      : " << yes(r.s1_good) << '\n';
  os << "  (2) p very good                 : " << yes(r.s2_very_good) << '\n';
  os << "  (3) p does not divide kappa_v   : " << yes(r.s3_p_not_div_kappa) << '\n';
  os << "  (4) p does not divide rho_v     : " << yes(r.s4_p_not_div_rho) << '\n';
  os << "  (5) all nilpotent orbits separable : " << yes(r.s5_all_separable) << '\n';
  os << "  (6) regular orbit separable     : " << yes(r.s6_regular_separable) << '\n';
  os << "  (7) finitely many nilpotent orbits : " << yes(r.s7_finitely_many_orbits) << '\n';
  os << "  (8) Howe's conjecture holds     : " << yes(r.s8_howe_holds) << '\n';
  os << "note: verdicts assume the group is split over the local field; "
        "the non-split case is not decided.\n";
  return os.str();
}

// ---------------------------------------------------------------------------

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace detail

inline std::string intro_table_csv(const std::vector<IntroTableRow>& rows) {
  std::ostringstream os;
  os << "group,bad_p,kappa_v,rho_v,nHwC,INO,sampled\n";
  for (const auto& r : rows) {
    os << detail::csv_field(r.group_label) << ',' << detail::csv_field(r.bad_primes) << ','
       << detail::csv_field(r.kappa_v) << ',' << detail::csv_field(r.rho_v) << ','
       << detail::csv_field(r.nHwC) << ',' << detail::csv_field(r.INO) << ','
       << detail::csv_field(r.sampled) << '\n';
  }
  return os.str();
}

inline Json to_json(const std::vector<IntroTableRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["group"] = r.group_label;
    j["bad_p"] = r.bad_primes;
    j["kappa_v"] = r.kappa_v;
    j["rho_v"] = r.rho_v;
    j["nHwC"] = r.nHwC;
    j["INO"] = r.INO;
    j["sampled"] = r.sampled;
    a.push_back(std::move(j));
  }
  return a;
}

inline std::string intro_table_text(const std::vector<IntroTableRow>& rows) {
  std::vector<std::vector<std::string>> cells{{"G", "bad p", "kappa_v", "rho_v", "nHwC", "INO"}};
  for (const auto& r : rows)
    cells.push_back({r.group_label, r.bad_primes, r.kappa_v, r.rho_v, r.nHwC, r.INO});
  std::vector<std::size_t> width(6, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t c = 0; c < cells[i].size(); ++c) {
      os << cells[i][c];
      if (c + 1 < cells[i].size()) os << std::string(width[c] - cells[i][c].size() + 2, ' ');
    }
    os << '\n';
    if (i == 0) {
      std::size_t total = 0;
      for (auto w : width) total += w + 2;
      os << std::string(total - 2, '-') << '\n';
    }
  }
  if (!rows.empty()) os << "sampled: " << rows.front().sampled << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------

inline Json to_json(const AppendixReport& r) {
  Json j;
  j["type"] = r.type_label;
  j["p"] = r.p;
  j["status"] = to_string(r.status);
  if (!r.applicable()) {
    j["reason"] = r.reason;
    return j;
  }
  j["surjective_below_p"] = r.surjective_below_p;
  j["coker_dim_at_p"] = r.coker_dim_at_p;
  j["dim_identity"] = r.dim_identity;
  j["layers"] = Json::array();
  for (const auto& l : r.layers) {
    Json lj;
    lj["height"] = l.height;
    lj["dim"] = l.dim;
    lj["snf"] = integers_to_json(l.snf);
    lj["rank_mod_p"] = l.rank_mod_p;
    j["layers"].push_back(std::move(lj));
  }
  return j;
}

inline Json to_json(const std::vector<AppendixReport>& reports) {
  Json a = Json::array();
  for (const auto& r : reports) a.push_back(to_json(r));
  return a;
}

inline std::string appendix_text(const std::vector<AppendixReport>& reports) {
  auto mark = [](bool b) { return b ? "✓" : "✗"; };
  std::ostringstream os;
  os << "type  p  status          (1) onto<p  (2) coker=1  (3) dims  coker_dim\n";
  for (const auto& r : reports) {
    std::string type = r.type_label;
    type.resize(std::max<std::size_t>(type.size(), 4), ' ');
    os << type << "  " << r.p << "  ";
    if (!r.applicable()) {
      os << "not applicable  (" << r.reason << ")\n";
      continue;
    }
    std::string status = to_string(r.status);
    status.resize(14, ' ');
    os << status << "  " << mark(r.surjective_below_p) << "           "
       << mark(r.coker_dim_at_p == 1) << "            " << mark(r.dim_identity) << "         "
       << r.coker_dim_at_p << '\n';
  }
  return os.str();
}

}  // namespace orbitclass

#endif  // ORBITCLASS_SERIALIZE_HPP
