#ifndef ORBITCLASS_CLASSIFIER_HPP
#define ORBITCLASS_CLASSIFIER_HPP

// Verdicts on the eight statements for an F-split group and a prime p:
//   (1) p good            (2) p very good        (3) p does not divide kappa_v
//   (4) p does not divide rho_v                  (5) all nilpotent orbits separable
//   (6) regular nilpotent orbit separable        (7) finitely many nilpotent orbits
//   (8) Howe's conjecture holds
// For split groups (5) = (6) = (7) = (1)+(3)+(4) and (8) = (1)+(3).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitclass/error.hpp"
#include "orbitclass/intlinalg.hpp"
#include "orbitclass/root_datum.hpp"
#include "orbitclass/root_system.hpp"

namespace orbitclass {

struct ClassificationReport {
  std::string group_label;
  std::int64_t p = 0;
  bool s1_good = false;
  bool s2_very_good = false;
  bool s3_p_not_div_kappa = false;
  bool s4_p_not_div_rho = false;
  bool s5_all_separable = false;
  bool s6_regular_separable = false;
  bool s7_finitely_many_orbits = false;
  bool s8_howe_holds = false;
  Integer kappa_v;
  Integer rho_v;
  std::set<int> bad_primes;
  std::vector<Integer> exponents;

  /// Statement (k), 1-based.
  bool statement(int k) const {
    switch (k) {
      case 1: return s1_good;
      case 2: return s2_very_good;
      case 3: return s3_p_not_div_kappa;
      case 4: return s4_p_not_div_rho;
      case 5: return s5_all_separable;
      case 6: return s6_regular_separable;
      case 7: return s7_finitely_many_orbits;
      case 8: return s8_howe_holds;
    }
    throw InvalidArgument("statement index must be 1..8");
  }

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

inline ClassificationReport classify(const RootDatum& rd, std::int64_t p) {
  require_prime(p);
  const RootSystem& rs = rd.root_system();
  ClassificationReport r;
  r.group_label = rd.label();
  r.p = p;
  r.kappa_v = kappa_v(rd);
  r.rho_v = rho_v(rd);
  r.bad_primes = bad_primes(rs);
  if (rd.semisimple_rank() > 0) r.exponents = regular_orbit_exponents(rd);

  r.s1_good = is_good(rs, p);
  r.s2_very_good = is_very_good(rs, p);
  r.s3_p_not_div_kappa = r.kappa_v % p != 0;
  r.s4_p_not_div_rho = r.rho_v % p != 0;
  const bool separable = r.s1_good && r.s3_p_not_div_kappa && r.s4_p_not_div_rho;
  r.s5_all_separable = separable;
  r.s6_regular_separable = separable;
  r.s7_finitely_many_orbits = separable;
  r.s8_howe_holds = r.s1_good && r.s3_p_not_div_kappa;
  return r;
}

// ---------------------------------------------------------------------------
// Intro table

struct SampleRange {
  int lo = 2;
  int hi = 9;
};

/// Parses "LO..HI" (both inclusive, 1 <= LO <= HI).
inline SampleRange parse_sample_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw ParseError("expected LO..HI", 0);
  auto number = [&](std::size_t from, std::size_t to) {
    if (from == to) throw ParseError("expected a number", from);
    int v = 0;
    for (std::size_t i = from; i < to; ++i) {
      if (text[i] < '0' || text[i] > '9') throw ParseError("expected a digit", i);
      v = v * 10 + (text[i] - '0');
      if (v > 1000) throw ParseError("sample bound too large", from);
    }
    return v;
  };
  SampleRange r{number(0, dots), number(dots + 2, text.size())};
  if (r.lo < 1 || r.lo > r.hi) throw ParseError("empty or invalid sample range", 0);
  return r;
}

inline const std::vector<std::int64_t>& table_primes() {
  static const std::vector<std::int64_t> primes{2, 3, 5, 7};
  return primes;
}

struct IntroTableRow {
  std::string group_label;
  std::string bad_primes;  // "-" or "2,3"
  std::string kappa_v;     // "1", "2" or "n"
  std::string rho_v;
  std::string nHwC;        // "-", "p|n" or an explicit prime list
  std::string INO;
  std::string sampled;     // e.g. "n=2..9; p in {2,3,5,7}"
};

namespace detail {

inline std::string join_primes(const std::set<std::int64_t>& s) {
  if (s.empty()) return "-";
  std::string out;
  for (auto p : s) out += (out.empty() ? "" : ",") + std::to_string(p);
  return out;
}

// One concrete group of a row: n -> datum.
struct Sample {
  int n;
  RootDatum datum;
};

// Collapses the per-n observations into the row's symbolic descriptor.
inline std::string integer_descriptor(const std::vector<Sample>& samples,
                                      const std::function<Integer(const RootDatum&)>& f,
                                      bool symbolic) {
  std::optional<Integer> constant;
  bool is_constant = true, equals_n = symbolic;
  for (const auto& s : samples) {
    const Integer v = f(s.datum);
    if (!constant) constant = v;
    if (v != *constant) is_constant = false;
    if (v != s.n) equals_n = false;
  }
  if (is_constant && constant) return constant->str();
  if (equals_n) return "n";
  return "irregular";
}

inline std::string prime_set_descriptor(const std::vector<Sample>& samples,
                                        const std::function<bool(const RootDatum&, std::int64_t)>& fails,
                                        bool symbolic) {
  std::optional<std::set<std::int64_t>> constant;
  bool is_constant = true, divides_n = symbolic;
  for (const auto& s : samples) {
    std::set<std::int64_t> set, div;
    for (auto p : table_primes()) {
      if (fails(s.datum, p)) set.insert(p);
      if (s.n % p == 0) div.insert(p);
    }
    if (!constant) constant = set;
    if (set != *constant) is_constant = false;
    if (set != div) divides_n = false;
  }
  if (is_constant && constant) return join_primes(*constant);
  if (divides_n) return "p|n";
  return "irregular";
}

}  // namespace detail

/// The nine rows GL_n, SL_n, PGL_n, SO_{2n+1}, SO_{2n}, Sp_{2n}, F_4, G_2,
/// E_8. Symbolic columns come from sampling n over `range` (clamped to the
/// values where the family has the stated type: n >= 2 for SO_{2n+1} and
/// Sp_{2n}, n >= 4 for SO_{2n}) and p over {2,3,5,7}.
inline std::vector<IntroTableRow> intro_table(SampleRange range = {}) {
  struct RowFamily {
    std::string label;
    bool symbolic;
    int min_n;
    std::function<StandardGroupSpec(int)> make;
  };
  auto classical = [](GroupFamily f, int scale, int offset) {
    return [=](int n) { return StandardGroupSpec{f, scale * n + offset, {}}; };
  };
  auto exceptional = [](RootSystemType t) {
    return [=](int) { return StandardGroupSpec{GroupFamily::Adjoint, 0, t}; };
  };
  const std::vector<RowFamily> families{
      {"GL_n", true, 1, classical(GroupFamily::GL, 1, 0)},
      {"SL_n", true, 2, classical(GroupFamily::SL, 1, 0)},
      {"PGL_n", true, 2, classical(GroupFamily::PGL, 1, 0)},
      {"SO_{2n+1}", true, 2, classical(GroupFamily::SOOdd, 2, 1)},
      {"SO_{2n}", true, 4, classical(GroupFamily::SOEven, 2, 0)},
      {"Sp_{2n}", true, 2, classical(GroupFamily::Sp, 2, 0)},
      {"F_4", false, 0, exceptional({Family::F, 4})},
      {"G_2", false, 0, exceptional({Family::G, 2})},
      {"E_8", false, 0, exceptional({Family::E, 8})},
  };

  std::vector<IntroTableRow> rows;
  for (const auto& fam : families) {
    std::vector<detail::Sample> samples;
    std::string sampled;
    if (fam.symbolic) {
      const int lo = std::max(range.lo, fam.min_n);
      for (int n = lo; n <= range.hi; ++n) samples.push_back({n, standard_datum(fam.make(n))});
      sampled = "n=" + std::to_string(lo) + ".." + std::to_string(range.hi) + "; ";
    } else {
      samples.push_back({0, standard_datum(fam.make(0))});
    }
    sampled += "p in {2,3,5,7}";
    if (samples.empty()) {
      throw InvalidArgument("sample range " + std::to_string(range.lo) + ".." +
                            std::to_string(range.hi) + " is empty for " + fam.label);
    }

    std::optional<std::set<int>> bad;
    bool bad_constant = true;
    for (const auto& s : samples) {
      auto b = bad_primes(s.datum.root_system());
      if (!bad) bad = b;
      if (b != *bad) bad_constant = false;
    }
    std::set<std::int64_t> bad64(bad->begin(), bad->end());

    IntroTableRow row;
    row.group_label = fam.label;
    row.bad_primes = bad_constant ? detail::join_primes(bad64) : "irregular";
    row.kappa_v = detail::integer_descriptor(samples, kappa_v, fam.symbolic);
    row.rho_v = detail::integer_descriptor(samples, rho_v, fam.symbolic);
    row.nHwC = detail::prime_set_descriptor(
        samples, [](const RootDatum& d, std::int64_t p) { return !classify(d, p).s8_howe_holds; },
        fam.symbolic);
    row.INO = detail::prime_set_descriptor(
        samples,
        [](const RootDatum& d, std::int64_t p) { return !classify(d, p).s7_finitely_many_orbits; },
        fam.symbolic);
    row.sampled = sampled;
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Implication audit

struct AuditViolation {
  std::string group_label;
  std::int64_t p = 0;
  std::string rule;
};

struct AuditWitness {
  std::string non_implication;  // e.g. "(1)+(4) does not imply (3)"
  std::string group_label;
  std::int64_t p = 0;
};

struct AuditReport {
  std::size_t checked = 0;
  std::vector<AuditViolation> violations;
  std::vector<AuditWitness> witnesses;

  bool ok() const noexcept { return violations.empty(); }
  bool has_witness(const std::string& non_implication) const {
    for (const auto& w : witnesses)
      if (w.non_implication == non_implication) return true;
    return false;
  }
};

inline const std::vector<std::string>& non_implications() {
  static const std::vector<std::string> names{
      "(1)+(3) does not imply (4)",
      "(1)+(3)+(4) does not imply (2)",
      "(1)+(4) does not imply (3)",
      "(3)+(4) does not imply (1)",
  };
  return names;
}

/// Checks, over the corpus, the general implications (2) => (1)+(3)+(4) and
/// p | kappa_v => p | det(Cartan), the split-case equivalences inside each
/// report, and collects the first witness of each non-implication.
inline AuditReport implication_audit(const std::vector<std::pair<RootDatum, std::int64_t>>& corpus) {
  AuditReport audit;
  for (const auto& [rd, p] : corpus) {
    const ClassificationReport r = classify(rd, p);
    ++audit.checked;
    auto violate = [&](const std::string& rule) {
      audit.violations.push_back({rd.label(), p, rule});
    };
    if (r.s2_very_good && !(r.s1_good && r.s3_p_not_div_kappa && r.s4_p_not_div_rho))
      violate("(2) implies (1)+(3)+(4)");
    if (!r.s3_p_not_div_kappa && cartan_determinant(rd.root_system()) % p != 0)
      violate("p | kappa_v implies p | det(Cartan)");
    const bool s134 = r.s1_good && r.s3_p_not_div_kappa && r.s4_p_not_div_rho;
    if (r.s5_all_separable != s134 || r.s6_regular_separable != s134 ||
        r.s7_finitely_many_orbits != s134)
      violate("(5) = (6) = (7) = (1)+(3)+(4)");
    if (r.s8_howe_holds != (r.s1_good && r.s3_p_not_div_kappa)) violate("(8) = (1)+(3)");

    auto witness = [&](std::size_t k, bool holds) {
      if (holds && !audit.has_witness(non_implications()[k]))
        audit.witnesses.push_back({non_implications()[k], rd.label(), p});
    };
    witness(0, r.s1_good && r.s3_p_not_div_kappa && !r.s4_p_not_div_rho);
    witness(1, s134 && !r.s2_very_good);
    witness(2, r.s1_good && r.s4_p_not_div_rho && !r.s3_p_not_div_kappa);
    witness(3, r.s3_p_not_div_kappa && r.s4_p_not_div_rho && !r.s1_good);
  }
  return audit;
}

}  // namespace orbitclass

#endif  // ORBITCLASS_CLASSIFIER_HPP
