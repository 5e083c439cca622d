#ifndef ORBITCLASS_VERIFIER_HPP
#define ORBITCLASS_VERIFIER_HPP

// Mechanical checks of the bracket-matrix computations for adjoint simple
// types at bad primes, plus the small finite identities for PGL_n, the
// companion block and the torus part of ad(X).
//
// For an adjoint simple type and a bad prime p the claim checked is
//   (1) [X, .] : n_i -> n_{i+1} is onto mod p for 1 <= i <= p-1,
//   (2) dim n_{p+1} / [X, n_p] = 1 mod p,
//   (3) |Delta| = dim n_1 = dim n_i + 1 for 2 <= i <= p+1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbitclass/chevalley.hpp"
#include "orbitclass/error.hpp"
#include "orbitclass/intlinalg.hpp"
#include "orbitclass/root_datum.hpp"
#include "orbitclass/root_system.hpp"

namespace orbitclass {

enum class AppendixStatus { Pass, Fail, NotApplicable };

inline const char* to_string(AppendixStatus s) {
  switch (s) {
    case AppendixStatus::Pass: return "pass";
    case AppendixStatus::Fail: return "fail";
    case AppendixStatus::NotApplicable: return "not applicable";
  }
  return "?";
}

struct LayerRecord {
  int height = 0;
  std::size_t dim = 0;
  /// Invariant factors and F_p-rank of [X, .] : n_h -> n_{h+1}; empty / 0
  /// at the top height.
  std::vector<Integer> snf;
  std::size_t rank_mod_p = 0;
};

struct AppendixReport {
  std::string type_label;
  std::int64_t p = 0;
  AppendixStatus status = AppendixStatus::NotApplicable;
  std::string reason;  // set when not applicable
  std::vector<LayerRecord> layers;
  bool surjective_below_p = false;
  std::size_t coker_dim_at_p = 0;
  bool dim_identity = false;

  bool applicable() const noexcept { return status != AppendixStatus::NotApplicable; }
  bool passed() const noexcept { return status == AppendixStatus::Pass; }
};

inline AppendixReport verify_appendix_theorem(const GradedNilAlgebra& alg, std::int64_t p) {
  require_prime(p);
  AppendixReport report;
  report.type_label = alg.type().name();
  report.p = p;

  const RootSystem rs({alg.type()});
  if (is_good(rs, p)) {
    report.reason = std::to_string(p) + " is good for " + report.type_label;
    return report;
  }
  const int top = alg.max_height();
  if (top < p + 1) {
    report.reason = "no roots of height " + std::to_string(p + 1) + " in " + report.type_label;
    return report;
  }

  for (int h = 1; h <= top; ++h) {
    LayerRecord rec;
    rec.height = h;
    rec.dim = alg.layer_dim(h);
    if (h < top) {
      const IntMatrix m = alg.ad_X_matrix(h);
      rec.snf = invariant_factors(m);
      rec.rank_mod_p = rank_mod_p(m, p);
    }
    report.layers.push_back(std::move(rec));
  }
  auto at = [&](int h) -> const LayerRecord& { return report.layers[static_cast<std::size_t>(h - 1)]; };

  report.surjective_below_p = true;
  for (int h = 1; h <= p - 1; ++h)
    if (at(h).rank_mod_p != at(h + 1).dim) report.surjective_below_p = false;
  report.coker_dim_at_p = at(p + 1).dim - at(p).rank_mod_p;
  report.dim_identity = at(1).dim == rs.rank();
  for (int i = 2; i <= p + 1; ++i)
    if (at(i).dim + 1 != at(1).dim) report.dim_identity = false;

  report.status = report.surjective_below_p && report.coker_dim_at_p == 1 && report.dim_identity
                      ? AppendixStatus::Pass
                      : AppendixStatus::Fail;
  return report;
}

inline AppendixReport verify_appendix_theorem(const RootSystemType& type, std::int64_t p) {
  require_prime(p);
  if (type.family == Family::A) {
    type.validate();
    AppendixReport report;
    report.type_label = type.name();
    report.p = p;
    report.reason = "type A has no bad primes";
    return report;
  }
  return verify_appendix_theorem(graded_algebra(type), p);
}

/// [X, .] : n_h -> n_{h+1} onto mod p at every height.
inline bool surjective_at_all_heights(const GradedNilAlgebra& alg, std::int64_t p) {
  for (int h = 1; h < alg.max_height(); ++h)
    if (rank_mod_p(alg.ad_X_matrix(h), p) != alg.layer_dim(h + 1)) return false;
  return true;
}

struct SweepCell {
  RootSystemType type;
  std::int64_t p;
};

/// Every (adjoint simple type of rank <= 8, bad prime) pair outside type A.
inline std::vector<SweepCell> appendix_sweep_cells() {
  std::vector<SweepCell> cells;
  for (int n = 2; n <= 8; ++n) cells.push_back({{Family::B, n}, 2});
  for (int n = 2; n <= 8; ++n) cells.push_back({{Family::C, n}, 2});
  for (int n = 4; n <= 8; ++n) cells.push_back({{Family::D, n}, 2});
  for (int n = 6; n <= 8; ++n) {
    cells.push_back({{Family::E, n}, 2});
    cells.push_back({{Family::E, n}, 3});
  }
  cells.push_back({{Family::E, 8}, 5});
  cells.push_back({{Family::F, 4}, 2});
  cells.push_back({{Family::F, 4}, 3});
  cells.push_back({{Family::G, 2}, 2});
  cells.push_back({{Family::G, 2}, 3});
  return cells;
}

/// Runs `cells` in order, building each graded algebra once.
inline std::vector<AppendixReport> appendix_sweep(const std::vector<SweepCell>& cells) {
  std::map<std::string, GradedNilAlgebra> cache;
  std::vector<AppendixReport> reports;
  for (const auto& cell : cells) {
    if (cell.type.family == Family::A) {
      reports.push_back(verify_appendix_theorem(cell.type, cell.p));
      continue;
    }
    auto it = cache.find(cell.type.name());
    if (it == cache.end()) it = cache.emplace(cell.type.name(), graded_algebra(cell.type)).first;
    reports.push_back(verify_appendix_theorem(it->second, cell.p));
  }
  return reports;
}

inline std::vector<AppendixReport> appendix_sweep() { return appendix_sweep(appendix_sweep_cells()); }

// ---------------------------------------------------------------------------
// PGL_n

/// sum_{i=1}^{n-1} i * H_{e_i - e_{i+1}} in the coordinates of X_*(T) for
/// PGL_n. In gl_n this is the commutator [x, x'] of the regular nilpotent x
/// with the subdiagonal matrix x' = (1, 2, ..., n-1), i.e. diag(1, ..., 1,
/// 1-n), which is the scalar matrix modulo n.
inline std::vector<Integer> pgl_relation_vector(int n) {
  const RootDatum pgl = standard_datum({GroupFamily::PGL, n, {}});
  const IntMatrix& h = pgl.coroot_coords();
  std::vector<Integer> sum(h.cols(), 0);
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) sum[j] += Integer(i + 1) * h(i, j);
  return sum;
}

inline bool pgl_relation_vanishes_mod(int n, std::int64_t p) {
  require_prime(p);
  for (const Integer& v : pgl_relation_vector(n))
    if (v % p != 0) return false;
  return true;
}

/// The H_alpha of PGL_n satisfy the dependency above mod p; requires p | n.
inline bool verify_pgl_relation(int n, std::int64_t p) {
  require_prime(p);
  if (n % p != 0) {
    throw InvalidArgument(std::to_string(p) + " does not divide " + std::to_string(n));
  }
  return pgl_relation_vanishes_mod(n, p);
}

// ---------------------------------------------------------------------------
// Companion block

/// Polynomial over F_p, coefficient i of x^i.
using PolyModP = std::vector<std::int64_t>;

namespace detail {

inline PolyModP poly_trim(PolyModP a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline PolyModP poly_mul(const PolyModP& a, const PolyModP& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyModP c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_trim(std::move(c));
}

inline PolyModP poly_add(const PolyModP& a, const PolyModP& b, std::int64_t p) {
  PolyModP c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + b[i]) % p;
  return poly_trim(std::move(c));
}

using PolyMatrix = std::vector<std::vector<PolyModP>>;

inline PolyMatrix poly_matmul(const PolyMatrix& a, const PolyMatrix& b, std::int64_t p) {
  const std::size_t n = a.size();
  PolyMatrix c(n, std::vector<PolyModP>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].empty()) continue;
      for (std::size_t j = 0; j < n; ++j)
        c[i][j] = poly_add(c[i][j], poly_mul(a[i][k], b[k][j], p), p);
    }
  return c;
}

}  // namespace detail

/// p x p block with 1 on the subdiagonal and x in the top-right corner.
inline detail::PolyMatrix companion_block(std::int64_t p) {
  const std::size_t n = static_cast<std::size_t>(p);
  detail::PolyMatrix m(n, std::vector<PolyModP>(n));
  m[0][n - 1] = {0, 1};
  for (std::size_t i = 0; i + 1 < n; ++i) m[i + 1][i] = {1};
  return m;
}

/// M_x^p = x I over F_p[x].
inline bool verify_companion_block(std::int64_t p) {
  require_prime(p);
  if (p > 13) throw InvalidArgument("companion block check is limited to p <= 13");
  const auto m = companion_block(p);
  auto power = m;
  for (std::int64_t k = 1; k < p; ++k) power = detail::poly_matmul(power, m, p);
  const std::size_t n = static_cast<std::size_t>(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const PolyModP expected = i == j ? PolyModP{0, 1} : PolyModP{};
      if (power[i][j] != expected) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Torus part of ad(X)

inline const std::vector<std::int64_t>& phi_check_primes() {
  static const std::vector<std::int64_t> primes{2, 3, 5, 7};
  return primes;
}

/// [X, .] : t -> n_1 has the matrix of Phi, and loses rank mod p exactly
/// when p | kappa_v, for p in {2,3,5,7}.
inline bool verify_phi_bracket_identity(const RootDatum& rd) {
  const IntMatrix torus = torus_ad_X_matrix(rd);
  if (torus != phi_matrix(rd)) return false;
  const Integer kappa = kappa_v(rd);
  for (auto p : phi_check_primes()) {
    const bool drops = rank_mod_p(torus, p) < rd.semisimple_rank();
    if (drops != (kappa % p == 0)) return false;
  }
  return true;
}

}  // namespace orbitclass

#endif  // ORBITCLASS_VERIFIER_HPP
