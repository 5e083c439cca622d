#ifndef ORBITCLASS_CHEVALLEY_HPP
#define ORBITCLASS_CHEVALLEY_HPP

// Positive nilradical n = sum of g_alpha (alpha > 0) with explicit integer
// structure constants, graded by height, and the matrices of ad(X) for the
// regular nilpotent X = sum of E_alpha over simple alpha.
//
// Simply-laced types use the bi-additive sign function
//   f(i, j) = -1 if i, j adjacent and i < j;  1 if i = j;  0 otherwise,
//   [E_a, E_b] = (-1)^f(a, b) E_{a+b}  when a + b is a root.
// B_n, C_n, F_4 and G_2 are obtained as fixed points of a signed diagram
// automorphism of D_{n+1}, A_{2n-1}, E_6 and D_4 respectively.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orbitclass/error.hpp"
#include "orbitclass/intlinalg.hpp"
#include "orbitclass/root_datum.hpp"
#include "orbitclass/root_system.hpp"

namespace orbitclass {

/// Element of n in the basis {E_alpha}: positive-root index -> coefficient.
/// Zero coefficients are never stored.
using NilVector = std::map<std::size_t, long long>;

class SimplyLacedAlgebra {
 public:
  /// Builds the structure constants and verifies antisymmetry and the
  /// Jacobi identity on every triple of positive roots.
  explicit SimplyLacedAlgebra(RootSystem rs) : rs_(std::move(rs)) {
    for (const auto& t : rs_.components()) {
      if (!t.simply_laced()) {
        throw InvalidArgument("structure constants by sign function need an A/D/E system, got " +
                              t.name());
      }
    }
    const auto& roots = rs_.positive_roots();
    n_ = roots.size();
    const std::size_t r = rs_.rank();

    sign_fn_.assign(r, std::vector<int>(r, 0));
    for (std::size_t i = 0; i < r; ++i) sign_fn_[i][i] = 1;
    for (auto [i, j] : rs_.edges()) sign_fn_[i][j] = -1;

    sum_.assign(n_ * n_, -1);
    constant_.assign(n_ * n_, 0);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        Root s = roots[a];
        for (std::size_t k = 0; k < r; ++k) s[k] += roots[b][k];
        auto idx = rs_.index_of(s);
        if (!idx) continue;
        sum_[a * n_ + b] = static_cast<long>(*idx);
        constant_[a * n_ + b] = sign_fn(roots[a], roots[b]) % 2 == 0 ? 1 : -1;
      }
    verify();
  }

  const RootSystem& root_system() const noexcept { return rs_; }
  std::size_t dimension() const noexcept { return n_; }

  /// f(i, j) on simple roots.
  int sign_fn(std::size_t i, std::size_t j) const { return sign_fn_[i][j]; }

  /// Bi-additive extension f(a, b) = sum_ij a_i b_j f(i, j).
  int sign_fn(const Root& a, const Root& b) const {
    int f = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) f += a[i] * b[j] * sign_fn_[i][j];
    }
    return f;
  }

  /// Index of alpha_a + alpha_b, if it is a positive root.
  std::optional<std::size_t> sum_index(std::size_t a, std::size_t b) const {
    const long s = sum_[a * n_ + b];
    if (s < 0) return std::nullopt;
    return static_cast<std::size_t>(s);
  }

  /// c(a, b) with [E_a, E_b] = c(a, b) E_{a+b}; 0 when a + b is not a root.
  int structure_constant(std::size_t a, std::size_t b) const { return constant_[a * n_ + b]; }

  int structure_constant(const Root& a, const Root& b) const {
    auto ia = rs_.index_of(a), ib = rs_.index_of(b);
    if (!ia || !ib) throw InvalidArgument("structure constant of a non-positive root");
    return structure_constant(*ia, *ib);
  }

  NilVector bracket(const NilVector& x, const NilVector& y) const {
    NilVector out;
    for (auto [a, ca] : x)
      for (auto [b, cb] : y) {
        const int c = structure_constant(a, b);
        if (c == 0) continue;
        auto& slot = out[*sum_index(a, b)];
        slot += ca * cb * c;
        if (slot == 0) out.erase(*sum_index(a, b));
      }
    return out;
  }

 private:
  void verify() const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (structure_constant(a, b) != -structure_constant(b, a)) {
          throw VerificationError("structure constants are not antisymmetric");
        }
    // [E_a,[E_b,E_g]] + [E_b,[E_g,E_a]] + [E_g,[E_a,E_b]] = 0
    auto term = [&](std::size_t x, std::size_t y, std::size_t z) {
      auto yz = sum_index(y, z);
      if (!yz) return 0;
      return structure_constant(y, z) * structure_constant(x, *yz);
    };
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        if (!sum_index(a, b)) continue;
        for (std::size_t g = 0; g < n_; ++g) {
          if (term(a, b, g) + term(b, g, a) + term(g, a, b) != 0) {
            throw VerificationError("Jacobi identity fails for " + rs_.label());
          }
        }
      }
  }

  RootSystem rs_;
  std::size_t n_ = 0;
  std::vector<std::vector<int>> sign_fn_;
  std::vector<long> sum_;
  std::vector<signed char> constant_;
};

inline std::shared_ptr<const SimplyLacedAlgebra> build_simply_laced(const RootSystem& rs) {
  return std::make_shared<const SimplyLacedAlgebra>(rs);
}

struct SignedRoot {
  std::size_t root = 0;
  int sign = 1;
};

/// Diagram automorphism sigma of a simply-laced algebra extended to n with
/// signs: sigma(E_alpha) = sign(alpha) E_{sigma(alpha)}.
class FoldingAutomorphism {
 public:
  /// `node_permutation[i]` is the image of simple node i. Generator signs
  /// start at +1; if the resulting map is not an automorphism of order
  /// ord(node_permutation), one generator per non-trivial node orbit is
  /// flipped until the checks pass.
  FoldingAutomorphism(std::shared_ptr<const SimplyLacedAlgebra> ambient,
                      std::vector<std::size_t> node_permutation)
      : ambient_(std::move(ambient)), perm_(std::move(node_permutation)) {
    const RootSystem& rs = ambient_->root_system();
    if (perm_.size() != rs.rank()) throw InvalidArgument("node permutation has wrong size");
    for (auto [i, j] : rs.edges()) {
      const auto a = std::min(perm_[i], perm_[j]), b = std::max(perm_[i], perm_[j]);
      if (rs.cartan_entry(a, b) == 0) {
        throw InvalidArgument("node permutation is not a Dynkin diagram automorphism");
      }
    }
    order_ = permutation_order();

    // Orbit leaders of the node permutation that are moved.
    std::vector<std::size_t> leaders;
    std::vector<bool> seen(perm_.size(), false);
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t k = i;
      std::size_t len = 0;
      do {
        seen[k] = true;
        k = perm_[k];
        ++len;
      } while (k != i);
      if (len > 1) leaders.push_back(i);
    }

    for (std::size_t mask = 0; mask < (std::size_t{1} << leaders.size()); ++mask) {
      std::vector<int> gen(perm_.size(), 1);
      for (std::size_t b = 0; b < leaders.size(); ++b)
        if (mask & (std::size_t{1} << b)) gen[leaders[b]] = -1;
      compute_action(gen);
      if (is_automorphism() && closes_up()) {
        generator_signs_ = gen;
        return;
      }
    }
    throw VerificationError("no generator signs make the diagram automorphism of " +
                            rs.label() + " a Lie algebra automorphism");
  }

  const SimplyLacedAlgebra& ambient() const noexcept { return *ambient_; }
  std::shared_ptr<const SimplyLacedAlgebra> ambient_ptr() const noexcept { return ambient_; }
  const std::vector<std::size_t>& node_permutation() const noexcept { return perm_; }
  int order() const noexcept { return order_; }
  const std::vector<int>& generator_signs() const noexcept { return generator_signs_; }
  const SignedRoot& image(std::size_t root) const { return action_[root]; }

  NilVector apply(const NilVector& v) const {
    NilVector out;
    for (auto [r, c] : v) out[action_[r].root] += c * action_[r].sign;
    return out;
  }

  /// sigma[E_a, E_b] = [sigma E_a, sigma E_b] on all positive pairs.
  bool is_automorphism() const {
    const std::size_t n = ambient_->dimension();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto s = ambient_->sum_index(a, b);
        if (!s) continue;
        const int lhs = ambient_->structure_constant(a, b) * action_[*s].sign;
        const int rhs = action_[a].sign * action_[b].sign *
                        ambient_->structure_constant(action_[a].root, action_[b].root);
        if (lhs != rhs || action_[*s].root != *ambient_->sum_index(action_[a].root,
                                                                  action_[b].root)) {
          return false;
        }
      }
    return true;
  }

  /// sigma^order is the identity on every basis vector, signs included.
  bool closes_up() const {
    for (std::size_t a = 0; a < action_.size(); ++a) {
      std::size_t r = a;
      int sign = 1;
      for (int k = 0; k < order_; ++k) {
        sign *= action_[r].sign;
        r = action_[r].root;
      }
      if (r != a || sign != 1) return false;
    }
    return true;
  }

 private:
  int permutation_order() const {
    int ord = 1;
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      int len = 1;
      for (std::size_t k = perm_[i]; k != i; k = perm_[k]) ++len;
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  // Along the canonical decomposition alpha = alpha_i + alpha' (i the
  // lowest node with alpha - alpha_i positive):
  //   E_alpha = c(i, alpha') [E_i, E_alpha'], so
  //   sign(alpha) = c(i, alpha') sign(alpha') c(sigma i, sigma alpha').
  void compute_action(const std::vector<int>& generator_signs) {
    const RootSystem& rs = ambient_->root_system();
    const auto& roots = rs.positive_roots();
    action_.assign(roots.size(), SignedRoot{});
    for (std::size_t a = 0; a < roots.size(); ++a) {
      Root image(rs.rank(), 0);
      for (std::size_t i = 0; i < rs.rank(); ++i) image[perm_[i]] = roots[a][i];
      action_[a].root = *rs.index_of(image);
      if (height(roots[a]) == 1) {
        const std::size_t node = static_cast<std::size_t>(
            std::find(roots[a].begin(), roots[a].end(), 1) - roots[a].begin());
        action_[a].sign = generator_signs[node];
        continue;
      }
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        if (roots[a][i] == 0) continue;
        Root rest = roots[a];
        --rest[i];
        auto ri = rs.index_of(rest);
        if (!ri) continue;
        const std::size_t si = *rs.index_of(rs.simple_root(i));
        action_[a].sign = ambient_->structure_constant(si, *ri) * action_[*ri].sign *
                          generator_signs[i] *
                          ambient_->structure_constant(action_[si].root, action_[*ri].root);
        break;
      }
    }
  }

  std::shared_ptr<const SimplyLacedAlgebra> ambient_;
  std::vector<std::size_t> perm_;
  int order_ = 1;
  std::vector<int> generator_signs_;
  std::vector<SignedRoot> action_;
};

namespace detail {

inline std::vector<std::size_t> fold_permutation(const RootSystemType& ambient,
                                                 const RootSystemType& target) {
  const std::size_t n = static_cast<std::size_t>(ambient.rank);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const int t = target.rank;
  if (target.family == Family::B && ambient.family == Family::D && ambient.rank == t + 1) {
    std::swap(perm[n - 2], perm[n - 1]);
  } else if (target.family == Family::C && ambient.family == Family::A &&
             ambient.rank == 2 * t - 1) {
    for (std::size_t i = 0; i < n; ++i) perm[i] = n - 1 - i;
  } else if (target.family == Family::G && ambient == RootSystemType{Family::D, 4}) {
    perm = {2, 1, 3, 0};
  } else if (target.family == Family::F && ambient == RootSystemType{Family::E, 6}) {
    perm = {5, 1, 4, 3, 2, 0};
  } else {
    throw InvalidArgument("no folding from " + ambient.name() + " to " + target.name());
  }
  return perm;
}

inline RootSystemType folding_ambient(const RootSystemType& target) {
  switch (target.family) {
    case Family::B: return {Family::D, target.rank + 1};
    case Family::C: return {Family::A, 2 * target.rank - 1};
    case Family::F: return {Family::E, 6};
    case Family::G: return {Family::D, 4};
    default: return target;
  }
}

}  // namespace detail

/// Supported pairs: (D_{n+1}, B_n), (A_{2n-1}, C_n), (D_4, G_2), (E_6, F_4).
inline FoldingAutomorphism build_folding(const RootSystemType& ambient,
                                         const RootSystemType& target) {
  ambient.validate();
  target.validate();
  auto perm = detail::fold_permutation(ambient, target);
  return FoldingAutomorphism(build_simply_laced(RootSystem({ambient})), std::move(perm));
}

struct NilLayer {
  int height = 0;
  std::vector<NilVector> basis;
  /// For each basis vector, the ambient root whose coefficient is +1 and
  /// which occurs in no other basis vector of the layer.
  std::vector<std::size_t> representatives;
};

enum class NilKind { Plain, Folded };

/// Height-graded positive nilradical of a simple adjoint type, possibly
/// realised inside a larger simply-laced algebra as sigma-fixed points.
class GradedNilAlgebra {
 public:
  GradedNilAlgebra(RootSystemType type, std::shared_ptr<const SimplyLacedAlgebra> ambient,
                   std::optional<FoldingAutomorphism> folding)
      : type_(type), ambient_(std::move(ambient)), folding_(std::move(folding)) {
    build_layers();
    const RootSystem& rs = ambient_->root_system();
    for (std::size_t i = 0; i < rs.rank(); ++i) x_[*rs.index_of(rs.simple_root(i))] = 1;
    if (folding_ && folding_->apply(x_) != x_) {
      throw VerificationError("X is not fixed by the folding of " + type_.name());
    }
  }

  NilKind kind() const noexcept { return folding_ ? NilKind::Folded : NilKind::Plain; }
  const RootSystemType& type() const noexcept { return type_; }
  const SimplyLacedAlgebra& ambient() const noexcept { return *ambient_; }
  const std::optional<FoldingAutomorphism>& folding() const noexcept { return folding_; }
  const std::vector<NilLayer>& layers() const noexcept { return layers_; }
  int max_height() const noexcept { return static_cast<int>(layers_.size()); }
  const NilVector& X() const noexcept { return x_; }

  const NilLayer& layer(int h) const {
    if (h < 1 || h > max_height()) {
      throw InvalidArgument("height " + std::to_string(h) + " out of range for " +
                            type_.name());
    }
    return layers_[static_cast<std::size_t>(h - 1)];
  }
  std::size_t layer_dim(int h) const { return layer(h).basis.size(); }

  std::size_t dimension() const {
    std::size_t d = 0;
    for (const auto& l : layers_) d += l.basis.size();
    return d;
  }

  NilVector ad_X(const NilVector& v) const { return ambient_->bracket(x_, v); }

  /// Coordinates of v in the basis of layer h; throws if v leaves the span.
  std::vector<long long> coordinates(const NilVector& v, int h) const {
    const NilLayer& l = layer(h);
    std::vector<long long> coords(l.basis.size(), 0);
    NilVector rebuilt;
    for (std::size_t k = 0; k < l.basis.size(); ++k) {
      auto it = v.find(l.representatives[k]);
      if (it == v.end()) continue;
      coords[k] = it->second;
      for (auto [r, c] : l.basis[k]) rebuilt[r] += coords[k] * c;
    }
    std::erase_if(rebuilt, [](const auto& e) { return e.second == 0; });
    if (rebuilt != v) {
      throw VerificationError("vector is not in the span of layer " + std::to_string(h) +
                              " of " + type_.name());
    }
    return coords;
  }

  /// Matrix of [X, .] : n_h -> n_{h+1}; rows index the target basis.
  IntMatrix ad_X_matrix(int h) const {
    if (h < 1 || h >= max_height()) {
      throw InvalidArgument("ad_X_matrix: height " + std::to_string(h) + " must lie in [1, " +
                            std::to_string(max_height() - 1) + "] for " + type_.name());
    }
    const NilLayer& src = layer(h);
    IntMatrix m(layer_dim(h + 1), src.basis.size());
    for (std::size_t j = 0; j < src.basis.size(); ++j) {
      const auto coords = coordinates(ad_X(src.basis[j]), h + 1);
      for (std::size_t i = 0; i < coords.size(); ++i) m(i, j) = coords[i];
    }
    return m;
  }

  /// Matrix of [X, .] : n -> n_{>=2}, i.e. all graded pieces stacked.
  IntMatrix stacked_ad_X_matrix() const {
    const std::size_t cols = dimension();
    const std::size_t rows = cols - (layers_.empty() ? 0 : layers_.front().basis.size());
    IntMatrix m(rows, cols);
    std::size_t row0 = 0, col0 = 0;
    for (int h = 1; h < max_height(); ++h) {
      const IntMatrix block = ad_X_matrix(h);
      for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) m(row0 + i, col0 + j) = block(i, j);
      col0 += block.cols();
      row0 += block.rows();
    }
    return m;
  }

  /// "+E[1,1,0,1] -E[0,1,1,1]" in ambient simple-root coordinates.
  std::string format(const NilVector& v) const {
    const auto& roots = ambient_->root_system().positive_roots();
    std::ostringstream os;
    bool first = true;
    for (auto [r, c] : v) {
      if (!first) os << ' ';
      first = false;
      os << (c < 0 ? '-' : '+');
      if (std::llabs(c) != 1) os << std::llabs(c);
      os << "E[";
      for (std::size_t k = 0; k < roots[r].size(); ++k) os << (k ? "," : "") << roots[r][k];
      os << ']';
    }
    return first ? "0" : os.str();
  }

 private:
  void build_layers() {
    const RootSystem& rs = ambient_->root_system();
    const auto& roots = rs.positive_roots();
    std::vector<bool> visited(roots.size(), false);
    for (std::size_t a = 0; a < roots.size(); ++a) {
      const int h = height(roots[a]);
      if (static_cast<int>(layers_.size()) < h) layers_.push_back(NilLayer{h, {}, {}});
      if (visited[a]) continue;
      NilVector v;
      if (!folding_) {
        v[a] = 1;
        visited[a] = true;
      } else {
        // Orbit sum; vanishes when the orbit closes up with sign -1.
        std::size_t r = a;
        long long sign = 1;
        do {
          visited[r] = true;
          v[r] += sign;
          sign *= folding_->image(r).sign;
          r = folding_->image(r).root;
        } while (r != a);
        if (sign != 1) continue;
      }
      layers_.back().basis.push_back(std::move(v));
      layers_.back().representatives.push_back(a);
    }

    const RootSystem target({type_});
    const auto expected = layers_by_height(target);
    bool ok = static_cast<int>(expected.size()) == static_cast<int>(layers_.size());
    for (const auto& [h, rts] : expected) {
      if (!ok) break;
      ok = layers_[static_cast<std::size_t>(h - 1)].basis.size() == rts.size();
    }
    if (!ok) {
      throw VerificationError("fixed layers of " + rs.label() +
                              " do not match the positive roots of " + type_.name());
    }
  }

  RootSystemType type_;
  std::shared_ptr<const SimplyLacedAlgebra> ambient_;
  std::optional<FoldingAutomorphism> folding_;
  std::vector<NilLayer> layers_;
  NilVector x_;
};

/// A/D/E: the plain algebra. B/C/F/G: fixed points of the folding of
/// D_{n+1}, A_{2n-1}, E_6, D_4.
inline GradedNilAlgebra graded_algebra(const RootSystemType& type) {
  type.validate();
  if (type.simply_laced()) {
    return GradedNilAlgebra(type, build_simply_laced(RootSystem({type})), std::nullopt);
  }
  const RootSystemType ambient = detail::folding_ambient(type);
  FoldingAutomorphism sigma = build_folding(ambient, type);
  auto amb = sigma.ambient_ptr();
  return GradedNilAlgebra(type, std::move(amb), std::move(sigma));
}

inline IntMatrix ad_X_matrix(const GradedNilAlgebra& alg, int h) { return alg.ad_X_matrix(h); }

/// Matrix of t -> n_1 recording how H = dY(1), Y running over the basis of
/// X_*(T), acts on X: [H, X] = sum_i <alpha_i, Y> E_i. Column j is Y_j.
inline IntMatrix torus_ad_X_matrix(const RootDatum& rd) {
  const IntMatrix& characters = rd.root_coords();
  const std::size_t r = rd.lattice_rank();
  IntMatrix m(rd.semisimple_rank(), r);
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Integer> cocharacter(r, 0);
    cocharacter[j] = 1;
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
      Integer eigenvalue = 0;
      for (std::size_t k = 0; k < r; ++k) eigenvalue += characters(i, k) * cocharacter[k];
      m(i, j) = eigenvalue;
    }
  }
  return m;
}

}  // namespace orbitclass

#endif  // ORBITCLASS_CHEVALLEY_HPP
