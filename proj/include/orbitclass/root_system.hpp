#ifndef ORBITCLASS_ROOT_SYSTEM_HPP
#define ORBITCLASS_ROOT_SYSTEM_HPP

// Reduced finite root systems (products of A_n ... G_2), positive roots as
// simple-root coefficient vectors, Cartan matrices and prime classification.
//
// Cartan convention used throughout the library:
//   cartan(i, j) = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)
// Nodes follow Bourbaki numbering within each component.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitclass/error.hpp"
#include "orbitclass/intlinalg.hpp"

namespace orbitclass {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct RootSystemType {
  Family family = Family::A;
  int rank = 1;

  bool valid() const noexcept {
    switch (family) {
      case Family::A: return rank >= 1;
      case Family::B:
      case Family::C: return rank >= 2;
      case Family::D: return rank >= 3;
      case Family::E: return rank >= 6 && rank <= 8;
      case Family::F: return rank == 4;
      case Family::G: return rank == 2;
    }
    return false;
  }

  void validate() const {
    if (!valid()) {
      throw InvalidArgument("invalid rank " + std::to_string(rank) +
                            " for family " + static_cast<char>(family));
    }
  }

  bool simply_laced() const noexcept {
    return family == Family::A || family == Family::D || family == Family::E;
  }

  std::string name() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
  }

  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

/// Coefficients of a root in the basis of simple roots.
using Root = std::vector<int>;

inline int height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

namespace detail {

// Cartan matrix of one irreducible type, Bourbaki numbering, 0-based.
inline std::vector<std::vector<int>> cartan_of(const RootSystemType& t) {
  t.validate();
  const int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[2][1] = -2;  // alpha_3 short
      break;
    case Family::G:
      link(0, 1);
      c[0][1] = -3;  // alpha_1 short
      break;
  }
  return c;
}

}  // namespace detail

/// Root system of a product of irreducible types. Immutable once built.
class RootSystem {
 public:
  RootSystem() = default;

  explicit RootSystem(std::vector<RootSystemType> components)
      : components_(std::move(components)) {
    for (const auto& t : components_) {
      t.validate();
      offsets_.push_back(rank_);
      rank_ += static_cast<std::size_t>(t.rank);
    }
    cartan_.assign(rank_, std::vector<int>(rank_, 0));
    for (std::size_t k = 0; k < components_.size(); ++k) {
      const auto block = detail::cartan_of(components_[k]);
      for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = 0; j < block.size(); ++j)
          cartan_[offsets_[k] + i][offsets_[k] + j] = block[i][j];
    }
    generate_positive_roots();
  }

  const std::vector<RootSystemType>& components() const noexcept { return components_; }
  /// First node index of each component.
  const std::vector<std::size_t>& component_offsets() const noexcept { return offsets_; }
  std::size_t rank() const noexcept { return rank_; }

  int cartan_entry(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  IntMatrix cartan() const {
    IntMatrix m(rank_, rank_);
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) m(i, j) = cartan_[i][j];
    return m;
  }

  /// Dynkin diagram edges (i < j).
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = i + 1; j < rank_; ++j)
        if (cartan_[i][j] != 0) e.emplace_back(i, j);
    return e;
  }

  Root simple_root(std::size_t i) const {
    Root r(rank_, 0);
    r[i] = 1;
    return r;
  }
  std::vector<Root> simple_roots() const {
    std::vector<Root> s;
    for (std::size_t i = 0; i < rank_; ++i) s.push_back(simple_root(i));
    return s;
  }

  /// Sorted by height, then by descending coefficient vector; layer 1
  /// lists alpha_1, alpha_2, ... in node order.
  const std::vector<Root>& positive_roots() const noexcept { return positive_; }

  std::optional<std::size_t> index_of(const Root& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool is_positive_root(const Root& r) const { return index_.count(r) != 0; }

  int max_height() const noexcept {
    return positive_.empty() ? 0 : height(positive_.back());
  }

  /// <beta, alpha_i^vee>
  int pairing_with_coroot(const Root& beta, std::size_t i) const {
    int s = 0;
    for (std::size_t j = 0; j < rank_; ++j) s += beta[j] * cartan_[i][j];
    return s;
  }

  /// Type string such as "E8" or "A3xB2"; empty system prints as "".
  std::string label() const {
    std::string s;
    for (std::size_t k = 0; k < components_.size(); ++k) {
      if (k) s += 'x';
      s += components_[k].name();
    }
    return s;
  }

 private:
  // Height induction: beta + alpha_i is a root iff the alpha_i-string
  // through beta extends upward, i.e. r - <beta, alpha_i^vee> > 0 where r
  // is how far the string extends downward.
  void generate_positive_roots() {
    std::set<Root> known;
    std::vector<Root> layer = simple_roots();
    for (const auto& r : layer) known.insert(r);
    while (!layer.empty()) {
      std::set<Root> next;
      for (const Root& beta : layer) {
        for (std::size_t i = 0; i < rank_; ++i) {
          int down = 0;
          Root probe = beta;
          for (;;) {
            if (probe[i] == 0) break;
            --probe[i];
            if (!known.count(probe)) break;
            ++down;
          }
          if (down - pairing_with_coroot(beta, i) > 0) {
            Root up = beta;
            ++up[i];
            next.insert(up);
          }
        }
      }
      layer.assign(next.begin(), next.end());
      known.insert(layer.begin(), layer.end());
    }
    positive_.assign(known.begin(), known.end());
    std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
      const int ha = height(a), hb = height(b);
      if (ha != hb) return ha < hb;
      return a > b;
    });
    for (std::size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = k;
  }

  std::vector<RootSystemType> components_;
  std::vector<std::size_t> offsets_;
  std::size_t rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> positive_;
  std::map<Root, std::size_t> index_;
};

inline RootSystem build_root_system(std::vector<RootSystemType> types) {
  return RootSystem(std::move(types));
}

/// Positive roots grouped by height.
inline std::map<int, std::vector<Root>> layers_by_height(const RootSystem& rs) {
  std::map<int, std::vector<Root>> layers;
  for (const Root& r : rs.positive_roots()) layers[height(r)].push_back(r);
  return layers;
}

inline Integer cartan_determinant(const RootSystem& rs) { return determinant(rs.cartan()); }

/// D_3 is A_3 with another numbering and is classified as such.
inline bool is_type_a(const RootSystemType& t) {
  return t.family == Family::A || (t.family == Family::D && t.rank == 3);
}

inline std::set<int> bad_primes(const RootSystemType& t) {
  std::set<int> bad;
  if (!is_type_a(t)) bad.insert(2);
  if (t.family == Family::E || t.family == Family::F || t.family == Family::G) bad.insert(3);
  if (t.family == Family::E && t.rank == 8) bad.insert(5);
  return bad;
}

inline std::set<int> bad_primes(const RootSystem& rs) {
  std::set<int> bad;
  for (const auto& t : rs.components()) {
    auto b = bad_primes(t);
    bad.insert(b.begin(), b.end());
  }
  return bad;
}

inline bool is_good(const RootSystem& rs, std::int64_t p) {
  require_prime(p);
  for (int b : bad_primes(rs))
    if (b == p) return false;
  return true;
}

inline bool is_very_good(const RootSystem& rs, std::int64_t p) {
  if (!is_good(rs, p)) return false;
  for (const auto& t : rs.components())
    if (is_type_a(t) && (t.rank + 1) % p == 0) return false;
  return true;
}

/// Parses "E8", "A3xB2", ... Components are separated by 'x'.
inline std::vector<RootSystemType> parse_root_system_types(std::string_view text) {
  std::vector<RootSystemType> types;
  std::size_t pos = 0;
  if (text.empty()) throw ParseError("empty root system type", 0);
  for (;;) {
    const std::size_t start = pos;
    if (pos >= text.size()) throw ParseError("expected a family letter", pos);
    char letter = text[pos];
    if (letter >= 'a' && letter <= 'g') letter = static_cast<char>(letter - 'a' + 'A');
    if (letter < 'A' || letter > 'G') throw ParseError("expected a family letter A-G", pos);
    ++pos;
    const std::size_t digits = pos;
    int rank = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      rank = rank * 10 + (text[pos] - '0');
      if (rank > 1000) throw ParseError("rank too large", digits);
      ++pos;
    }
    if (pos == digits) throw ParseError("expected a rank", pos);
    RootSystemType t{static_cast<Family>(letter), rank};
    if (!t.valid()) throw ParseError("invalid rank for family " + std::string(1, letter), start);
    types.push_back(t);
    if (pos == text.size()) break;
    if (text[pos] != 'x') throw ParseError("expected 'x' between components", pos);
    ++pos;
  }
  return types;
}

inline RootSystem parse_root_system(std::string_view text) {
  return RootSystem(parse_root_system_types(text));
}

}  // namespace orbitclass

#endif  // ORBITCLASS_ROOT_SYSTEM_HPP
