#ifndef ORBITCLASS_ROOT_DATUM_HPP
#define ORBITCLASS_ROOT_DATUM_HPP

// Split root data (X^*, R, X_*, R^vee) of the standard groups and their
// products, and the invariants read off them: Phi, Phi^vee, kappa_v, rho_v.
//
// Phi : X_*(T) -> Hom(Z Delta, Z) has matrix entries <gamma_j, alpha_i>,
// which in the coordinates used here are exactly the rows of root_coords.
// Likewise Phi^vee is coroot_coords. Hom(Z R, Z) is identified with
// Hom(Z Delta, Z).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitclass/error.hpp"
#include "orbitclass/intlinalg.hpp"
#include "orbitclass/root_system.hpp"

namespace orbitclass {

class RootDatum {
 public:
  /// root_coords: simple roots in a basis of X^*; coroot_coords: simple
  /// coroots in the dual basis of X_*. Both |Delta| x lattice_rank.
  RootDatum(std::string label, RootSystem rs, IntMatrix root_coords,
            IntMatrix coroot_coords, std::size_t lattice_rank)
      : label_(std::move(label)),
        rs_(std::move(rs)),
        roots_(std::move(root_coords)),
        coroots_(std::move(coroot_coords)),
        lattice_rank_(lattice_rank) {
    validate();
  }

  const std::string& label() const noexcept { return label_; }
  const RootSystem& root_system() const noexcept { return rs_; }
  const IntMatrix& root_coords() const noexcept { return roots_; }
  const IntMatrix& coroot_coords() const noexcept { return coroots_; }
  std::size_t lattice_rank() const noexcept { return lattice_rank_; }
  std::size_t semisimple_rank() const noexcept { return rs_.rank(); }
  bool is_semisimple() const noexcept { return lattice_rank_ == rs_.rank(); }

 private:
  void validate() const {
    const std::size_t n = rs_.rank();
    if (roots_.rows() != n || coroots_.rows() != n || roots_.cols() != lattice_rank_ ||
        coroots_.cols() != lattice_rank_) {
      throw InvalidArgument("root datum " + label_ + ": coordinate shapes do not match");
    }
    if (roots_ * coroots_.transposed() != rs_.cartan().transposed()) {
      throw InvalidArgument("root datum " + label_ +
                            ": root/coroot pairing is not the Cartan matrix");
    }
    if (n > 0 && (determinant(roots_ * roots_.transposed()) == 0 ||
                  determinant(coroots_ * coroots_.transposed()) == 0)) {
      throw InvalidArgument("root datum " + label_ + ": simple roots are not independent");
    }
  }

  std::string label_;
  RootSystem rs_;
  IntMatrix roots_;
  IntMatrix coroots_;
  std::size_t lattice_rank_ = 0;
};

enum class GroupFamily { GL, SL, PGL, SOOdd, SOEven, Sp, SimplyConnected, Adjoint, Torus };

/// `size` is the matrix size for classical families (SO_7 -> 7), the rank
/// for Torus, and unused for SimplyConnected/Adjoint (see `type`).
struct StandardGroupSpec {
  GroupFamily family = GroupFamily::GL;
  int size = 1;
  RootSystemType type{};

  std::string label() const {
    switch (family) {
      case GroupFamily::GL: return "GL_" + std::to_string(size);
      case GroupFamily::SL: return "SL_" + std::to_string(size);
      case GroupFamily::PGL: return "PGL_" + std::to_string(size);
      case GroupFamily::SOOdd:
      case GroupFamily::SOEven: return "SO_" + std::to_string(size);
      case GroupFamily::Sp: return "Sp_" + std::to_string(size);
      case GroupFamily::SimplyConnected: return type.name() + "_sc";
      case GroupFamily::Adjoint: return type.name() + "_ad";
      case GroupFamily::Torus: return "T_" + std::to_string(size);
    }
    return "?";
  }

  void validate() const {
    auto fail = [&](const char* why) { throw InvalidArgument(label() + ": " + why); };
    switch (family) {
      case GroupFamily::GL:
        if (size < 1) fail("size must be at least 1");
        break;
      case GroupFamily::SL:
      case GroupFamily::PGL:
        if (size < 2) fail("size must be at least 2");
        break;
      case GroupFamily::SOOdd:
        if (size < 3 || size % 2 == 0) fail("size must be odd and at least 3");
        break;
      case GroupFamily::SOEven:
        if (size < 4 || size % 2 != 0) fail("size must be even and at least 4");
        break;
      case GroupFamily::Sp:
        if (size < 2 || size % 2 != 0) fail("size must be even and at least 2");
        break;
      case GroupFamily::SimplyConnected:
      case GroupFamily::Adjoint:
        type.validate();
        break;
      case GroupFamily::Torus:
        if (size < 0) fail("rank must be nonnegative");
        break;
    }
  }
};

namespace detail {

// Rows e_i - e_{i+1} for i < count, in a lattice of the given rank.
inline void fill_chain(IntMatrix& m, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    m(i, i) = 1;
    m(i, i + 1) = -1;
  }
}

// Type A_1 stands in for the degenerate B_1 / C_1 / D_2 halves.
inline std::vector<RootSystemType> classical_types(Family family, int n) {
  if (n == 1) return {RootSystemType{Family::A, 1}};
  if (family == Family::D && n == 2) return {{Family::A, 1}, {Family::A, 1}};
  return {RootSystemType{family, n}};
}

}  // namespace detail

inline RootDatum standard_datum(const StandardGroupSpec& spec) {
  spec.validate();
  const std::string label = spec.label();
  switch (spec.family) {
    case GroupFamily::GL: {
      const std::size_t n = static_cast<std::size_t>(spec.size);
      std::vector<RootSystemType> types;
      if (n >= 2) types.push_back({Family::A, static_cast<int>(n - 1)});
      IntMatrix roots(n - 1, n);
      detail::fill_chain(roots, n - 1);
      return RootDatum(label, RootSystem(types), roots, roots, n);
    }
    case GroupFamily::SL:
    case GroupFamily::PGL: {
      StandardGroupSpec inner;
      inner.family = spec.family == GroupFamily::SL ? GroupFamily::SimplyConnected
                                                    : GroupFamily::Adjoint;
      inner.type = {Family::A, spec.size - 1};
      const RootDatum d = standard_datum(inner);
      return RootDatum(label, d.root_system(), d.root_coords(), d.coroot_coords(),
                       d.lattice_rank());
    }
    case GroupFamily::SimplyConnected:
    case GroupFamily::Adjoint: {
      // X_* spanned by the simple coroots (sc) or X^* spanned by the simple
      // roots (ad); the other side is the transposed Cartan pairing.
      RootSystem rs({spec.type});
      const std::size_t n = rs.rank();
      if (spec.family == GroupFamily::SimplyConnected) {
        return RootDatum(label, rs, rs.cartan().transposed(), IntMatrix::identity(n), n);
      }
      return RootDatum(label, rs, IntMatrix::identity(n), rs.cartan(), n);
    }
    case GroupFamily::SOOdd:
    case GroupFamily::Sp: {
      // X^* = Z^n; last simple root e_n (SO) or 2e_n (Sp).
      const bool orthogonal = spec.family == GroupFamily::SOOdd;
      const std::size_t n = static_cast<std::size_t>(spec.size / 2);
      IntMatrix roots(n, n), coroots(n, n);
      detail::fill_chain(roots, n - 1);
      detail::fill_chain(coroots, n - 1);
      roots(n - 1, n - 1) = orthogonal ? 1 : 2;
      coroots(n - 1, n - 1) = orthogonal ? 2 : 1;
      RootSystem rs(detail::classical_types(orthogonal ? Family::B : Family::C,
                                            static_cast<int>(n)));
      return RootDatum(label, rs, roots, coroots, n);
    }
    case GroupFamily::SOEven: {
      const std::size_t n = static_cast<std::size_t>(spec.size / 2);
      IntMatrix roots(n, n);
      detail::fill_chain(roots, n - 1);
      roots(n - 1, n - 2) = 1;
      roots(n - 1, n - 1) = 1;
      RootSystem rs(detail::classical_types(Family::D, static_cast<int>(n)));
      return RootDatum(label, rs, roots, roots, n);
    }
    case GroupFamily::Torus: {
      const std::size_t r = static_cast<std::size_t>(spec.size);
      return RootDatum(label, RootSystem{}, IntMatrix(0, r), IntMatrix(0, r), r);
    }
  }
  throw InvalidArgument("unknown group family");
}

/// Direct product: lattices, roots and coroots as block sums.
inline RootDatum product(const RootDatum& a, const RootDatum& b) {
  std::vector<RootSystemType> types = a.root_system().components();
  const auto& more = b.root_system().components();
  types.insert(types.end(), more.begin(), more.end());
  return RootDatum(a.label() + " x " + b.label(), RootSystem(types),
                   direct_sum(a.root_coords(), b.root_coords()),
                   direct_sum(a.coroot_coords(), b.coroot_coords()),
                   a.lattice_rank() + b.lattice_rank());
}

inline IntMatrix phi_matrix(const RootDatum& rd) { return rd.root_coords(); }
inline IntMatrix phi_vee_matrix(const RootDatum& rd) { return rd.coroot_coords(); }

/// Virtual number of components of the centre: |coker Phi|_tors.
inline Integer kappa_v(const RootDatum& rd) { return torsion_cokernel_order(phi_matrix(rd)); }

/// Virtual order of pi_1 of the derived group: |coker Phi^vee|_tors.
inline Integer rho_v(const RootDatum& rd) { return torsion_cokernel_order(phi_vee_matrix(rd)); }

/// Invariant factors d_1 | ... | d_|Delta| of Phi. Over a field of
/// characteristic p there are infinitely many regular nilpotent orbits
/// iff p divides the last one.
inline std::vector<Integer> regular_orbit_exponents(const RootDatum& rd) {
  if (rd.semisimple_rank() == 0) {
    throw InvalidArgument(rd.label() + " has no roots");
  }
  auto d = invariant_factors(phi_matrix(rd));
  d.resize(rd.semisimple_rank());
  return d;
}

/// Whether the H_alpha = d alpha^vee(1), alpha simple, are linearly
/// dependent in t = X_* (x) F_p.
inline bool coroots_dependent_mod_p(const RootDatum& rd, std::int64_t p) {
  return rank_mod_p(phi_vee_matrix(rd), p) < rd.semisimple_rank();
}

// ---------------------------------------------------------------------------
// Group spec grammar
//
//   spec    := factor ( 'x' factor )*
//   factor  := 'GL:' N | 'SL:' N | 'PGL:' N | 'SOodd:' N | 'SOeven:' N
//            | 'Sp:' N | 'sc:' TYPE | 'ad:' TYPE | 'T:' N
//   TYPE    := letter A-G followed by a rank, e.g. E6
//
// Example: "SL:2xPGL:3xT:1".

inline std::vector<StandardGroupSpec> parse_group_spec(std::string_view text) {
  struct Keyword {
    std::string_view word;
    GroupFamily family;
  };
  static constexpr Keyword keywords[] = {
      {"GL", GroupFamily::GL},         {"SL", GroupFamily::SL},
      {"PGL", GroupFamily::PGL},       {"SOodd", GroupFamily::SOOdd},
      {"SOeven", GroupFamily::SOEven}, {"Sp", GroupFamily::Sp},
      {"sc", GroupFamily::SimplyConnected}, {"ad", GroupFamily::Adjoint},
      {"T", GroupFamily::Torus},
  };

  std::vector<StandardGroupSpec> specs;
  std::size_t pos = 0;
  if (text.empty()) throw ParseError("empty group spec", 0);
  for (;;) {
    const std::size_t start = pos;
    const std::size_t colon = text.find(':', pos);
    if (colon == std::string_view::npos) throw ParseError("expected 'KIND:ARG'", pos);
    const std::string_view word = text.substr(pos, colon - pos);
    std::optional<GroupFamily> family;
    for (const auto& k : keywords)
      if (k.word == word) family = k.family;
    if (!family) throw ParseError("unknown group kind '" + std::string(word) + "'", start);
    pos = colon + 1;

    StandardGroupSpec spec;
    spec.family = *family;
    if (spec.family == GroupFamily::SimplyConnected || spec.family == GroupFamily::Adjoint) {
      const std::size_t arg = pos;
      if (pos >= text.size()) throw ParseError("expected a root system type", pos);
      char letter = text[pos];
      if (letter < 'A' || letter > 'G') throw ParseError("expected a family letter A-G", pos);
      ++pos;
      int rank = 0;
      const std::size_t digits = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9' && rank < 1000)
        rank = rank * 10 + (text[pos++] - '0');
      if (pos == digits) throw ParseError("expected a rank", pos);
      spec.type = {static_cast<Family>(letter), rank};
      if (!spec.type.valid()) throw ParseError("invalid rank for family", arg);
    } else {
      int n = 0;
      const std::size_t digits = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9' && n < 100000)
        n = n * 10 + (text[pos++] - '0');
      if (pos == digits) throw ParseError("expected a size", pos);
      spec.size = n;
      try {
        spec.validate();
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), digits);
      }
    }
    specs.push_back(spec);
    if (pos == text.size()) break;
    if (text[pos] != 'x') throw ParseError("expected 'x' between factors", pos);
    ++pos;
  }
  return specs;
}

inline RootDatum datum_from_specs(const std::vector<StandardGroupSpec>& specs) {
  if (specs.empty()) throw InvalidArgument("empty group spec");
  RootDatum d = standard_datum(specs.front());
  for (std::size_t i = 1; i < specs.size(); ++i) d = product(d, standard_datum(specs[i]));
  return d;
}

inline RootDatum parse_group(std::string_view text) {
  return datum_from_specs(parse_group_spec(text));
}

}  // namespace orbitclass

#endif  // ORBITCLASS_ROOT_DATUM_HPP
