#ifndef ORBITCLASS_INTLINALG_HPP
#define ORBITCLASS_INTLINALG_HPP

// Exact integer linear algebra: Smith normal form with unimodular
// transforms, Bareiss determinants, rank over F_p, cokernel torsion.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "orbitclass/error.hpp"

namespace orbitclass {

using Integer = boost::multiprecision::cpp_int;

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

inline void require_prime(std::int64_t p) {
  if (!is_prime(p)) {
    throw InvalidArgument(std::to_string(p) + " is not a prime");
  }
}

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw InvalidArgument("ragged matrix initializer");
      }
      for (long long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(dst, j) += factor * (*this)(src, j);
  }
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t i = 0; i < rows_; ++i)
      (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw InvalidArgument("matrix product: inner dimensions differ");
    }
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  /// Bracket-of-rows literal, e.g. "[[1,1,0],[1,0,1]]".
  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) os << ',';
      os << '[';
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) os << ',';
        os << (*this)(i, j);
      }
      os << ']';
    }
    os << ']';
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Block-diagonal direct sum.
inline IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

/// U * source * V = diag(d) padded to the source shape.
struct SmithForm {
  std::vector<Integer> diag;  // min(rows, cols) entries, nonnegative
  IntMatrix U;
  IntMatrix V;
  std::size_t rows = 0;
  std::size_t cols = 0;

  IntMatrix diagonal_matrix() const {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
    return d;
  }
};

namespace detail {

// Position of the nonzero entry of least absolute value in the trailing
// submatrix starting at (t, t); {rows, cols} if it is all zero.
inline std::pair<std::size_t, std::size_t> min_abs_entry(const IntMatrix& a,
                                                         std::size_t t) {
  std::pair<std::size_t, std::size_t> best{a.rows(), a.cols()};
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (best.first == a.rows() || v < best_abs) {
        best = {i, j};
        best_abs = std::move(v);
        if (best_abs == 1) return best;
      }
    }
  return best;
}

}  // namespace detail

/// Smith normal form by pivoting on the entry of least absolute value.
/// Invariant factors come out nonnegative and divisibility-ordered with
/// zeros trailing; row signs are absorbed into U.
inline SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm sf;
  sf.rows = m.rows();
  sf.cols = m.cols();
  sf.U = IntMatrix::identity(m.rows());
  sf.V = IntMatrix::identity(m.cols());
  IntMatrix a = m;
  const std::size_t r = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < r; ++t) {
    for (;;) {
      auto [pi, pj] = detail::min_abs_entry(a, t);
      if (pi == a.rows()) break;  // trailing block is zero
      a.swap_rows(t, pi);
      sf.U.swap_rows(t, pi);
      a.swap_cols(t, pj);
      sf.V.swap_cols(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        a.add_row(i, t, -q);
        sf.U.add_row(i, t, -q);
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        a.add_col(j, t, -q);
        sf.V.add_col(j, t, -q);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (a(i, j) % a(t, t) != 0) {
            a.add_row(t, i, 1);
            sf.U.add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      sf.U.negate_row(t);
    }
  }

  sf.diag.reserve(r);
  for (std::size_t i = 0; i < r; ++i) sf.diag.push_back(a(i, i));
  return sf;
}

inline std::vector<Integer> invariant_factors(const IntMatrix& m) {
  return smith_normal_form(m).diag;
}

/// Order of the torsion subgroup of Z^rows / M Z^cols.
inline Integer torsion_cokernel_order(const IntMatrix& m) {
  Integer order = 1;
  for (const Integer& d : invariant_factors(m)) {
    if (d != 0) order *= d;
  }
  return order;
}

/// Fraction-free (Bareiss) elimination.
inline Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) {
    throw InvalidArgument("determinant of a non-square " +
                          std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Rank of M with entries reduced mod p, by Gaussian elimination over F_p.
inline std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p) {
  require_prime(p);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::int64_t> a(rows * cols);
  const Integer modulus = p;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Integer v = m(i, j) % modulus;
      if (v < 0) v += modulus;
      a[i * cols + j] = v.convert_to<std::int64_t>();
    }
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& {
    return a[i * cols + j];
  };
  auto inverse = [p](std::int64_t x) {
    std::int64_t result = 1, e = p - 2;
    x %= p;
    while (e > 0) {
      if (e & 1) result = static_cast<std::int64_t>(
                     static_cast<__int128>(result) * x % p);
      x = static_cast<std::int64_t>(static_cast<__int128>(x) * x % p);
      e >>= 1;
    }
    return result;
  };

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    const std::int64_t inv = inverse(at(rank, c));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (at(i, c) == 0) continue;
      const std::int64_t f = static_cast<std::int64_t>(
          static_cast<__int128>(at(i, c)) * inv % p);
      for (std::size_t j = c; j < cols; ++j) {
        std::int64_t v = static_cast<std::int64_t>(
            (at(i, j) - static_cast<__int128>(f) * at(rank, j)) % p);
        at(i, j) = v < 0 ? v + p : v;
      }
    }
    ++rank;
  }
  return rank;
}

/// Parses a bracket-of-rows literal such as "[[1,1,0],[1,0,1],[0,1,1]]".
/// Whitespace is ignored; "[]" is the 0x0 matrix.
inline IntMatrix parse_matrix_literal(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n'))
      ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
  };
  auto peek = [&]() -> char {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  };

  std::vector<std::vector<Integer>> rows;
  expect('[');
  if (peek() != ']') {
    for (;;) {
      expect('[');
      std::vector<Integer> row;
      for (;;) {
        skip_ws();
        const std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        const std::size_t digits = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == digits) throw ParseError("expected an integer", start);
        std::string token(text.substr(start, pos - start));
        if (token.front() == '+') token.erase(0, 1);
        row.emplace_back(token);
        if (peek() == ',') {
          ++pos;
          continue;
        }
        break;
      }
      expect(']');
      if (!rows.empty() && row.size() != rows.front().size()) {
        throw ParseError("row length differs from the first row", pos);
      }
      rows.push_back(std::move(row));
      if (peek() == ',') {
        ++pos;
        continue;
      }
      break;
    }
  }
  expect(']');
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters", pos);

  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace orbitclass

#endif  // ORBITCLASS_INTLINALG_HPP
