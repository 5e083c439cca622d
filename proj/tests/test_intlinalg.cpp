#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "oracles.hpp"
#include "orbitclass/intlinalg.hpp"

using namespace orbitclass;

namespace {

oracle::Dense to_dense(const IntMatrix& m) {
  oracle::Dense d(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j).convert_to<long long>();
  return d;
}

std::vector<Integer> nonzero(const std::vector<Integer>& v) {
  std::vector<Integer> out;
  for (const auto& x : v)
    if (x != 0) out.push_back(x);
  return out;
}

std::vector<Integer> to_integers(const std::vector<oracle::Big>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("Smith normal form of small fixed matrices", "[snf]") {
  CHECK(invariant_factors(IntMatrix{{2}}) == std::vector<Integer>{2});
  CHECK(invariant_factors(IntMatrix{{2, -1}, {-1, 2}}) == std::vector<Integer>{1, 3});
  CHECK(invariant_factors(IntMatrix{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}) ==
        std::vector<Integer>{1, 1, 2});
  CHECK(invariant_factors(IntMatrix{{0, 0}, {0, 0}}) == std::vector<Integer>{0, 0});
  CHECK(invariant_factors(IntMatrix{{6, 4}, {4, 6}}) == std::vector<Integer>{2, 10});
  CHECK(invariant_factors(IntMatrix{{-3}}) == std::vector<Integer>{3});
  CHECK(invariant_factors(IntMatrix(0, 0)).empty());
  CHECK(invariant_factors(IntMatrix{{2, 4, 6}}) == std::vector<Integer>{2});
}

TEST_CASE("torsion_cokernel_order on fixed matrices", "[snf]") {
  CHECK(torsion_cokernel_order(IntMatrix(2, 2)) == 1);
  CHECK(torsion_cokernel_order(IntMatrix{{2}}) == 2);
  for (int n = 2; n <= 9; ++n) {
    IntMatrix cartan(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 1));
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); ++i) {
      cartan(i, i) = 2;
      if (i + 1 < static_cast<std::size_t>(n - 1)) cartan(i, i + 1) = cartan(i + 1, i) = -1;
    }
    CHECK(torsion_cokernel_order(cartan) == n);
  }
}

TEST_CASE("determinant on fixed matrices", "[det]") {
  CHECK(determinant(IntMatrix{{2, 1, 0}, {1, 0, 1}, {0, 1, 1}}) == -3);
  CHECK(determinant(IntMatrix{{-1, -1}, {0, 2}}) == -2);
  CHECK(determinant(IntMatrix::identity(5)) == 1);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{0, 0}, {1, 2}}) == 0);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), InvalidArgument);
}

TEST_CASE("rank_mod_p on fixed matrices", "[rank]") {
  for (std::int64_t p : {2, 3, 5, 7, 11}) CHECK(rank_mod_p(IntMatrix::identity(3), p) == 3);
  CHECK(rank_mod_p(IntMatrix{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}, 2) == 2);
  CHECK(rank_mod_p(IntMatrix{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}, 3) == 3);
  CHECK(rank_mod_p(IntMatrix{{5, 10}, {15, 20}}, 5) == 0);
  CHECK(rank_mod_p(IntMatrix(0, 4), 3) == 0);
  CHECK_THROWS_AS(rank_mod_p(IntMatrix::identity(2), 4), InvalidArgument);
  CHECK_THROWS_AS(rank_mod_p(IntMatrix::identity(2), 1), InvalidArgument);
}

TEST_CASE("primality helper", "[prime]") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(-3));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("matrix literal parsing", "[parse]") {
  CHECK(parse_matrix_literal("[[1,1,0],[1,0,1],[0,1,1]]") ==
        IntMatrix{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  CHECK(parse_matrix_literal(" [ [ -2 , 3 ] ] ") == IntMatrix{{-2, 3}});
  CHECK(parse_matrix_literal("[]") == IntMatrix(0, 0));
  const IntMatrix big = parse_matrix_literal("[[123456789012345678901234567890]]");
  CHECK(big(0, 0) == Integer("123456789012345678901234567890"));

  for (const char* bad : {"", "[", "[[1,2],[3]]", "[[1,,2]]", "[[1]]x", "[[a]]", "[1,2]"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_matrix_literal(bad), ParseError);
  }
  try {
    parse_matrix_literal("[[1,2],[3]]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("to_string round-trips through the literal parser", "[parse]") {
  gen::Gen g(11);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = g.matrix(static_cast<std::size_t>(g.uniform(1, 5)),
                                 static_cast<std::size_t>(g.uniform(1, 5)));
    CHECK(parse_matrix_literal(m.to_string()) == m);
  }
}

TEST_CASE("direct sum is block diagonal", "[matrix]") {
  const IntMatrix s = direct_sum(IntMatrix{{2}}, IntMatrix{{1, 2}, {3, 4}});
  CHECK(s == IntMatrix{{2, 0, 0}, {0, 1, 2}, {0, 3, 4}});
  CHECK(direct_sum(IntMatrix(0, 0), IntMatrix{{1}}) == IntMatrix{{1}});
}

// ---------------------------------------------------------------------------
// Properties over random matrices, entries in [-9, 9], dims <= 8

TEST_CASE("property: U M V reconstructs diag(d) with unimodular U and V", "[snf][property]") {
  gen::Gen g(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = static_cast<std::size_t>(g.uniform(1, 8));
    const auto cols = static_cast<std::size_t>(g.uniform(1, 8));
    const IntMatrix m = g.matrix(rows, cols, -9, 9, trial % 3 == 0 ? 0.6 : 0.0);
    const SmithForm sf = smith_normal_form(m);
    INFO("M = " << m.to_string());
    REQUIRE(sf.U * m * sf.V == sf.diagonal_matrix());
    CHECK(abs(determinant(sf.U)) == 1);
    CHECK(abs(determinant(sf.V)) == 1);
    for (std::size_t i = 0; i < sf.diag.size(); ++i) {
      CHECK(sf.diag[i] >= 0);
      if (i + 1 < sf.diag.size() && sf.diag[i] != 0) CHECK(sf.diag[i + 1] % sf.diag[i] == 0);
      if (i + 1 < sf.diag.size() && sf.diag[i] == 0) CHECK(sf.diag[i + 1] == 0);
    }
  }
}

TEST_CASE("property: invariant factors agree with the gcd-of-minors oracle", "[snf][property]") {
  gen::Gen g(7);
  for (int trial = 0; trial < 120; ++trial) {
    const auto rows = static_cast<std::size_t>(g.uniform(1, 4));
    const auto cols = static_cast<std::size_t>(g.uniform(1, 4));
    const IntMatrix m = g.matrix(rows, cols, -9, 9, trial % 2 ? 0.5 : 0.0);
    INFO("M = " << m.to_string());
    CHECK(nonzero(invariant_factors(m)) ==
          to_integers(oracle::invariant_factors_from_minors(to_dense(m))));
  }
}

TEST_CASE("property: rank mod p counts invariant factors prime to p", "[rank][property]") {
  gen::Gen g(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = static_cast<std::size_t>(g.uniform(1, 8));
    const auto cols = static_cast<std::size_t>(g.uniform(1, 8));
    const IntMatrix m = g.matrix(rows, cols, -9, 9, trial % 2 ? 0.5 : 0.0);
    const auto d = invariant_factors(m);
    for (std::int64_t p : {2, 3, 5, 7, 11}) {
      std::size_t expected = 0;
      for (const auto& x : d)
        if (x % p != 0) ++expected;
      INFO("M = " << m.to_string() << ", p = " << p);
      CHECK(rank_mod_p(m, p) == expected);
    }
  }
}

TEST_CASE("property: rank mod p agrees with the minors oracle", "[rank][property]") {
  gen::Gen g(5);
  for (int trial = 0; trial < 80; ++trial) {
    const IntMatrix m = g.matrix(static_cast<std::size_t>(g.uniform(1, 4)),
                                 static_cast<std::size_t>(g.uniform(1, 4)), -6, 6, 0.3);
    for (std::int64_t p : {2, 3, 5}) CHECK(rank_mod_p(m, p) == oracle::rank_mod_p_from_minors(to_dense(m), p));
  }
}

TEST_CASE("property: |det M| equals the product of invariant factors", "[det][property]") {
  gen::Gen g(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(g.uniform(1, 8));
    const IntMatrix m = g.matrix(n, n);
    Integer prod = 1;
    for (const auto& d : invariant_factors(m)) prod *= d;
    CHECK(abs(determinant(m)) == prod);
  }
}

TEST_CASE("property: Bareiss determinant agrees with the Leibniz oracle", "[det][property]") {
  gen::Gen g(2718);
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = static_cast<std::size_t>(g.uniform(1, 6));
    const IntMatrix m = g.matrix(n, n, -9, 9, trial % 4 == 0 ? 0.5 : 0.0);
    CHECK(determinant(m) == Integer(oracle::leibniz_det(to_dense(m))));
  }
}

TEST_CASE("property: torsion order is invariant under unimodular changes of basis",
          "[snf][property]") {
  gen::Gen g(424242);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = static_cast<std::size_t>(g.uniform(1, 7));
    const auto cols = static_cast<std::size_t>(g.uniform(1, 7));
    const IntMatrix m = g.matrix(rows, cols, -9, 9, trial % 3 == 0 ? 0.5 : 0.0);
    const IntMatrix left = g.unimodular(rows);
    const IntMatrix right = g.unimodular(cols);
    const Integer t = torsion_cokernel_order(m);
    CHECK(torsion_cokernel_order(left * m) == t);
    CHECK(torsion_cokernel_order(m * right) == t);
    CHECK(invariant_factors(left * m * right) == invariant_factors(m));
  }
}

TEST_CASE("property: the generator really produces unimodular matrices", "[generator]") {
  gen::Gen g(1);
  for (int trial = 0; trial < 50; ++trial)
    CHECK(abs(determinant(g.unimodular(static_cast<std::size_t>(g.uniform(1, 8)), 30))) == 1);
}

TEST_CASE("intermediate growth is handled exactly", "[snf]") {
  IntMatrix m(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = Integer(1) << (10 * (i + 1) + static_cast<int>(j));
  m(0, 0) += 1;
  const SmithForm sf = smith_normal_form(m);
  CHECK(sf.U * m * sf.V == sf.diagonal_matrix());
  Integer prod = 1;
  for (const auto& d : sf.diag) prod *= d;
  CHECK(prod == abs(determinant(m)));
}
