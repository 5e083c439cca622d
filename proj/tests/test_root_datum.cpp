#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "oracles.hpp"
#include "orbitclass/root_datum.hpp"

using namespace orbitclass;

namespace {

RootDatum make(GroupFamily f, int n) { return standard_datum({f, n, {}}); }

Integer product_of(const std::vector<Integer>& v) {
  Integer p = 1;
  for (const auto& x : v) p *= x;
  return p;
}

}  // namespace

TEST_CASE("rank-one data", "[datum]") {
  const RootDatum sl2 = make(GroupFamily::SL, 2);
  CHECK(sl2.lattice_rank() == 1);
  CHECK(sl2.root_coords() == IntMatrix{{2}});
  CHECK(sl2.coroot_coords() == IntMatrix{{1}});
  CHECK(phi_matrix(sl2) == IntMatrix{{2}});

  const RootDatum pgl2 = make(GroupFamily::PGL, 2);
  CHECK(pgl2.root_coords() == IntMatrix{{1}});
  CHECK(pgl2.coroot_coords() == IntMatrix{{2}});

  CHECK(phi_matrix(make(GroupFamily::GL, 2)) == IntMatrix{{1, -1}});
  CHECK(make(GroupFamily::GL, 1).semisimple_rank() == 0);
}

TEST_CASE("labels", "[datum]") {
  CHECK(make(GroupFamily::GL, 4).label() == "GL_4");
  CHECK(make(GroupFamily::SOOdd, 7).label() == "SO_7");
  CHECK(make(GroupFamily::Sp, 6).label() == "Sp_6");
  CHECK(standard_datum({GroupFamily::SimplyConnected, 0, {Family::E, 6}}).label() == "E6_sc");
  CHECK(standard_datum({GroupFamily::Adjoint, 0, {Family::D, 4}}).label() == "D4_ad");
  CHECK(make(GroupFamily::Torus, 2).label() == "T_2");
  CHECK(parse_group("SL:2xPGL:3").label() == "SL_2 x PGL_3");
}

TEST_CASE("invalid sizes are rejected", "[datum]") {
  CHECK_THROWS_AS(make(GroupFamily::GL, 0), InvalidArgument);
  CHECK_THROWS_AS(make(GroupFamily::SL, 1), InvalidArgument);
  CHECK_THROWS_AS(make(GroupFamily::SOOdd, 4), InvalidArgument);
  CHECK_THROWS_AS(make(GroupFamily::SOOdd, 1), InvalidArgument);
  CHECK_THROWS_AS(make(GroupFamily::SOEven, 5), InvalidArgument);
  CHECK_THROWS_AS(make(GroupFamily::SOEven, 2), InvalidArgument);
  CHECK_THROWS_AS(make(GroupFamily::Sp, 3), InvalidArgument);
  CHECK_THROWS_AS(make(GroupFamily::Torus, -1), InvalidArgument);
}

TEST_CASE("inconsistent data are rejected", "[datum]") {
  const RootSystem a1({{Family::A, 1}});
  CHECK_THROWS_AS(RootDatum("bad", a1, IntMatrix{{1}}, IntMatrix{{1}}, 1), InvalidArgument);
  CHECK_THROWS_AS(RootDatum("bad", a1, IntMatrix{{2, 0}}, IntMatrix{{1}}, 2), InvalidArgument);
  CHECK_NOTHROW(RootDatum("ok", a1, IntMatrix{{2, 0}}, IntMatrix{{1, 0}}, 2));
}

TEST_CASE("products", "[datum]") {
  const RootDatum tsl = product(make(GroupFamily::Torus, 1), make(GroupFamily::SL, 2));
  CHECK(tsl.lattice_rank() == 2);
  CHECK(tsl.semisimple_rank() == 1);

  const RootDatum t2 = product(make(GroupFamily::GL, 1), make(GroupFamily::GL, 1));
  CHECK(t2.lattice_rank() == 2);
  CHECK(t2.semisimple_rank() == 0);
  CHECK(kappa_v(t2) == kappa_v(make(GroupFamily::Torus, 2)));

  const RootDatum slpgl = product(make(GroupFamily::SL, 2), make(GroupFamily::PGL, 2));
  CHECK(kappa_v(slpgl) == 2);
  CHECK(rho_v(slpgl) == 2);
}

TEST_CASE("kappa_v and rho_v of the classical families", "[datum][oracle]") {
  struct Case {
    GroupFamily family;
    const char* name;
    int lo, hi, step;
  };
  const Case cases[] = {
      {GroupFamily::GL, "GL", 1, 12, 1},        {GroupFamily::SL, "SL", 2, 12, 1},
      {GroupFamily::PGL, "PGL", 2, 12, 1},      {GroupFamily::SOOdd, "SOodd", 3, 21, 2},
      {GroupFamily::SOEven, "SOeven", 4, 20, 2}, {GroupFamily::Sp, "Sp", 2, 20, 2},
  };
  for (const auto& c : cases)
    for (int n = c.lo; n <= c.hi; n += c.step) {
      const RootDatum rd = make(c.family, n);
      const auto expected = oracle::classical_center_fundamental(c.name, n);
      INFO(rd.label());
      CHECK(kappa_v(rd) == expected.kappa);
      CHECK(rho_v(rd) == expected.rho);
    }
}

TEST_CASE("simply connected and adjoint forms swap kappa and rho", "[datum]") {
  for (const auto& t : gen::all_simple_types(8)) {
    INFO(t.name());
    const RootDatum sc = standard_datum({GroupFamily::SimplyConnected, 0, t});
    const RootDatum ad = standard_datum({GroupFamily::Adjoint, 0, t});
    const Integer det = cartan_determinant(sc.root_system());
    CHECK(kappa_v(sc) == det);
    CHECK(rho_v(sc) == 1);
    CHECK(kappa_v(ad) == 1);
    CHECK(rho_v(ad) == det);
  }
}

TEST_CASE("property: SL_n and PGL_n are dual", "[datum][property]") {
  for (int n = 2; n <= 9; ++n) {
    CHECK(kappa_v(make(GroupFamily::SL, n)) == n);
    CHECK(rho_v(make(GroupFamily::PGL, n)) == n);
  }
}

TEST_CASE("property: roots pair with coroots by the Cartan matrix", "[datum][property]") {
  for (const auto& rd : gen::standard_corpus()) {
    INFO(rd.label());
    CHECK(rd.root_coords() * rd.coroot_coords().transposed() == rd.root_system().cartan().transposed());
  }
}

TEST_CASE("property: kappa_v divides the Cartan determinant for semisimple data",
          "[datum][property]") {
  for (const auto& rd : gen::standard_corpus()) {
    if (!rd.is_semisimple() || rd.semisimple_rank() == 0) continue;
    INFO(rd.label());
    CHECK(cartan_determinant(rd.root_system()) % kappa_v(rd) == 0);
  }
}

TEST_CASE("property: H_alpha dependent mod p iff p divides rho_v", "[datum][property]") {
  for (const auto& rd : gen::standard_corpus())
    for (auto p : gen::small_primes()) {
      INFO(rd.label() << " p=" << p);
      CHECK(coroots_dependent_mod_p(rd, p) == (rho_v(rd) % p == 0));
    }
}

TEST_CASE("property: exponents multiply to kappa_v", "[datum][property]") {
  for (const auto& rd : gen::standard_corpus()) {
    if (rd.semisimple_rank() == 0) {
      CHECK_THROWS_AS(regular_orbit_exponents(rd), InvalidArgument);
      continue;
    }
    INFO(rd.label());
    const auto d = regular_orbit_exponents(rd);
    CHECK(d.size() == rd.semisimple_rank());
    CHECK(product_of(d) == kappa_v(rd));
  }
}

TEST_CASE("regular orbit exponents of small groups", "[datum]") {
  CHECK(regular_orbit_exponents(make(GroupFamily::SL, 3)) == std::vector<Integer>{1, 3});
  CHECK(regular_orbit_exponents(make(GroupFamily::GL, 5)) == std::vector<Integer>{1, 1, 1, 1});
  CHECK(regular_orbit_exponents(make(GroupFamily::SOOdd, 5)) == std::vector<Integer>{1, 1});
  CHECK(regular_orbit_exponents(make(GroupFamily::Sp, 4)) == std::vector<Integer>{1, 2});
}

TEST_CASE("coroot dependence examples", "[datum]") {
  for (std::int64_t p : {2, 3, 5, 7}) CHECK(coroots_dependent_mod_p(make(GroupFamily::PGL, static_cast<int>(p)), p));
  for (int n = 2; n <= 9; ++n)
    for (std::int64_t p : {2, 3, 5, 7}) CHECK_FALSE(coroots_dependent_mod_p(make(GroupFamily::SL, n), p));
  CHECK(coroots_dependent_mod_p(make(GroupFamily::SOOdd, 7), 2));
}

TEST_CASE("degenerate classical ranks", "[datum]") {
  CHECK(make(GroupFamily::SOOdd, 3).root_system().label() == "A1");
  CHECK(make(GroupFamily::Sp, 2).root_system().label() == "A1");
  CHECK(make(GroupFamily::SOEven, 4).root_system().label() == "A1xA1");
  CHECK(make(GroupFamily::SOEven, 6).root_system().label() == "D3");
}

TEST_CASE("group spec grammar", "[parse]") {
  const auto specs = parse_group_spec("SL:2xPGL:3xT:1");
  REQUIRE(specs.size() == 3);
  CHECK(specs[0].family == GroupFamily::SL);
  CHECK(specs[1].size == 3);
  CHECK(specs[2].family == GroupFamily::Torus);

  CHECK(parse_group("SOodd:7").label() == "SO_7");
  CHECK(parse_group("SOeven:8").root_system().label() == "D4");
  CHECK(parse_group("Sp:6").root_system().label() == "C3");
  CHECK(parse_group("sc:E6").label() == "E6_sc");
  CHECK(parse_group("ad:D4").label() == "D4_ad");
  CHECK(parse_group("GL:4").lattice_rank() == 4);

  struct Bad {
    const char* text;
    std::size_t position;
  };
  for (const Bad& b : {Bad{"", 0}, Bad{"XL:3", 0}, Bad{"SL:", 3}, Bad{"SL:1", 3}, Bad{"SL:2y", 4},
                       Bad{"SL:2xFOO:3", 5}, Bad{"sc:E5", 3}, Bad{"SOodd:4", 6}, Bad{"SL2", 0}}) {
    INFO(b.text);
    try {
      parse_group_spec(b.text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == b.position);
    }
  }
}
