#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <vector>

#include "wflag/errors.hpp"
#include "wflag/ideals.hpp"

using namespace wflag;
using nlohmann::json;

namespace {

json load_goldens_gb() {
  static json g = [] {
    std::ifstream in(std::string(WFLAG_TEST_DATA_DIR) + "/goldens.json");
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
  }();
  return g;
}

LaurentPoly poly_from_list_gb(const json& arr) {
  LaurentPoly p;
  long e = 0;
  for (const auto& c : arr) p.add_term(e++, Rat(c.get<long>()));
  return p;
}

Poly make_poly(std::initializer_list<std::pair<Monomial, long>> terms) {
  Poly p;
  for (const auto& [m, c] : terms) p[m] = Rat(c);
  return p;
}

}  // namespace

TEST_CASE("recorded defining ideals load with their gradings") {
  CHECK(defining_ideal_ids() == std::vector<std::string>{"fl13", "lgr36"});

  const IdealData& lgr = defining_ideal("lgr36");
  CHECK(lgr.variables == 14);
  CHECK(lgr.generators.size() == 21);
  CHECK(lgr.generator_names.front() == "q1");
  CHECK(lgr.generator_names.back() == "q21");
  REQUIRE(lgr.gradings.count("straight") == 1);
  REQUIRE(lgr.gradings.count("mu100_u2") == 1);
  CHECK(lgr.gradings.at("straight") == std::vector<long>(14, 1));

  const IdealData& fl = defining_ideal("fl13");
  CHECK(fl.variables == 15);
  CHECK(fl.generators.size() == 36);
  REQUIRE(fl.gradings.count("mu0011_u0") == 1);
  REQUIRE(fl.gradings.count("mu0111_um1") == 1);

  CHECK_THROWS_AS(defining_ideal("gr26"), validation_error);

  // Every generator is a quadric: total degree two in every term.
  for (const Poly& g : lgr.generators) {
    for (const auto& [m, c] : g) {
      CHECK(std::accumulate(m.begin(), m.end(), 0) == 2);
    }
  }
}

TEST_CASE("homogeneity of the recorded ideals under their gradings") {
  const IdealData& lgr = defining_ideal("lgr36");
  auto degs = homogeneous_degrees(lgr, lgr.gradings.at("straight"));
  CHECK(degs == std::vector<long>(21, 2));
  CHECK_NOTHROW(homogeneous_degrees(lgr, lgr.gradings.at("mu100_u2")));

  const IdealData& fl = defining_ideal("fl13");
  CHECK(homogeneous_degrees(fl, fl.gradings.at("straight")) == std::vector<long>(36, 2));
  CHECK_NOTHROW(homogeneous_degrees(fl, fl.gradings.at("mu0011_u0")));
  CHECK_NOTHROW(homogeneous_degrees(fl, fl.gradings.at("mu0111_um1")));

  SUBCASE("a perturbed grading is rejected with the generator named") {
    std::vector<long> bad = lgr.gradings.at("mu100_u2");
    bad[0] += 1;
    try {
      homogeneous_degrees(lgr, bad);
      FAIL("expected validation_error");
    } catch (const validation_error& e) {
      CHECK(std::string(e.what()).find('q') != std::string::npos);
    }
    CHECK_THROWS_AS(homogeneous_degrees(lgr, std::vector<long>(13, 1)), validation_error);
  }
}

TEST_CASE("Groebner bases of a toy ideal under both orders") {
  // I = <xy - z^2, xz - y^2> in three unit-weight variables.
  Poly f = make_poly({{{1, 1, 0}, 1}, {{0, 0, 2}, -1}});
  Poly g = make_poly({{{1, 0, 1}, 1}, {{0, 2, 0}, -1}});

  SUBCASE("weighted-lex completion gains the cubic relation") {
    MonomialOrder lex{{1, 1, 1}, OrderKind::WLex};
    auto basis = groebner_basis({f, g}, lex);
    bool found = false;
    Poly cubic = make_poly({{{0, 3, 0}, 1}, {{0, 0, 3}, -1}});
    for (const Poly& b : basis) {
      if (b == cubic) found = true;
    }
    CHECK(found);
  }

  SUBCASE("grevlex leading terms differ from lex") {
    MonomialOrder grevlex{{1, 1, 1}, OrderKind::WGrevlex};
    auto basis = groebner_basis({f, g}, grevlex);
    std::vector<Monomial> lms;
    for (const Poly& b : basis) lms.push_back(leading_monomial(b, grevlex));
    std::sort(lms.begin(), lms.end());
    CHECK(lms == std::vector<Monomial>{{0, 2, 0}, {1, 1, 0}, {2, 0, 1}});
  }

  SUBCASE("reduced basis properties and determinism") {
    MonomialOrder grevlex{{1, 1, 1}, OrderKind::WGrevlex};
    GroebnerStats stats;
    auto basis = groebner_basis({f, g}, grevlex, &stats);
    CHECK(stats.basis_size == basis.size());
    CHECK(stats.reduction_steps > 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(basis[i].at(leading_monomial(basis[i], grevlex)) == Rat(1));  // monic
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        // Fully reduced: no term of one element is divisible by the
        // leading monomial of another.
        const Monomial& lj = leading_monomial(basis[j], grevlex);
        for (const auto& [m, c] : basis[i]) CHECK_FALSE(monomial_divides(lj, m));
      }
    }
    CHECK(groebner_basis({f, g}, grevlex) == basis);
    CHECK(groebner_basis({g, f}, grevlex) == basis);  // input order irrelevant
  }

  SUBCASE("the quotient numerator is order independent") {
    auto a = quotient_hilbert_series({f, g}, {1, 1, 1}, OrderKind::WGrevlex);
    auto b = quotient_hilbert_series({f, g}, {1, 1, 1}, OrderKind::WLex);
    CHECK(a == b);
    // Two quadrics forming a complete intersection: numerator (1-t^2)^2.
    LaurentPoly expect = one_minus_t(2) * one_minus_t(2);
    CHECK(a.numerator == expect);
  }

  SUBCASE("the step cap is enforced") {
    const IdealData& lgr = defining_ideal("lgr36");
    MonomialOrder grevlex{lgr.gradings.at("straight"), OrderKind::WGrevlex};
    CHECK_THROWS_AS(groebner_basis(lgr.generators, grevlex, nullptr, 10), resource_error);
  }
}

TEST_CASE("quotients by the recorded ideals match the representation-theoretic series") {
  json g = load_goldens_gb()["goldens"];
  const IdealData& lgr = defining_ideal("lgr36");
  const IdealData& fl = defining_ideal("fl13");

  SUBCASE("straight gradings, both orders") {
    auto hs = quotient_hilbert_series(lgr.generators, lgr.gradings.at("straight"));
    CHECK(hs.numerator == poly_from_list_gb(g["lgr36_straight_numerator"]));
    CHECK(hs.denom_exponents == std::vector<long>(14, 1));
    auto hs_lex =
        quotient_hilbert_series(lgr.generators, lgr.gradings.at("straight"), OrderKind::WLex);
    CHECK(hs_lex == hs);

    auto fs = quotient_hilbert_series(fl.generators, fl.gradings.at("straight"));
    CHECK(fs.numerator == poly_from_list_gb(g["fl13_straight_numerator"]));
    auto fs_lex =
        quotient_hilbert_series(fl.generators, fl.gradings.at("straight"), OrderKind::WLex);
    CHECK(fs_lex == fs);
  }

  SUBCASE("weighted gradings") {
    auto h35 = quotient_hilbert_series(lgr.generators, lgr.gradings.at("mu100_u2"));
    CHECK(h35.numerator == poly_from_list_gb(g["lgr36_mu100_u2_numerator"]));
    std::vector<long> sorted35 = lgr.gradings.at("mu100_u2");
    std::sort(sorted35.begin(), sorted35.end());
    CHECK(h35.denom_exponents == sorted35);

    auto h44 = quotient_hilbert_series(fl.generators, fl.gradings.at("mu0011_u0"));
    CHECK(h44.numerator == poly_from_list_gb(g["fl13_mu0011_u0_numerator"]));

    auto h45 = quotient_hilbert_series(fl.generators, fl.gradings.at("mu0111_um1"));
    CHECK(h45.numerator == poly_from_list_gb(g["fl13_mu0111_um1_numerator"]));
  }
}

TEST_CASE("coordinate strata of the weighted Lagrangian Grassmannian") {
  const IdealData& lgr = defining_ideal("lgr36");
  const std::vector<long>& w = lgr.gradings.at("mu100_u2");

  SUBCASE("the weight-two stratum is cut out by pure squares") {
    std::vector<bool> keep(14, false);
    for (int i = 0; i < 14; ++i) keep[i] = (w[i] == 2);
    auto restricted = restrict_to_stratum(lgr.generators, keep);
    CHECK(!restricted.empty());
    // Variables x5, x7, x8, x10 (1-based) carry weight two; each appears as
    // a pure square among the restricted equations, so the stratum is a
    // finite set of coordinate points.
    for (int var : {4, 6, 7, 9}) {
      CAPTURE(var);
      CHECK(w[var] == 2);
      CHECK(pure_power_present(restricted, var, 2));
    }
  }

  SUBCASE("the weight-three stratum keeps a smooth quadric relation") {
    std::vector<bool> keep(14, false);
    for (int i = 0; i < 14; ++i) keep[i] = (w[i] == 3);
    auto restricted = restrict_to_stratum(lgr.generators, keep);
    // x1 x6 - x2 x4 + 1/4 x3^2 survives restriction verbatim.
    Poly survivor;
    Monomial m16(14, 0), m24(14, 0), m33(14, 0);
    m16[0] = m16[5] = 1;
    m24[1] = m24[3] = 1;
    m33[2] = 2;
    survivor[m16] = Rat(1);
    survivor[m24] = Rat(-1);
    survivor[m33] = Rat(1, 4);
    bool found = false;
    for (const Poly& r : restricted) {
      if (r == survivor) found = true;
    }
    CHECK(found);
  }
}
