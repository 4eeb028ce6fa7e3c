#include <doctest.h>

#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <vector>

#include "wflag/catalog.hpp"
#include "wflag/errors.hpp"
#include "wflag/lattice.hpp"

using namespace wflag;
using nlohmann::json;

namespace {

json load_goldens_cat() {
  static json g = [] {
    std::ifstream in(std::string(WFLAG_TEST_DATA_DIR) + "/goldens.json");
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
  }();
  return g;
}

LaurentPoly poly_from_list_cat(const json& arr) {
  LaurentPoly p;
  long e = 0;
  for (const auto& c : arr) p.add_term(e++, Rat(c.get<long>()));
  return p;
}

}  // namespace

TEST_CASE("catalog table shape and cross-checks against the lattice layer") {
  const auto& rows = catalog();
  REQUIRE(rows.size() == 9);

  const std::vector<std::string> ids = {"fl12", "ogr510", "gr26", "lgr36", "g2",
                                        "fl13", "e6",     "gr27", "gr36"};
  const std::vector<long> dims = {3, 10, 8, 6, 5, 5, 16, 10, 9};
  const std::vector<long> ambients = {7, 15, 14, 13, 13, 14, 26, 20, 19};
  const std::vector<long> quadrics = {9, 10, 15, 21, 28, 36, 27, 35, 35};

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const CatalogEntry& e = rows[i];
    CAPTURE(e.id);
    CHECK(e.id == ids[i]);
    CHECK(e.dim == dims[i]);
    CHECK(e.ambient_dim == ambients[i]);
    CHECK(e.codim == e.ambient_dim - e.dim);
    CHECK(e.num_quadrics == quadrics[i]);

    RootSystem rs = build_root_system(e.lie_type, e.rank);
    CHECK(is_dominant(rs, e.lambda));
    CHECK(flag_dimension(rs, e.lambda) == e.dim);
    CHECK(weyl_dim(rs, e.lambda) == e.ambient_dim + 1);
  }
  // Codimension increases along the table.
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].codim >= rows[i - 1].codim);

  CHECK(catalog_entry("lgr36").description == rows[3].description);
  CHECK_THROWS_AS(catalog_entry("gr999"), validation_error);
}

TEST_CASE("straight scan of all nine rows matches recorded numerators") {
  json scan = load_goldens_cat()["catalog_scan"];
  const std::map<std::string, long> expected_k = {
      {"fl12", -2}, {"ogr510", -8}, {"gr26", -6}, {"lgr36", -4}, {"g2", -3},
      {"fl13", -3}, {"e6", -12},    {"gr27", -7}, {"gr36", -6}};

  std::map<std::string, LaurentPoly> numerators;
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.id);
    RootSystem rs = build_root_system(e.lie_type, e.rank);
    Coweight zero(rs.dim, 0);
    WeightedVariety w = make_weighted(e, zero, 1);

    CHECK(w.dim == e.dim);
    // Straight grading: every ambient coordinate has weight one.
    CHECK(w.weights == std::vector<long>(e.ambient_dim + 1, 1));
    CHECK(w.series.numerator == poly_from_list_cat(scan[e.id]));
    CHECK(w.palindromic);
    CHECK(w.canonical_degree == expected_k.at(e.id));
    // Coefficient of t^2 in the numerator counts the defining quadrics.
    CHECK(w.series.numerator.coeff(2) == Rat(-e.num_quadrics));
    // Representation-theoretic count: quadrics = Sym^2(V) minus degree two.
    long n1 = e.ambient_dim + 1;
    long sym2 = n1 * (n1 + 1) / 2;
    RationalVector two_lambda;
    for (const auto& c : e.lambda) two_lambda.push_back(Rat(2) * c);
    CHECK(sym2 - weyl_dim(rs, two_lambda) == e.num_quadrics);

    if (auto formula = canonical_formula(e.id, zero, 1)) {
      CHECK(*formula == w.canonical_degree);
    }
    numerators[e.id] = w.series.numerator;
  }
  // Gr(2,7) and Gr(3,6) share one Hilbert numerator despite different
  // ambient dimensions of the underlying groups.
  CHECK(numerators["gr27"] == numerators["gr36"]);
}

TEST_CASE("weighted catalog rows: series, weights and canonical degree") {
  json g = load_goldens_cat()["goldens"];

  SUBCASE("weighted Lagrangian Grassmannian") {
    const CatalogEntry& e = catalog_entry("lgr36");
    WeightedVariety w = make_weighted(e, {1, 0, 0}, 2);
    std::vector<long> expect_w = {1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 3};
    CHECK(w.weights == expect_w);
    CHECK(w.canonical_degree == -8);
    CHECK(canonical_formula("lgr36", {1, 0, 0}, 2) == -8);
    CHECK(w.palindromic);
    CHECK(w.series.numerator == poly_from_list_cat(g["lgr36_mu100_u2_numerator"]));
  }

  SUBCASE("weighted flag varieties") {
    const CatalogEntry& e = catalog_entry("fl13");
    WeightedVariety w44 = make_weighted(e, {0, 0, 1, 1}, 0);
    CHECK(w44.canonical_degree == -6);
    CHECK(canonical_formula("fl13", {0, 0, 1, 1}, 0) == -6);
    WeightedVariety w45 = make_weighted(e, {0, 1, 1, 1}, -1);
    CHECK(w45.canonical_degree == -6);
    CHECK(canonical_formula("fl13", {0, 1, 1, 1}, -1) == -6);
    CHECK(w44.weights != w45.weights);
  }

  SUBCASE("closed form tracks the computed value on a grid") {
    const CatalogEntry& e = catalog_entry("lgr36");
    for (long a = 0; a <= 1; ++a) {
      for (long u = 3 * a + 1; u <= 3 * a + 2; ++u) {
        WeightedVariety w = make_weighted(e, {a, a, a}, u);
        CHECK(canonical_formula("lgr36", {a, a, a}, u) == w.canonical_degree);
      }
    }
    CHECK(!canonical_formula("gr26", {0, 0, 0, 0, 0, 0}, 1).has_value());
  }

  SUBCASE("half-integral spinor weights need even test configurations") {
    const CatalogEntry& e = catalog_entry("ogr510");
    // mu with odd pairing sum gives half-integral degrees: rejected.
    CHECK_THROWS_AS(make_weighted(e, {1, 0, 0, 0, 0}, 1), validation_error);
    // mu with even pairings stays integral (u=2 keeps all degrees positive).
    WeightedVariety w = make_weighted(e, {1, 1, 0, 0, 0}, 2);
    std::vector<long> expect_w(4, 1);
    expect_w.insert(expect_w.end(), 8, 2);
    expect_w.insert(expect_w.end(), 4, 3);
    CHECK(w.weights == expect_w);
    CHECK(w.palindromic);
  }

  SUBCASE("validation") {
    const CatalogEntry& e = catalog_entry("fl12");
    CHECK_THROWS_AS(make_weighted(e, {0, 0}, 1), validation_error);      // wrong mu size
    CHECK_THROWS_AS(make_weighted(e, {0, 0, 0}, 0), validation_error);   // zero weights
    CHECK_THROWS_AS(make_weighted(e, {5, 0, 0}, -9), validation_error);  // negative weight
  }
}
