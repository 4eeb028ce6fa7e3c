#include <doctest.h>

#include <fstream>
#include <nlohmann/json.hpp>
#include <vector>

#include "wflag/errors.hpp"
#include "wflag/series.hpp"

using namespace wflag;
using nlohmann::json;

namespace {

json load_goldens() {
  static json g = [] {
    std::ifstream in(std::string(WFLAG_TEST_DATA_DIR) + "/goldens.json");
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
  }();
  return g;
}

LaurentPoly poly_from_list(const json& arr) {
  LaurentPoly p;
  long e = 0;
  for (const auto& c : arr) p.add_term(e++, Rat(c.get<long>()));
  return p;
}

RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Multiplying the expansion back by the denominator factors must return the
// numerator, coefficient by coefficient, up to the probed order.
void check_roundtrip(const HilbertSeries& hs, long order) {
  auto h = expand(hs, order);
  std::vector<Rat> acc(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) acc[i] = Rat(h[i]);
  for (long d : hs.denom_exponents) {
    for (long i = static_cast<long>(acc.size()) - 1; i >= d; --i)
      acc[static_cast<std::size_t>(i)] -= acc[static_cast<std::size_t>(i - d)];
  }
  for (long i = 0; i < static_cast<long>(acc.size()); ++i)
    CHECK(acc[static_cast<std::size_t>(i)] == hs.numerator.coeff(i));
}

}  // namespace

TEST_CASE("straight lgr36 series") {
  auto c3 = build_root_system(LieType::C, 3);
  auto nabla = weight_system(c3, rv({1, 1, 1}));
  auto hs = hilbert_series_weyl(c3, rv({1, 1, 1}), {0, 0, 0}, 1, nabla);
  CHECK(hs.numerator == poly_from_list(load_goldens()["goldens"]["lgr36_straight_numerator"]));
  CHECK(hs.denom_exponents == std::vector<long>(14, 1));
  auto sym = numerator_symmetry_check(hs);
  CHECK(sym.adjunction == 10);
  CHECK(sym.palindromic);
}

TEST_CASE("straight fl13 series") {
  auto a3 = build_root_system(LieType::A, 3);
  auto nabla = weight_system(a3, rv({2, 1, 1, 0}));
  auto hs = hilbert_series_weyl(a3, rv({2, 1, 1, 0}), {0, 0, 0, 0}, 1, nabla);
  CHECK(hs.numerator == poly_from_list(load_goldens()["goldens"]["fl13_straight_numerator"]));
  CHECK(hs.denom_exponents == std::vector<long>(15, 1));
  CHECK(numerator_symmetry_check(hs).adjunction == 12);
}

TEST_CASE("weighted worked examples") {
  auto g = load_goldens()["goldens"];
  auto c3 = build_root_system(LieType::C, 3);
  auto nabla3 = weight_system(c3, rv({1, 1, 1}));

  // mu = (1,0,0), u = 2: ambient weights {1^5, 2^4, 3^5}.
  auto hs = hilbert_series_weyl(c3, rv({1, 1, 1}), {1, 0, 0}, 2, nabla3);
  CHECK(hs.numerator == poly_from_list(g["lgr36_mu100_u2_numerator"]));
  std::vector<long> want{1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 3};
  CHECK(hs.denom_exponents == want);
  CHECK(numerator_symmetry_check(hs).adjunction == 20);
  CHECK(expand(hs, 1)[1] == 5);  // five weight-one coordinates
  check_roundtrip(hs, 30);

  auto a3 = build_root_system(LieType::A, 3);
  auto nabla4 = weight_system(a3, rv({2, 1, 1, 0}));
  // Base of the 4.4 family: mu = (1,1,0,0), u = 0.
  auto h44 = hilbert_series_weyl(a3, rv({2, 1, 1, 0}), {1, 1, 0, 0}, 0, nabla4);
  CHECK(h44.numerator == poly_from_list(g["fl13_mu0011_u0_numerator"]));
  // Base of the 4.5 family: mu = (1,1,1,0), u = -1.
  auto h45 = hilbert_series_weyl(a3, rv({2, 1, 1, 0}), {1, 1, 1, 0}, -1, nabla4);
  CHECK(h45.numerator == poly_from_list(g["fl13_mu0111_um1_numerator"]));
}

TEST_CASE("compact forms equal the general formula") {
  auto c3 = build_root_system(LieType::C, 3);
  auto nabla3 = weight_system(c3, rv({1, 1, 1}));
  auto a3 = build_root_system(LieType::A, 3);
  auto nabla4 = weight_system(a3, rv({2, 1, 1, 0}));

  int lgr_points = 0;
  for (long a1 = 0; a1 <= 2; ++a1)
    for (long a2 = 0; a2 <= a1; ++a2)
      for (long a3v = 0; a3v <= a2; ++a3v) {
        long s = a1 + a2 + a3v;
        for (long u = s + 1; u <= s + 3; ++u) {
          Coweight mu{a1, a2, a3v};
          auto compact = compact_lgr36(mu, u);
          auto weyl = hilbert_series_weyl(c3, rv({1, 1, 1}), mu, u, nabla3);
          CHECK(compact.numerator == weyl.numerator);
          CHECK(compact.denom_exponents == weyl.denom_exponents);
          CHECK(numerator_symmetry_check(weyl).palindromic);
          ++lgr_points;
        }
      }
  CHECK(lgr_points >= 20);

  int fl_points = 0;
  for (long a1 = 0; a1 <= 2; ++a1)
    for (long a2 = 0; a2 <= a1; ++a2)
      for (long a3v = 0; a3v <= a2; ++a3v)
        for (long a4 = 0; a4 <= a3v; ++a4)
          for (long u = 1; u <= 3; ++u) {
            Coweight mu{a1, a2, a3v, a4};
            auto compact = compact_fl13(mu, u);
            auto weyl = hilbert_series_weyl(a3, rv({2, 1, 1, 0}), mu, u, nabla4);
            CHECK(compact.numerator == weyl.numerator);
            CHECK(compact.denom_exponents == weyl.denom_exponents);
            CHECK(numerator_symmetry_check(weyl).palindromic);
            ++fl_points;
          }
  CHECK(fl_points >= 20);
}

TEST_CASE("series is W-invariant in mu") {
  auto c3 = build_root_system(LieType::C, 3);
  auto nabla3 = weight_system(c3, rv({1, 1, 1}));
  auto ref = hilbert_series_weyl(c3, rv({1, 1, 1}), {1, 0, 0}, 2, nabla3);
  for (Coweight mu : {Coweight{0, 1, 0}, Coweight{0, 0, 1}, Coweight{0, -1, 0}}) {
    auto hs = hilbert_series_weyl(c3, rv({1, 1, 1}), mu, 2, nabla3);
    CHECK(hs.numerator == ref.numerator);
    CHECK(hs.denom_exponents == ref.denom_exponents);
  }

  auto a3 = build_root_system(LieType::A, 3);
  auto nabla4 = weight_system(a3, rv({2, 1, 1, 0}));
  auto rf = hilbert_series_weyl(a3, rv({2, 1, 1, 0}), {1, 1, 0, 0}, 0, nabla4);
  auto hs = hilbert_series_weyl(a3, rv({2, 1, 1, 0}), {0, 0, 1, 1}, 0, nabla4);
  CHECK(hs.numerator == rf.numerator);
}

TEST_CASE("series is invariant under central rho shifts") {
  auto a3 = build_root_system(LieType::A, 3);
  auto nabla4 = weight_system(a3, rv({2, 1, 1, 0}));
  auto ref = hilbert_series_weyl(a3, rv({2, 1, 1, 0}), {1, 1, 0, 0}, 1, nabla4);
  auto shifted = a3;
  for (auto& c : shifted.rho) c += 5;
  auto hs = hilbert_series_weyl(shifted, rv({2, 1, 1, 0}), {1, 1, 0, 0}, 1, nabla4);
  CHECK(hs.numerator == ref.numerator);
}

TEST_CASE("series validation") {
  auto c3 = build_root_system(LieType::C, 3);
  auto nabla3 = weight_system(c3, rv({1, 1, 1}));
  // u too small: some exponent becomes nonpositive.
  CHECK_THROWS_AS(hilbert_series_weyl(c3, rv({1, 1, 1}), {1, 0, 0}, 1, nabla3),
                  validation_error);
  CHECK_THROWS_AS(hilbert_series_weyl(c3, rv({1, 1, 1}), {1, 0}, 2, nabla3), validation_error);
  CHECK_THROWS_AS(hilbert_series_weyl(c3, rv({1, 0, -1}), {0, 0, 0}, 1, nabla3),
                  validation_error);
  CHECK_THROWS_AS(compact_lgr36({0, 1, 0}, 2), validation_error);
  CHECK_THROWS_AS(compact_lgr36({1, 0, 0}, 1), validation_error);
  CHECK_THROWS_AS(compact_fl13({1, 0, 0}, 1), validation_error);
  // nabla missing an orbit weight.
  WeightSystem partial = nabla3;
  partial.lines.erase(partial.lines.begin());
  CHECK_THROWS_AS(hilbert_series_weyl(c3, rv({1, 1, 1}), {0, 0, 0}, 1, partial),
                  validation_error);
}

TEST_CASE("expand flags ill-posed series") {
  HilbertSeries bad;
  bad.numerator = LaurentPoly::one() - LaurentPoly::term(1, 2);
  bad.denom_exponents = {1};
  CHECK_THROWS_AS(expand(bad, 5), validation_error);
  CHECK_FALSE(try_expand(bad, 5).has_value());

  HilbertSeries frac;
  frac.numerator = LaurentPoly::term(0, Rat(1, 2));
  frac.denom_exponents = {1};
  CHECK_THROWS_AS(expand(frac, 5), validation_error);

  HilbertSeries good;
  good.numerator = LaurentPoly::one();
  good.denom_exponents = {1, 1, 1, 1};
  auto h = expand(good, 3);  // projective 3-space
  CHECK(h[0] == 1);
  CHECK(h[1] == 4);
  CHECK(h[2] == 10);
  CHECK(h[3] == 20);
}
