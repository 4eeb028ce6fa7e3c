#include <wflag/catalog.hpp>

#include <numeric>

#include <wflag/errors.hpp>

namespace wflag {

namespace {

RationalVector rv(std::initializer_list<long> entries) {
  RationalVector v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

// Half-integral vector, used for spinor weights.
RationalVector rv_half(std::initializer_list<long> numerators) {
  RationalVector v;
  v.reserve(numerators.size());
  for (long n : numerators) v.emplace_back(Rat(n, 2));
  return v;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> rows = [] {
    std::vector<CatalogEntry> r;
    auto add = [&r](std::string id, std::string desc, LieType lt, int rank, RationalVector lam,
                    long dim, long ambient, long quadrics) {
      CatalogEntry e;
      e.id = std::move(id);
      e.description = std::move(desc);
      e.lie_type = lt;
      e.rank = rank;
      e.lambda = std::move(lam);
      e.dim = dim;
      e.ambient_dim = ambient;
      e.codim = ambient - dim;
      e.num_quadrics = quadrics;
      r.push_back(std::move(e));
    };
    add("fl12", "Flag variety FL(1,2;3) of point-line flags in P2", LieType::A, 2,
        rv({2, 1, 0}), 3, 7, 9);
    add("ogr510", "Orthogonal Grassmannian OGr(5,10), spinor embedding", LieType::D, 5,
        rv_half({1, 1, 1, 1, 1}), 10, 15, 10);
    add("gr26", "Grassmannian Gr(2,6), Pluecker embedding", LieType::A, 5,
        rv({1, 1, 0, 0, 0, 0}), 8, 14, 15);
    add("lgr36", "Lagrangian Grassmannian LGr(3,6)", LieType::C, 3, rv({1, 1, 1}), 6, 13, 21);
    add("g2", "Adjoint variety of the Lie group G2", LieType::G2, 2, rv({-1, -1, 2}), 5, 13, 28);
    add("fl13", "Flag variety FL(1,3;4) of point-hyperplane flags in P3", LieType::A, 3,
        rv({2, 1, 1, 0}), 5, 14, 36);
    add("e6", "Cayley plane, the closed orbit of E6 in P26", LieType::E6, 6,
        rv({1, 0, 0, 0, 0, 0}), 16, 26, 27);
    add("gr27", "Grassmannian Gr(2,7), Pluecker embedding", LieType::A, 6,
        rv({1, 1, 0, 0, 0, 0, 0}), 10, 20, 35);
    add("gr36", "Grassmannian Gr(3,6), Pluecker embedding", LieType::A, 5,
        rv({1, 1, 1, 0, 0, 0}), 9, 19, 35);
    return r;
  }();
  return rows;
}

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const CatalogEntry& e : catalog()) {
    if (e.id == id) return e;
  }
  throw validation_error("unknown catalog entry '" + id + "'");
}

WeightedVariety make_weighted(const CatalogEntry& entry, const Coweight& mu, long u) {
  RootSystem rs = build_root_system(entry.lie_type, entry.rank);
  WeightSystem nabla = weight_system(rs, entry.lambda);

  WeightedVariety w;
  w.entry_id = entry.id;
  w.mu = mu;
  w.u = u;
  w.dim = entry.dim;
  w.series = hilbert_series_weyl(rs, entry.lambda, mu, u, nabla);
  w.weights = w.series.denom_exponents;

  SymmetryReport sym = numerator_symmetry_check(w.series);
  w.palindromic = sym.palindromic;
  long total_weight = std::accumulate(w.weights.begin(), w.weights.end(), 0L);
  w.canonical_degree = sym.adjunction - total_weight;
  return w;
}

std::optional<long> canonical_formula(const std::string& entry_id, const Coweight& mu, long u) {
  if (entry_id == "lgr36") return -4 * u;
  if (entry_id == "fl13") {
    long s = std::accumulate(mu.begin(), mu.end(), 0L);
    return -3 * (s + u);
  }
  return std::nullopt;
}

}  // namespace wflag
