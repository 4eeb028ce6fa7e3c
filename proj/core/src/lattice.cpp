#include "wflag/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>

#include "wflag/errors.hpp"

namespace wflag {

namespace {

RationalVector rvec(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i] + b[i]);
  return r;
}

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i] - b[i]);
  return r;
}

RationalVector scale(const RationalVector& a, const Rat& c) {
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(c * a[i]);
  return r;
}

using Matrix = std::vector<RationalVector>;

Matrix identity(int n) {
  Matrix m(n, RationalVector(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(a.size());
  Matrix r(n, RationalVector(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (b[k][j] == 0) continue;
        r[i][j] += a[i][k] * b[k][j];
      }
    }
  return r;
}

RationalVector mat_vec(const Matrix& m, const RationalVector& v) {
  RationalVector r(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

// Solve M c = d for the (dim x k) column matrix M of simple roots.
// Returns nullopt when inconsistent.
std::optional<RationalVector> solve_columns(const std::vector<RationalVector>& cols,
                                            const RationalVector& d) {
  const int rows = static_cast<int>(d.size());
  const int k = static_cast<int>(cols.size());
  std::vector<RationalVector> aug(rows, RationalVector(k + 1, Rat(0)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < k; ++j) aug[i][j] = cols[j][i];
    aug[i][k] = d[i];
  }
  int row = 0;
  std::vector<int> pivot_col(k, -1);
  for (int col = 0; col < k && row < rows; ++col) {
    int p = -1;
    for (int i = row; i < rows; ++i)
      if (aug[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(aug[p], aug[row]);
    Rat inv = Rat(1 / aug[row][col]);
    for (int j = col; j <= k; ++j) aug[row][j] = Rat(aug[row][j] * inv);
    for (int i = 0; i < rows; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      Rat f = aug[i][col];
      for (int j = col; j <= k; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_col[col] = row;
    ++row;
  }
  // Simple-root columns are linearly independent, so every column pivots.
  for (int col = 0; col < k; ++col)
    if (pivot_col[col] < 0) throw internal_error("dependent simple roots");
  for (int i = row; i < rows; ++i)
    if (aug[i][k] != 0) return std::nullopt;
  RationalVector c(k, Rat(0));
  for (int col = 0; col < k; ++col) c[col] = aug[pivot_col[col]][k];
  return c;
}

std::size_t env_weyl_cap() {
  const char* s = std::getenv("WFLAG_WEYL_CAP");
  if (!s || !*s) return 1000000;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v <= 0)
    throw validation_error("WFLAG_WEYL_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

void check_positive_root_halfsum(const RootSystem& rs) {
  RationalVector half(rs.dim, Rat(0));
  for (const auto& a : rs.positive_roots) half = add(half, a);
  half = scale(half, Rat(1, 2));
  // rho may differ from the half sum by a central shift (type A gl
  // coordinates); the difference must pair to zero with every root.
  RationalVector diff = sub(rs.rho, half);
  for (const auto& a : rs.positive_roots)
    if (inner(rs, diff, a) != 0) throw internal_error("rho is not a half sum of positives");
}

void check_aux_regular(const RootSystem& rs) {
  for (const auto& a : rs.positive_roots) {
    Rat p = 0;
    for (int i = 0; i < rs.dim; ++i) p += a[i] * rs.aux_direction[i];
    if (p == 0) throw internal_error("aux direction is not regular for " + rs.name());
  }
}

RootSystem build_type_a(int rank) {
  // gl(n+1) coordinates.
  RootSystem rs;
  rs.lie_type = LieType::A;
  rs.rank = rank;
  rs.dim = rank + 1;
  auto e = [&](int i, int j) {
    RationalVector v(rs.dim, Rat(0));
    v[i] = 1;
    v[j] = -1;
    return v;
  };
  for (int i = 0; i + 1 < rs.dim; ++i) rs.simple_roots.push_back(e(i, i + 1));
  for (int i = 0; i < rs.dim; ++i)
    for (int j = i + 1; j < rs.dim; ++j) rs.positive_roots.push_back(e(i, j));
  for (int i = 0; i < rs.dim; ++i) rs.rho.emplace_back(rank - i);
  rs.gram = identity(rs.dim);
  for (int i = 0; i < rs.dim; ++i) rs.aux_direction.push_back(rank - i);
  return rs;
}

RootSystem build_c3() {
  RootSystem rs;
  rs.lie_type = LieType::C;
  rs.rank = 3;
  rs.dim = 3;
  rs.simple_roots = {rvec({1, -1, 0}), rvec({0, 1, -1}), rvec({0, 0, 2})};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      RationalVector p(3, Rat(0)), m(3, Rat(0));
      p[i] = 1;
      p[j] = 1;
      m[i] = 1;
      m[j] = -1;
      rs.positive_roots.push_back(m);
      rs.positive_roots.push_back(p);
    }
  for (int i = 0; i < 3; ++i) {
    RationalVector l(3, Rat(0));
    l[i] = 2;
    rs.positive_roots.push_back(l);
  }
  rs.rho = rvec({3, 2, 1});
  rs.gram = identity(3);
  rs.aux_direction = {3, 2, 1};
  return rs;
}

RootSystem build_d5() {
  RootSystem rs;
  rs.lie_type = LieType::D;
  rs.rank = 5;
  rs.dim = 5;
  for (int i = 0; i + 1 < 5; ++i) {
    RationalVector v(5, Rat(0));
    v[i] = 1;
    v[i + 1] = -1;
    rs.simple_roots.push_back(v);
  }
  {
    RationalVector v(5, Rat(0));
    v[3] = 1;
    v[4] = 1;
    rs.simple_roots.push_back(v);
  }
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      RationalVector p(5, Rat(0)), m(5, Rat(0));
      p[i] = 1;
      p[j] = 1;
      m[i] = 1;
      m[j] = -1;
      rs.positive_roots.push_back(m);
      rs.positive_roots.push_back(p);
    }
  rs.rho = rvec({4, 3, 2, 1, 0});
  rs.gram = identity(5);
  // Doubled so pairings with half-integral spin weights stay integral.
  rs.aux_direction = {32, 16, 8, 4, 2};
  return rs;
}

RootSystem build_g2() {
  // Realized in the sum-zero plane of Q^3; alpha1 short, alpha2 long.
  RootSystem rs;
  rs.lie_type = LieType::G2;
  rs.rank = 2;
  rs.dim = 3;
  rs.simple_roots = {rvec({1, -1, 0}), rvec({-2, 1, 1})};
  rs.positive_roots = {
      rvec({1, -1, 0}),  rvec({-2, 1, 1}), rvec({-1, 0, 1}),
      rvec({0, -1, 1}),  rvec({1, -2, 1}), rvec({-1, -1, 2}),
  };
  rs.rho = rvec({-1, -2, 3});
  rs.gram = identity(3);
  rs.aux_direction = {-1, -2, 3};
  return rs;
}

RootSystem build_e6() {
  // Fundamental-weight coordinates: simple root j is column j of the Cartan
  // matrix, the Gram matrix is its inverse, rho = (1,...,1).
  RootSystem rs;
  rs.lie_type = LieType::E6;
  rs.rank = 6;
  rs.dim = 6;
  const int edges[5][2] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}};
  std::vector<std::vector<long>> cartan(6, std::vector<long>(6, 0));
  for (int i = 0; i < 6; ++i) cartan[i][i] = 2;
  for (auto& e : edges) {
    cartan[e[0]][e[1]] = -1;
    cartan[e[1]][e[0]] = -1;
  }
  for (int j = 0; j < 6; ++j) {
    RationalVector col(6, Rat(0));
    for (int i = 0; i < 6; ++i) col[i] = cartan[i][j];
    rs.simple_roots.push_back(col);
  }
  // Invert the Cartan matrix for the Gram matrix.
  Matrix aug(6, RationalVector(12, Rat(0)));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) aug[i][j] = cartan[i][j];
    aug[i][6 + i] = 1;
  }
  for (int col = 0; col < 6; ++col) {
    int p = col;
    while (aug[p][col] == 0) ++p;
    std::swap(aug[p], aug[col]);
    Rat inv = Rat(1 / aug[col][col]);
    for (int j = 0; j < 12; ++j) aug[col][j] = Rat(aug[col][j] * inv);
    for (int i = 0; i < 6; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      Rat f = aug[i][col];
      for (int j = 0; j < 12; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  rs.gram.assign(6, RationalVector(6, Rat(0)));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) rs.gram[i][j] = aug[i][6 + j];
  rs.rho = RationalVector(6, Rat(1));
  // aux = 3 * gram * (1,...,1), integral because det(Cartan) = 3.
  for (int i = 0; i < 6; ++i) {
    Rat s = 0;
    for (int j = 0; j < 6; ++j) s += rs.gram[i][j];
    s *= 3;
    if (!is_integer(s)) throw internal_error("E6 aux direction not integral");
    rs.aux_direction.push_back(to_long(s));
  }
  // Positive roots: close the simple roots under simple reflections and
  // keep the aux-positive half.
  std::set<RationalVector> roots(rs.simple_roots.begin(), rs.simple_roots.end());
  std::deque<RationalVector> queue(rs.simple_roots.begin(), rs.simple_roots.end());
  while (!queue.empty()) {
    RationalVector r = queue.front();
    queue.pop_front();
    for (int i = 0; i < 6; ++i) {
      // In weight coordinates <x, alpha_i^vee> is just coordinate i.
      RationalVector img = sub(r, scale(rs.simple_roots[i], r[i]));
      if (roots.insert(img).second) queue.push_back(img);
    }
  }
  for (const auto& r : roots) {
    Rat p = 0;
    for (int i = 0; i < 6; ++i) p += r[i] * rs.aux_direction[i];
    if (p > 0) rs.positive_roots.push_back(r);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end());
  if (rs.positive_roots.size() != 36) throw internal_error("E6 root count");
  return rs;
}

}  // namespace

std::string lie_type_to_string(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::G2: return "G2";
    case LieType::E6: return "E6";
  }
  return "?";
}

std::string RootSystem::name() const {
  if (lie_type == LieType::G2 || lie_type == LieType::E6)
    return lie_type_to_string(lie_type);
  return lie_type_to_string(lie_type) + std::to_string(rank);
}

RootSystem build_root_system(LieType type, int rank) {
  RootSystem rs;
  switch (type) {
    case LieType::A:
      if (rank < 1 || rank > 6)
        throw validation_error("type A supported for rank 1..6");
      rs = build_type_a(rank);
      break;
    case LieType::C:
      if (rank != 3) throw validation_error("type C supported for rank 3 only");
      rs = build_c3();
      break;
    case LieType::D:
      if (rank != 5) throw validation_error("type D supported for rank 5 only");
      rs = build_d5();
      break;
    case LieType::G2:
      if (rank != 2) throw validation_error("G2 has rank 2");
      rs = build_g2();
      break;
    case LieType::E6:
      if (rank != 6) throw validation_error("E6 has rank 6");
      rs = build_e6();
      break;
    default:
      throw validation_error("unsupported Lie type " + lie_type_to_string(type));
  }
  for (const auto& a : rs.simple_roots) {
    RationalVector c(rs.dim, Rat(0));
    Rat norm = inner(rs, a, a);
    for (int i = 0; i < rs.dim; ++i) {
      Rat s = 0;
      for (int j = 0; j < rs.dim; ++j) s += rs.gram[i][j] * a[j];
      c[i] = Rat(2 * s / norm);
    }
    rs.simple_coroots.push_back(std::move(c));
  }
  check_positive_root_halfsum(rs);
  check_aux_regular(rs);
  for (const auto& a : rs.simple_roots)
    if (coroot_pairing(rs, rs.rho, a) != 1)
      throw internal_error("rho pairing with a simple coroot is not 1");
  return rs;
}

Rat pair(const RationalVector& v, const Coweight& mu) {
  if (v.size() != mu.size()) throw validation_error("pair: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * mu[i];
  return Rat(s);
}

Rat pair(const RationalVector& v, const RationalVector& mu) {
  if (v.size() != mu.size()) throw validation_error("pair: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * mu[i];
  return Rat(s);
}

Rat inner(const RootSystem& rs, const RationalVector& x, const RationalVector& y) {
  Rat s = 0;
  for (int i = 0; i < rs.dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rs.dim; ++j) {
      if (rs.gram[i][j] == 0 || y[j] == 0) continue;
      s += x[i] * rs.gram[i][j] * y[j];
    }
  }
  return Rat(s);
}

Rat coroot_pairing(const RootSystem& rs, const RationalVector& x, const RationalVector& alpha) {
  Rat num = Rat(2 * inner(rs, x, alpha));
  Rat den = inner(rs, alpha, alpha);
  return Rat(num / den);
}

RationalVector reflect(const RootSystem& rs, const RationalVector& x, const RationalVector& alpha) {
  return sub(x, scale(alpha, coroot_pairing(rs, x, alpha)));
}

RationalVector reflect_simple(const RootSystem& rs, const RationalVector& x, int i) {
  const RationalVector& c = rs.simple_coroots[i];
  Rat p = 0;
  for (int k = 0; k < rs.dim; ++k)
    if (c[k] != 0) p += x[k] * c[k];
  if (p == 0) return x;
  RationalVector r = x;
  const RationalVector& a = rs.simple_roots[i];
  for (int k = 0; k < rs.dim; ++k)
    if (a[k] != 0) r[k] -= p * a[k];
  return r;
}

bool is_dominant(const RootSystem& rs, const RationalVector& lambda) {
  for (const auto& a : rs.simple_roots)
    if (coroot_pairing(rs, lambda, a) < 0) return false;
  return true;
}

void require_dominant_weight(const RootSystem& rs, const RationalVector& lambda,
                             const std::string& where) {
  if (static_cast<int>(lambda.size()) != rs.dim)
    throw validation_error(where + ": weight has wrong dimension for " + rs.name());
  for (const auto& a : rs.simple_roots) {
    Rat p = coroot_pairing(rs, lambda, a);
    if (!is_integer(p))
      throw validation_error(where + ": weight " + vec_to_string(lambda) + " is not integral");
    if (p < 0)
      throw validation_error(where + ": weight " + vec_to_string(lambda) + " is not dominant");
  }
}

std::vector<WeylElement> weyl_group(const RootSystem& rs, std::size_t cap) {
  if (cap == 0) cap = env_weyl_cap();
  std::vector<Matrix> gens;
  for (const auto& a : rs.simple_roots) {
    Matrix m(rs.dim, RationalVector(rs.dim, Rat(0)));
    for (int c = 0; c < rs.dim; ++c) {
      RationalVector ec(rs.dim, Rat(0));
      ec[c] = 1;
      RationalVector img = reflect(rs, ec, a);
      for (int r = 0; r < rs.dim; ++r) m[r][c] = img[r];
    }
    gens.push_back(std::move(m));
  }
  std::map<Matrix, int> seen;  // matrix -> sign
  std::deque<Matrix> queue;
  seen[identity(rs.dim)] = 1;
  queue.push_back(identity(rs.dim));
  while (!queue.empty()) {
    Matrix m = queue.front();
    queue.pop_front();
    int sign = seen.at(m);
    for (const auto& g : gens) {
      Matrix next = mat_mul(g, m);
      auto [it, fresh] = seen.emplace(std::move(next), -sign);
      if (fresh) {
        if (seen.size() > cap)
          throw resource_error("Weyl closure exceeded cap " + std::to_string(cap));
        queue.push_back(it->first);
      }
    }
  }
  std::vector<WeylElement> out;
  out.reserve(seen.size());
  for (const auto& [m, sign] : seen) out.push_back(WeylElement{m, sign});
  return out;
}

std::vector<RationalVector> orbit(const RootSystem& rs, const RationalVector& v) {
  if (static_cast<int>(v.size()) != rs.dim)
    throw validation_error("orbit: vector has wrong dimension for " + rs.name());
  const std::size_t cap = env_weyl_cap();
  std::set<RationalVector> seen{v};
  std::deque<RationalVector> queue{v};
  while (!queue.empty()) {
    RationalVector x = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs.rank; ++i) {
      RationalVector img = reflect_simple(rs, x, i);
      if (seen.insert(img).second) {
        if (seen.size() > cap)
          throw resource_error("Weyl closure exceeded cap " + std::to_string(cap));
        queue.push_back(img);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::size_t weyl_order(const RootSystem& rs) { return orbit(rs, rs.rho).size(); }

std::vector<OrbitPoint> annotated_rho_orbit(const RootSystem& rs,
                                            const RationalVector& lambda) {
  if (static_cast<int>(lambda.size()) != rs.dim)
    throw validation_error("annotated_rho_orbit: weight dimension mismatch");
  // rho is regular, so w -> w(rho) is injective and the orbit walk visits
  // every group element exactly once.
  const std::size_t cap = env_weyl_cap();
  std::map<RationalVector, std::pair<RationalVector, int>> seen;
  std::deque<RationalVector> queue;
  seen[rs.rho] = {lambda, 1};
  queue.push_back(rs.rho);
  while (!queue.empty()) {
    RationalVector wr = queue.front();
    queue.pop_front();
    auto [wl, sign] = seen.at(wr);
    for (int i = 0; i < rs.rank; ++i) {
      RationalVector nr = reflect_simple(rs, wr, i);
      if (seen.find(nr) != seen.end()) continue;
      seen[nr] = {reflect_simple(rs, wl, i), -sign};
      if (seen.size() > cap)
        throw resource_error("Weyl closure exceeded cap " + std::to_string(cap));
      queue.push_back(nr);
    }
  }
  std::vector<OrbitPoint> out;
  out.reserve(seen.size());
  for (const auto& [wr, rest] : seen) out.push_back(OrbitPoint{wr, rest.first, rest.second});
  return out;
}

Int weyl_dim(const RootSystem& rs, const RationalVector& lambda) {
  require_dominant_weight(rs, lambda, "weyl_dim");
  RationalVector lr = add(lambda, rs.rho);
  Rat prod = 1;
  for (const auto& a : rs.positive_roots)
    prod *= inner(rs, lr, a) / inner(rs, rs.rho, a);
  if (!is_integer(prod)) throw internal_error("weyl_dim produced non-integer");
  return prod.get_num();
}

namespace {

RationalVector dominantize(const RootSystem& rs, RationalVector x) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank; ++i) {
      Rat p = 0;
      for (int k = 0; k < rs.dim; ++k) p += x[k] * rs.simple_coroots[i][k];
      if (p < 0) {
        for (int k = 0; k < rs.dim; ++k) x[k] -= p * rs.simple_roots[i][k];
        moved = true;
      }
    }
  }
  return x;
}

// c with diff = sum c_i alpha_i, all c_i nonnegative integers; nullopt otherwise.
std::optional<std::vector<long>> root_coordinates(const RootSystem& rs,
                                                  const RationalVector& diff) {
  auto c = solve_columns(rs.simple_roots, diff);
  if (!c) return std::nullopt;
  std::vector<long> out;
  for (const auto& ci : *c) {
    if (!is_integer(ci) || ci < 0) return std::nullopt;
    out.push_back(to_long(ci));
  }
  return out;
}

}  // namespace

WeightSystem weight_system(const RootSystem& rs, const RationalVector& lambda) {
  require_dominant_weight(rs, lambda, "weight_system");
  // Dominant weights mu <= lambda, found by subtracting positive roots and
  // reflecting back into the dominant chamber.
  std::map<RationalVector, std::vector<long>> dom;  // weight -> root coordinates
  std::deque<RationalVector> queue{lambda};
  dom[lambda] = std::vector<long>(rs.rank, 0);
  while (!queue.empty()) {
    RationalVector mu = queue.front();
    queue.pop_front();
    for (const auto& a : rs.positive_roots) {
      RationalVector nu = dominantize(rs, sub(mu, a));
      if (dom.find(nu) != dom.end()) continue;
      auto rc = root_coordinates(rs, sub(lambda, nu));
      if (!rc) continue;
      dom[nu] = *rc;
      queue.push_back(nu);
    }
  }
  // Freudenthal multiplicities, highest weight first (by height of lambda - mu).
  std::vector<RationalVector> order;
  for (const auto& [mu, rc] : dom) order.push_back(mu);
  auto height = [&](const RationalVector& mu) {
    long h = 0;
    for (long ci : dom.at(mu)) h += ci;
    return h;
  };
  std::sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
    long hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  std::map<RationalVector, Int> mult;
  RationalVector lr = add(lambda, rs.rho);
  Rat lr2 = inner(rs, lr, lr);
  Rat l2 = inner(rs, lambda, lambda);
  auto mult_of = [&](const RationalVector& x) -> Int {
    auto it = mult.find(dominantize(rs, x));
    return it == mult.end() ? Int(0) : it->second;
  };
  for (const auto& mu : order) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Rat acc = 0;
    for (const auto& a : rs.positive_roots) {
      RationalVector x = mu;
      while (true) {
        x = add(x, a);
        Int m = mult_of(x);
        if (m == 0) {
          // All weights lie in the ball of radius |lambda|, and the string
          // mu + k*alpha leaves the weight polytope for good once it exits.
          if (inner(rs, x, x) > l2) break;
          continue;
        }
        acc += Rat(m) * inner(rs, x, a);
      }
    }
    RationalVector mr = add(mu, rs.rho);
    Rat denom = Rat(lr2 - inner(rs, mr, mr));
    if (denom == 0) throw internal_error("Freudenthal denominator vanished");
    Rat m = Rat(2 * acc / denom);
    if (!is_integer(m) || m < 0) throw internal_error("non-integral Freudenthal multiplicity");
    mult[mu] = m.get_num();
  }
  // Expand each dominant weight into its orbit.
  std::map<RationalVector, long> all;
  for (const auto& [mu, m] : mult) {
    if (m == 0) continue;
    if (!m.fits_slong_p()) throw internal_error("weight multiplicity out of range");
    for (const auto& w : orbit(rs, mu)) all[w] = m.get_si();
  }
  WeightSystem ws;
  for (const auto& [w, m] : all) ws.lines.push_back(WeightLine{w, m});
  Int total = 0;
  for (const auto& l : ws.lines) total += l.multiplicity;
  if (total != weyl_dim(rs, lambda))
    throw internal_error("weight system total disagrees with Weyl dimension");
  return ws;
}

long WeightSystem::total() const {
  long t = 0;
  for (const auto& l : lines) t += l.multiplicity;
  return t;
}

int flag_dimension(const RootSystem& rs, const RationalVector& lambda) {
  require_dominant_weight(rs, lambda, "flag_dimension");
  int n = 0;
  for (const auto& a : rs.positive_roots)
    if (coroot_pairing(rs, lambda, a) != 0) ++n;
  return n;
}

}  // namespace wflag
