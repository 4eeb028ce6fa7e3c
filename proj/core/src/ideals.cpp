#include <wflag/ideals.hpp>

#include <algorithm>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>
#include <tuple>

#include <wflag/errors.hpp>

namespace wflag::detail {
const std::map<std::string, const char*>& embedded_data();
}

namespace wflag {

long MonomialOrder::weighted_degree(const Monomial& m) const {
  long d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += weights[i] * m[i];
  return d;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  long da = weighted_degree(a), db = weighted_degree(b);
  if (da != db) return da < db;
  if (kind == OrderKind::WGrevlex) {
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

const Monomial& leading_monomial(const Poly& p, const MonomialOrder& order) {
  if (p.empty()) throw internal_error("leading monomial of the zero polynomial");
  const Monomial* best = &p.begin()->first;
  for (const auto& [m, c] : p) {
    if (order.less(*best, m)) best = &m;
  }
  return *best;
}

namespace {

Monomial monomial_quotient(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Poly make_monic(Poly p, const MonomialOrder& order) {
  const Rat lc = p.at(leading_monomial(p, order));
  for (auto& [m, c] : p) {
    c /= lc;
    c.canonicalize();
  }
  return p;
}

// p -= c * x^shift * q
void sub_mul(Poly& p, const Rat& c, const Monomial& shift, const Poly& q) {
  for (const auto& [mq, cq] : q) {
    Monomial k(shift.size());
    for (std::size_t i = 0; i < k.size(); ++i) k[i] = shift[i] + mq[i];
    auto it = p.find(k);
    if (it == p.end()) {
      Rat v = -Rat(c * cq);
      v.canonicalize();
      if (v != 0) p.emplace(std::move(k), std::move(v));
    } else {
      it->second -= c * cq;
      it->second.canonicalize();
      if (it->second == 0) p.erase(it);
    }
  }
}

struct Reducer {
  const Monomial* lm;
  const Poly* poly;
};

// Full normal form against monic reducers, tried in the given order.
Poly normal_form(Poly p, const std::vector<Reducer>& basis, const MonomialOrder& order,
                 long& steps, long step_cap) {
  Poly out;
  while (!p.empty()) {
    const Monomial& m = leading_monomial(p, order);
    const Reducer* hit = nullptr;
    for (const Reducer& r : basis) {
      if (monomial_divides(*r.lm, m)) {
        hit = &r;
        break;
      }
    }
    if (hit == nullptr) {
      auto it = p.find(m);
      out.emplace(it->first, it->second);
      p.erase(it);
    } else {
      if (++steps > step_cap) {
        throw resource_error("polynomial reduction exceeded the step cap of " +
                             std::to_string(step_cap));
      }
      Rat c = p.at(m);
      sub_mul(p, c, monomial_quotient(m, *hit->lm), *hit->poly);
    }
  }
  return out;
}

Poly s_polynomial(const Poly& f, const Monomial& mf, const Poly& g, const Monomial& mg) {
  Monomial big = monomial_lcm(mf, mg);
  Poly s;
  sub_mul(s, Rat(-1), monomial_quotient(big, mf), f);  // s = x^(L-mf) * f
  sub_mul(s, Rat(1), monomial_quotient(big, mg), g);   // s -= x^(L-mg) * g
  return s;
}

}  // namespace

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const MonomialOrder& order,
                                 GroebnerStats* stats, long step_cap) {
  for (const Poly& g : gens) {
    for (const auto& [m, c] : g) {
      if (m.size() != order.weights.size()) {
        throw validation_error("monomial arity does not match the number of weights");
      }
    }
  }
  long steps = 0;
  long spairs = 0;

  std::vector<Poly> basis;
  std::vector<Monomial> lms;
  for (const Poly& g : gens) {
    if (g.empty()) continue;
    basis.push_back(make_monic(g, order));
    lms.push_back(leading_monomial(basis.back(), order));
  }

  // Pending S-pairs, smallest lcm first (ties by index pair).
  struct PairKey {
    Monomial lcm;
    int i, j;
  };
  auto pair_less = [&order](const PairKey& a, const PairKey& b) {
    if (a.lcm != b.lcm) {
      if (order.less(a.lcm, b.lcm)) return true;
      if (order.less(b.lcm, a.lcm)) return false;
      return a.lcm < b.lcm;  // stable tiebreak for order-equal monomials
    }
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<PairKey, decltype(pair_less)> pending(pair_less);
  std::set<std::pair<int, int>> done;
  auto push_pair = [&](int i, int j) {
    pending.insert(PairKey{monomial_lcm(lms[i], lms[j]), i, j});
  };
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) push_pair(static_cast<int>(j), static_cast<int>(i));
  }

  while (!pending.empty()) {
    PairKey top = *pending.begin();
    pending.erase(pending.begin());
    int i = top.i, j = top.j;
    done.insert({i, j});
    ++spairs;

    // Product criterion: coprime leading monomials reduce to zero.
    bool coprime = true;
    for (std::size_t k = 0; k < top.lcm.size(); ++k) {
      if (lms[i][k] > 0 && lms[j][k] > 0) {
        coprime = false;
        break;
      }
    }
    if (coprime) continue;

    // Chain criterion: a third element dividing the lcm whose pairs with i
    // and j are both already handled makes this pair redundant.
    bool redundant = false;
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
      if (k == i || k == j) continue;
      if (!monomial_divides(lms[k], top.lcm)) continue;
      std::pair<int, int> a{std::min(i, k), std::max(i, k)};
      std::pair<int, int> b{std::min(j, k), std::max(j, k)};
      if (done.count(a) && done.count(b)) {
        redundant = true;
        break;
      }
    }
    if (redundant) continue;

    std::vector<Reducer> reducers;
    reducers.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) reducers.push_back({&lms[k], &basis[k]});
    Poly r = normal_form(s_polynomial(basis[i], lms[i], basis[j], lms[j]), reducers, order,
                         steps, step_cap);
    if (!r.empty()) {
      basis.push_back(make_monic(std::move(r), order));
      lms.push_back(leading_monomial(basis.back(), order));
      int n = static_cast<int>(basis.size()) - 1;
      for (int k = 0; k < n; ++k) push_pair(k, n);
    }
  }

  // Minimalize: drop elements whose leading monomial is divisible by
  // another's (duplicates keep the earliest).
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < basis.size() && !drop; ++j) {
      if (j == i || !monomial_divides(lms[j], lms[i])) continue;
      if (lms[j] != lms[i] || j < i) drop = true;
    }
    if (!drop) keep.push_back(i);
  }

  // Tail-reduce every survivor against the others.
  std::vector<Poly> reduced;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    std::vector<Reducer> others;
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (b != a) others.push_back({&lms[keep[b]], &basis[keep[b]]});
    }
    Poly r = normal_form(basis[keep[a]], others, order, steps, step_cap);
    if (!r.empty()) reduced.push_back(make_monic(std::move(r), order));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& x, const Poly& y) {
    const Monomial& mx = leading_monomial(x, order);
    const Monomial& my = leading_monomial(y, order);
    if (mx != my) return order.less(mx, my);
    return x < y;
  });

  if (stats != nullptr) {
    stats->basis_size = reduced.size();
    stats->spairs_processed = spairs;
    stats->reduction_steps = steps;
  }
  return reduced;
}

namespace {

using UniPoly = std::map<long, Int>;  // exponent -> integer coefficient

void uni_add_shifted(UniPoly& a, const UniPoly& b, long shift) {
  for (const auto& [d, c] : b) {
    Int& slot = a[d + shift];
    slot += c;
    if (slot == 0) a.erase(d + shift);
  }
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  for (const auto& [d1, c1] : a) {
    for (const auto& [d2, c2] : b) {
      Int& slot = r[d1 + d2];
      slot += c1 * c2;
      if (slot == 0) r.erase(d1 + d2);
    }
  }
  return r;
}

// Divisibility-minimal subset, sorted ascending.
std::vector<Monomial> minimal_monomials(std::vector<Monomial> ms) {
  std::stable_sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });
  std::vector<Monomial> out;
  for (const Monomial& m : ms) {
    bool covered = false;
    for (const Monomial& o : out) {
      if (monomial_divides(o, m)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Numerator of the Hilbert series of S/(monomial ideal) over the product of
// (1 - t^{w_i}), by splitting off a variable shared between generators.
struct MonomialHilbert {
  const std::vector<long>& weights;
  std::map<std::vector<Monomial>, UniPoly> memo;

  UniPoly run(std::vector<Monomial> gens) {
    gens = minimal_monomials(std::move(gens));
    auto it = memo.find(gens);
    if (it != memo.end()) return it->second;

    UniPoly res;
    const std::size_t n = weights.size();
    std::vector<int> occ(n, 0);
    for (const Monomial& m : gens) {
      for (std::size_t i = 0; i < n; ++i) {
        if (m[i] > 0) occ[i] += 1;
      }
    }
    int pivot = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (occ[i] >= 2 && (pivot < 0 || occ[i] > occ[pivot])) pivot = static_cast<int>(i);
    }
    if (pivot < 0) {
      // Pairwise coprime generators: a monomial complete intersection.
      res[0] = 1;
      for (const Monomial& m : gens) {
        long d = 0;
        for (std::size_t i = 0; i < n; ++i) d += weights[i] * m[i];
        UniPoly factor;
        factor[0] = 1;
        factor[d] -= 1;
        res = uni_mul(res, factor);
      }
    } else {
      Monomial x(n, 0);
      x[pivot] = 1;
      std::vector<Monomial> plus;
      std::vector<Monomial> colon;
      for (const Monomial& m : gens) {
        if (m[pivot] == 0) {
          plus.push_back(m);
          colon.push_back(m);
        } else {
          Monomial q = m;
          q[pivot] -= 1;
          colon.push_back(std::move(q));
        }
      }
      plus.push_back(x);
      res = run(std::move(plus));
      uni_add_shifted(res, run(std::move(colon)), weights[pivot]);
    }
    memo.emplace(std::move(gens), res);
    return res;
  }
};

}  // namespace

HilbertSeries quotient_hilbert_series(const std::vector<Poly>& gens,
                                      const std::vector<long>& weights, OrderKind kind,
                                      long step_cap) {
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 1) {
      throw validation_error("variable weight " + std::to_string(weights[i]) +
                             " at position " + std::to_string(i + 1) + " must be positive");
    }
  }
  MonomialOrder order{weights, kind};
  std::vector<Poly> basis = groebner_basis(gens, order, nullptr, step_cap);
  std::vector<Monomial> initial;
  initial.reserve(basis.size());
  for (const Poly& g : basis) initial.push_back(leading_monomial(g, order));

  MonomialHilbert mh{weights, {}};
  UniPoly numerator = mh.run(std::move(initial));

  HilbertSeries hs;
  for (const auto& [d, c] : numerator) hs.numerator.add_term(d, Rat(c));
  if (hs.numerator.coeff(0) != 1) {
    throw internal_error("quotient Hilbert numerator is not normalized");
  }
  hs.denom_exponents = weights;
  std::sort(hs.denom_exponents.begin(), hs.denom_exponents.end());
  return hs;
}

namespace {

IdealData parse_ideal(const std::string& id, const char* text) {
  nlohmann::json j = nlohmann::json::parse(text);
  IdealData data;
  data.id = id;
  data.variables = j.at("variables").get<int>();
  for (const auto& gen : j.at("generators")) {
    Poly p;
    for (const auto& term : gen.at("terms")) {
      Monomial m = term.at("monomial").get<Monomial>();
      if (static_cast<int>(m.size()) != data.variables) {
        throw internal_error("ideal '" + id + "': monomial arity mismatch");
      }
      p[std::move(m)] = rat_from_string(term.at("coeff").get<std::string>());
    }
    data.generator_names.push_back(gen.at("name").get<std::string>());
    data.generators.push_back(std::move(p));
  }
  if (j.contains("gradings")) {
    for (const auto& [name, arr] : j.at("gradings").items()) {
      auto w = arr.get<std::vector<long>>();
      if (static_cast<int>(w.size()) != data.variables) {
        throw internal_error("ideal '" + id + "': grading arity mismatch");
      }
      data.gradings[name] = std::move(w);
    }
  }
  return data;
}

const std::map<std::string, IdealData>& ideal_table() {
  static const std::map<std::string, IdealData> table = [] {
    std::map<std::string, IdealData> t;
    for (const auto& [key, text] : detail::embedded_data()) {
      constexpr const char* prefix = "ideal_";
      if (key.rfind(prefix, 0) == 0) {
        std::string id = key.substr(6);
        t.emplace(id, parse_ideal(id, text));
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

const IdealData& defining_ideal(const std::string& id) {
  const auto& table = ideal_table();
  auto it = table.find(id);
  if (it == table.end()) throw validation_error("no defining ideal recorded for '" + id + "'");
  return it->second;
}

std::vector<std::string> defining_ideal_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, data] : ideal_table()) ids.push_back(id);
  return ids;
}

std::vector<long> homogeneous_degrees(const IdealData& ideal, const std::vector<long>& weights) {
  if (static_cast<int>(weights.size()) != ideal.variables) {
    throw validation_error("expected " + std::to_string(ideal.variables) +
                           " variable weights, got " + std::to_string(weights.size()));
  }
  MonomialOrder order{weights, OrderKind::WGrevlex};
  std::vector<long> degrees;
  for (std::size_t k = 0; k < ideal.generators.size(); ++k) {
    const Poly& g = ideal.generators[k];
    long deg = 0;
    bool first = true;
    for (const auto& [m, c] : g) {
      long d = order.weighted_degree(m);
      if (first) {
        deg = d;
        first = false;
      } else if (d != deg) {
        throw validation_error("generator " + ideal.generator_names[k] +
                               " is not homogeneous for the given grading");
      }
    }
    degrees.push_back(deg);
  }
  return degrees;
}

std::vector<Poly> restrict_to_stratum(const std::vector<Poly>& gens,
                                      const std::vector<bool>& keep) {
  std::vector<Poly> out;
  for (const Poly& g : gens) {
    Poly r;
    for (const auto& [m, c] : g) {
      bool inside = true;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] > 0 && !keep[i]) {
          inside = false;
          break;
        }
      }
      if (inside) r.emplace(m, c);
    }
    if (!r.empty()) out.push_back(std::move(r));
  }
  return out;
}

bool pure_power_present(const std::vector<Poly>& gens, int var, int degree) {
  for (const Poly& g : gens) {
    for (const auto& [m, c] : g) {
      bool pure = true;
      for (std::size_t i = 0; i < m.size(); ++i) {
        int want = (static_cast<int>(i) == var) ? degree : 0;
        if (m[i] != want) {
          pure = false;
          break;
        }
      }
      if (pure) return true;
    }
  }
  return false;
}

}  // namespace wflag
