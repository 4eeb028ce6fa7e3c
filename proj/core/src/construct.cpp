#include <wflag/construct.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <numeric>
#include <thread>

#include <wflag/errors.hpp>

namespace wflag {

namespace {

constexpr long kExpansionOrder = 30;
constexpr const char* kCandidateNote = "candidate, unverified singularities";

long total_weight(const std::vector<long>& ws) {
  return std::accumulate(ws.begin(), ws.end(), 0L);
}

void refresh_invariants(Polarized& p) {
  p.weights = p.series.denom_exponents;
  SymmetryReport sym = numerator_symmetry_check(p.series);
  p.palindromic = sym.palindromic;
  p.canonical_degree = sym.adjunction - total_weight(p.weights);
}

}  // namespace

Polarized polarize(const WeightedVariety& base) {
  Polarized p;
  p.entry_id = base.entry_id;
  p.mu = base.mu;
  p.u = base.u;
  p.dim = base.dim;
  p.series = base.series;
  refresh_invariants(p);
  return p;
}

Polarized cone(const Polarized& p, long weight) {
  if (weight < 1) {
    throw validation_error("cone weight must be a positive integer, got " +
                           std::to_string(weight));
  }
  Polarized q = p;
  q.cone_weights.push_back(weight);
  q.dim += 1;
  auto& de = q.series.denom_exponents;
  de.insert(std::upper_bound(de.begin(), de.end(), weight), weight);
  refresh_invariants(q);
  return q;
}

Polarized section(const Polarized& p, long degree, bool allow_general) {
  if (degree < 1) {
    throw validation_error("section degree must be a positive integer, got " +
                           std::to_string(degree));
  }
  if (p.dim < 1) throw validation_error("cannot take a section of a zero-dimensional variety");
  Polarized q = p;
  q.section_degrees.push_back(degree);
  q.dim -= 1;
  auto& de = q.series.denom_exponents;
  auto it = std::find(de.begin(), de.end(), degree);
  if (it != de.end()) {
    de.erase(it);  // quasilinear: the coordinate of this degree is eliminated
  } else if (allow_general) {
    q.series.numerator = q.series.numerator * (LaurentPoly::one() - LaurentPoly::term(degree, 1));
  } else {
    throw validation_error("no ambient coordinate of degree " + std::to_string(degree) +
                           "; a general section must be requested explicitly");
  }
  refresh_invariants(q);
  return q;
}

bool wellformed_wps(const std::vector<long>& weights) {
  const std::size_t n = weights.size();
  for (std::size_t drop = 0; drop < n; ++drop) {
    long g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != drop) g = std::gcd(g, weights[i]);
    }
    if (g != 1) return false;
  }
  return true;
}

namespace {

// Gradings mu with entries in [0, bound] that pair nonnegatively with every
// simple root, in ascending lexicographic order.
std::vector<Coweight> dominant_gradings(const RootSystem& rs, long bound) {
  std::vector<Coweight> out;
  Coweight mu(rs.dim, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == rs.dim) {
      for (const auto& alpha : rs.simple_roots) {
        Rat d(0);
        for (int i = 0; i < rs.dim; ++i) d += alpha[i] * Rat(mu[i]);
        if (d < 0) return;
      }
      out.push_back(mu);
      return;
    }
    for (long a = 0; a <= bound; ++a) {
      mu[pos] = a;
      rec(pos + 1);
    }
    mu[pos] = 0;
  };
  rec(0);
  return out;
}

// Multisets of size k drawn from the available degrees, nondecreasing.
void for_each_section_multiset(const std::vector<long>& distinct,
                               const std::vector<long>& avail_counts, int k,
                               const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      fn(current);
      return;
    }
    for (std::size_t i = from; i < distinct.size(); ++i) {
      long used = std::count(current.begin(), current.end(), distinct[i]);
      if (used >= avail_counts[i]) continue;
      current.push_back(distinct[i]);
      rec(i, left - 1);
      current.pop_back();
    }
  };
  rec(0, k);
}

struct SearchTask {
  Coweight mu;
  long u = 0;
};

std::vector<Candidate> run_task(const CatalogEntry& entry, const RootSystem& rs,
                                const WeightSystem& nabla, const SearchTask& task,
                                const SearchParams& params) {
  std::vector<Candidate> found;
  HilbertSeries hs = hilbert_series_weyl(rs, entry.lambda, task.mu, task.u, nabla);
  const std::vector<long>& base_weights = hs.denom_exponents;
  long base_k = numerator_symmetry_check(hs).adjunction - total_weight(base_weights);

  for (int ncones = 0; ncones <= 2; ++ncones) {
    long dim = entry.dim + ncones;
    int nsec = static_cast<int>(dim - 3);
    if (nsec < 0 || nsec > params.max_sections) continue;

    std::vector<long> avail = base_weights;
    avail.insert(avail.end(), ncones, 1);
    std::sort(avail.begin(), avail.end());
    std::vector<long> distinct = avail;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<long> counts;
    for (long d : distinct) counts.push_back(std::count(avail.begin(), avail.end(), d));

    for_each_section_multiset(distinct, counts, nsec, [&](const std::vector<long>& secs) {
      long k_final = base_k - ncones + total_weight(secs);
      if (params.target == SearchTarget::CY3 && k_final != 0) return;
      if (params.target == SearchTarget::Fano3 && k_final >= 0) return;

      std::vector<long> ambient = avail;
      for (long d : secs) ambient.erase(std::find(ambient.begin(), ambient.end(), d));
      if (!wellformed_wps(ambient)) return;

      HilbertSeries cut{hs.numerator, ambient};
      if (!try_expand(cut, kExpansionOrder)) return;

      Candidate c;
      c.mu = task.mu;
      c.u = task.u;
      c.cones = ncones;
      c.sections = secs;
      c.ambient = std::move(ambient);
      c.canonical_degree = k_final;
      c.note = kCandidateNote;
      found.push_back(std::move(c));
    });
  }
  return found;
}

}  // namespace

std::vector<Candidate> search(const CatalogEntry& entry, const SearchParams& params) {
  if (params.jobs < 1) throw validation_error("jobs must be at least 1");
  if (params.mu_bound < 0) throw validation_error("mu bound must be nonnegative");
  if (params.max_sections < 0) throw validation_error("max sections must be nonnegative");

  RootSystem rs = build_root_system(entry.lie_type, entry.rank);
  WeightSystem nabla = weight_system(rs, entry.lambda);

  // Grid of (mu, u) tasks.  Gradings where some coordinate degree is not an
  // integer are skipped: no integral shift of u can repair them.
  std::vector<SearchTask> tasks;
  for (const Coweight& mu : dominant_gradings(rs, params.mu_bound)) {
    bool integral = true;
    long min_pairing = 0;
    bool first = true;
    for (const auto& line : nabla.lines) {
      Rat d(0);
      for (int i = 0; i < rs.dim; ++i) d += line.weight[i] * Rat(mu[i]);
      if (!is_integer(d)) {
        integral = false;
        break;
      }
      long v = to_long(d);
      if (first || v < min_pairing) min_pairing = v;
      first = false;
    }
    if (!integral) continue;
    long u_min = 1 - min_pairing;
    for (long u = u_min; u <= params.u_bound; ++u) tasks.push_back({mu, u});
  }

  std::vector<std::vector<Candidate>> results(tasks.size());
  int jobs = std::min<int>(params.jobs, static_cast<int>(tasks.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      results[i] = run_task(entry, rs, nabla, tasks[i], params);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            results[i] = run_task(entry, rs, nabla, tasks[i], params);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<Candidate> all;
  for (auto& r : results) {
    for (auto& c : r) all.push_back(std::move(c));
  }
  std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.mu, a.u, a.cones, a.sections) < std::tie(b.mu, b.u, b.cones, b.sections);
  });
  return all;
}

}  // namespace wflag
