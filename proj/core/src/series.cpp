#include "wflag/series.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

#include "wflag/errors.hpp"

namespace wflag {

namespace {

// ---------------------------------------------------------------------------
// Bivariate Laurent polynomials in (t, x), dense in x per t-exponent.
// x carries the auxiliary regular direction that keeps the Weyl denominator
// nonzero when the mu-grading is degenerate; it is substituted to 1 at the
// end. Coefficients stay integral throughout the pipeline.

struct XPoly {
  long off = 0;
  std::vector<Int> c;  // c.front() and c.back() nonzero unless empty

  void trim() {
    std::size_t lo = 0, hi = c.size();
    while (lo < hi && c[lo] == 0) ++lo;
    while (hi > lo && c[hi - 1] == 0) --hi;
    if (lo == hi) {
      c.clear();
      off = 0;
      return;
    }
    if (lo > 0 || hi < c.size()) {
      std::vector<Int> nc(c.begin() + lo, c.begin() + hi);
      c = std::move(nc);
      off += static_cast<long>(lo);
    }
  }

  // Grow to cover [lo, hi] inclusive.
  void span(long lo, long hi) {
    if (c.empty()) {
      off = lo;
      c.assign(static_cast<std::size_t>(hi - lo + 1), Int(0));
      return;
    }
    long cur_hi = off + static_cast<long>(c.size()) - 1;
    if (lo < off) {
      std::vector<Int> nc(static_cast<std::size_t>(off - lo), Int(0));
      nc.insert(nc.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
      c = std::move(nc);
      off = lo;
    }
    if (hi > cur_hi) c.resize(c.size() + static_cast<std::size_t>(hi - cur_hi), Int(0));
  }
};

using BiPoly = std::map<long, XPoly>;  // t-exponent -> x-polynomial

bool bp_zero(const BiPoly& p) { return p.empty(); }

void bp_add_term(BiPoly& p, long te, long xe, long v) {
  if (v == 0) return;
  XPoly& row = p[te];
  row.span(std::min(row.c.empty() ? xe : row.off, xe),
           std::max(row.c.empty() ? xe : row.off + static_cast<long>(row.c.size()) - 1, xe));
  row.c[static_cast<std::size_t>(xe - row.off)] += v;
}

void bp_cleanup(BiPoly& p) {
  for (auto it = p.begin(); it != p.end();) {
    it->second.trim();
    if (it->second.c.empty())
      it = p.erase(it);
    else
      ++it;
  }
}

// dst += a * b (single row pair).
void row_addmul(XPoly& dst, const XPoly& a, const XPoly& b) {
  if (a.c.empty() || b.c.empty()) return;
  long lo = a.off + b.off;
  long hi = lo + static_cast<long>(a.c.size() + b.c.size()) - 2;
  dst.span(lo, hi);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    std::size_t base = static_cast<std::size_t>(a.off + b.off - dst.off) + i;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j] == 0) continue;
      mpz_addmul(dst.c[base + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
  }
}

BiPoly bp_mul(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ta, ra] : a)
    for (const auto& [tb, rb] : b) row_addmul(r[ta + tb], ra, rb);
  bp_cleanup(r);
  return r;
}

// p *= (1 - t^dt x^dx).
BiPoly bp_mul_binomial(const BiPoly& p, long dt, long dx) {
  BiPoly r = p;
  for (const auto& [te, row] : p) {
    XPoly& dst = r[te + dt];
    long lo = row.off + dx;
    long hi = lo + static_cast<long>(row.c.size()) - 1;
    dst.span(std::min(dst.c.empty() ? lo : dst.off, lo),
             std::max(dst.c.empty() ? hi : dst.off + static_cast<long>(dst.c.size()) - 1, hi));
    for (std::size_t i = 0; i < row.c.size(); ++i)
      dst.c[static_cast<std::size_t>(lo - dst.off) + i] -= row.c[i];
  }
  bp_cleanup(r);
  return r;
}

struct BiTerm {
  long te = 0;
  long xe = 0;
  const Int* coeff = nullptr;
};

BiTerm bp_leading(const BiPoly& p) {
  auto it = p.rbegin();
  const XPoly& row = it->second;
  return BiTerm{it->first, row.off + static_cast<long>(row.c.size()) - 1, &row.c.back()};
}

// r -= q * t^dt x^dx * b; trims affected rows.
void bp_submul_shifted(BiPoly& r, const Int& q, long dt, long dx, const BiPoly& b) {
  for (const auto& [tb, rowb] : b) {
    XPoly& dst = r[tb + dt];
    long lo = rowb.off + dx;
    long hi = lo + static_cast<long>(rowb.c.size()) - 1;
    dst.span(std::min(dst.c.empty() ? lo : dst.off, lo),
             std::max(dst.c.empty() ? hi : dst.off + static_cast<long>(dst.c.size()) - 1, hi));
    for (std::size_t i = 0; i < rowb.c.size(); ++i) {
      if (rowb.c[i] == 0) continue;
      mpz_submul(dst.c[static_cast<std::size_t>(lo - dst.off) + i].get_mpz_t(),
                 q.get_mpz_t(), rowb.c[i].get_mpz_t());
    }
    dst.trim();
    if (dst.c.empty()) r.erase(tb + dt);
  }
}

// Exact quotient a / b in Z[t^{+-1}, x^{+-1}] by leading-term peeling in
// lexicographic (t, x) order. Throws internal_error if the division is not
// exact; exactness is a mathematical invariant of the callers.
BiPoly bp_exact_div(const BiPoly& a, const BiPoly& b) {
  if (bp_zero(b)) throw internal_error("bp_exact_div by zero");
  BiPoly r = a, q;
  BiTerm lb = bp_leading(b);
  long steps = 0, cap = 1000;
  if (!bp_zero(a)) {
    long dt = a.rbegin()->first - a.begin()->first + 1;
    long xlo = a.begin()->second.off, xhi = xlo;
    for (const auto& [te, row] : a) {
      xlo = std::min(xlo, row.off);
      xhi = std::max(xhi, row.off + static_cast<long>(row.c.size()) - 1);
    }
    cap += 4 * dt * (xhi - xlo + 1);
  }
  while (!bp_zero(r)) {
    if (++steps > cap) throw internal_error("nonzero remainder in bp_exact_div");
    BiTerm lr = bp_leading(r);
    Int qc;
    if (!mpz_divisible_p(lr.coeff->get_mpz_t(), lb.coeff->get_mpz_t()))
      throw internal_error("nonzero remainder in bp_exact_div");
    mpz_divexact(qc.get_mpz_t(), lr.coeff->get_mpz_t(), lb.coeff->get_mpz_t());
    long dt = lr.te - lb.te, dx = lr.xe - lb.xe;
    bp_add_term(q, dt, dx, 0);  // ensure row exists before adding big value
    {
      XPoly& row = q[dt];
      row.span(std::min(row.c.empty() ? dx : row.off, dx),
               std::max(row.c.empty() ? dx : row.off + static_cast<long>(row.c.size()) - 1, dx));
      row.c[static_cast<std::size_t>(dx - row.off)] += qc;
    }
    bp_submul_shifted(r, qc, dt, dx, b);
  }
  bp_cleanup(q);
  return q;
}

// Substitute x = 1.
LaurentPoly bp_collapse(const BiPoly& p) {
  LaurentPoly out;
  for (const auto& [te, row] : p) {
    Int s = 0;
    for (const auto& v : row.c) s += v;
    if (s != 0) out.coeffs[te] = Rat(s);
  }
  return out;
}

long dot_cw(const RationalVector& v, const Coweight& w, const char* what) {
  Rat s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
  if (!is_integer(s))
    throw validation_error(std::string(what) + " pairing is not integral for weight " +
                           vec_to_string(v));
  return to_long(Rat(s));
}

}  // namespace

HilbertSeries hilbert_series_weyl(const RootSystem& rs, const RationalVector& lambda,
                                  const Coweight& mu, long u, const WeightSystem& nabla) {
  require_dominant_weight(rs, lambda, "hilbert_series_weyl");
  if (static_cast<int>(mu.size()) != rs.dim)
    throw validation_error("hilbert_series_weyl: mu has wrong dimension for " + rs.name());
  if (nabla.lines.empty()) throw validation_error("hilbert_series_weyl: empty nabla");

  // Denominator data: one (t, x) exponent pair per nabla line.
  struct Line {
    const WeightLine* src;
    long te, xe;
  };
  std::vector<Line> lines;
  for (const auto& l : nabla.lines) {
    if (static_cast<int>(l.weight.size()) != rs.dim)
      throw validation_error("hilbert_series_weyl: nabla weight dimension mismatch");
    Rat tv = Rat(pair(l.weight, RationalVector(mu.begin(), mu.end())) + u);
    if (!is_integer(tv) || tv <= 0)
      throw validation_error("weight " + vec_to_string(l.weight) +
                             " gives non-positive or non-integral exponent " + rat_to_string(tv));
    lines.push_back(Line{&l, to_long(tv), dot_cw(l.weight, rs.aux_direction, "auxiliary")});
  }

  // Alternating rho-sum B and the classes of the orbit of lambda.
  auto ann = annotated_rho_orbit(rs, lambda);
  BiPoly B;
  std::map<RationalVector, BiPoly> cls;
  RationalVector mu_r(mu.begin(), mu.end());
  for (const auto& p : ann) {
    long tr = dot_cw(p.w_rho, mu, "mu");
    long xr = dot_cw(p.w_rho, rs.aux_direction, "auxiliary");
    bp_add_term(B, tr, xr, p.sign);
    bp_add_term(cls[p.w_lambda], tr, xr, p.sign);
  }
  bp_cleanup(B);
  if (bp_zero(B)) throw internal_error("Weyl denominator vanished");

  // Exponents of the orbit points, which must all occur in nabla.
  std::vector<std::pair<long, long>> theta_exp;
  std::vector<const RationalVector*> thetas;
  for (const auto& [theta, c] : cls) {
    bool found = false;
    for (const auto& l : lines)
      if (l.src->weight == theta) {
        found = true;
        theta_exp.emplace_back(l.te, l.xe);
        thetas.push_back(&theta);
        break;
      }
    if (!found)
      throw validation_error("nabla does not contain the orbit weight " + vec_to_string(theta));
  }

  // T = prod over the orbit of (1 - t^.. x^..); A = sum_theta cls_theta * T/(1-Y_theta).
  BiPoly T;
  bp_add_term(T, 0, 0, 1);
  for (auto [te, xe] : theta_exp) T = bp_mul_binomial(T, te, xe);
  BiPoly A;
  for (std::size_t k = 0; k < thetas.size(); ++k) {
    BiPoly factor;
    bp_add_term(factor, 0, 0, 1);
    bp_add_term(factor, theta_exp[k].first, theta_exp[k].second, -1);
    BiPoly quot = bp_exact_div(T, factor);
    BiPoly contrib = bp_mul(cls.at(*thetas[k]), quot);
    for (auto& [te, row] : contrib) {
      XPoly& dst = A[te];
      long lo = row.off, hi = row.off + static_cast<long>(row.c.size()) - 1;
      dst.span(std::min(dst.c.empty() ? lo : dst.off, lo),
               std::max(dst.c.empty() ? hi : dst.off + static_cast<long>(dst.c.size()) - 1, hi));
      for (std::size_t i = 0; i < row.c.size(); ++i)
        dst.c[static_cast<std::size_t>(lo - dst.off) + i] += row.c[i];
    }
  }
  bp_cleanup(A);

  // Orbit-form numerator, then the remaining nabla factors.
  BiPoly N = bp_exact_div(A, B);
  for (const auto& l : lines) {
    long copies = l.src->multiplicity;
    for (const auto* th : thetas)
      if (*th == l.src->weight) {
        copies -= 1;
        break;
      }
    for (long k = 0; k < copies; ++k) N = bp_mul_binomial(N, l.te, l.xe);
  }

  HilbertSeries hs;
  hs.numerator = bp_collapse(N);
  if (hs.numerator.is_zero() || hs.numerator.low_degree() != 0 || hs.numerator.coeff(0) != 1)
    throw internal_error("numerator not normalized: " + hs.numerator.to_string());
  for (const auto& l : lines)
    for (long k = 0; k < l.src->multiplicity; ++k) hs.denom_exponents.push_back(l.te);
  std::sort(hs.denom_exponents.begin(), hs.denom_exponents.end());
  return hs;
}

std::optional<std::vector<Int>> try_expand(const HilbertSeries& hs, long n_max) {
  if (n_max < 0) throw validation_error("expand: negative order");
  if (hs.numerator.is_zero()) return std::vector<Int>(n_max + 1, Int(0));
  if (hs.numerator.low_degree() < 0) return std::nullopt;
  std::vector<Rat> h(static_cast<std::size_t>(n_max) + 1, Rat(0));
  for (const auto& [e, c] : hs.numerator.coeffs)
    if (e <= n_max) h[static_cast<std::size_t>(e)] = c;
  for (long d : hs.denom_exponents) {
    if (d <= 0) return std::nullopt;
    for (long i = d; i <= n_max; ++i)
      h[static_cast<std::size_t>(i)] += h[static_cast<std::size_t>(i - d)];
  }
  std::vector<Int> out;
  out.reserve(h.size());
  for (const auto& v : h) {
    if (!is_integer(v) || v < 0) return std::nullopt;
    out.push_back(v.get_num());
  }
  return out;
}

std::vector<Int> expand(const HilbertSeries& hs, long n_max) {
  auto r = try_expand(hs, n_max);
  if (!r)
    throw validation_error("expand: series has a fractional or negative coefficient");
  return *r;
}

SymmetryReport numerator_symmetry_check(const HilbertSeries& hs) {
  SymmetryReport rep;
  if (hs.numerator.is_zero()) return rep;
  long lo = hs.numerator.low_degree(), hi = hs.numerator.high_degree();
  rep.adjunction = hi;
  rep.palindromic = true;
  for (long e = lo; e <= hi; ++e) {
    Rat a = hs.numerator.coeff(e), b = hs.numerator.coeff(hi - (e - lo));
    if (a < 0) a = Rat(-a);
    if (b < 0) b = Rat(-b);
    if (a != b) {
      rep.palindromic = false;
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Closed forms. Exponent vectors are over the grading coweight entries;
// evaluation maps an exponent vector e to the monomial t^{<e,mu>}.

namespace {

using ExpTerm = std::pair<std::vector<long>, long>;  // exponent vector, coefficient

LaurentPoly eval_terms(const std::vector<ExpTerm>& terms, const Coweight& mu) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) {
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * mu[i];
    p.add_term(d, Rat(c));
  }
  return p;
}

// Both signs of every vector.
void sym2(std::vector<ExpTerm>& out, const std::vector<std::vector<long>>& vals, long c = 1) {
  for (const auto& v : vals) {
    out.emplace_back(v, c);
    std::vector<long> n(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) n[i] = -v[i];
    out.emplace_back(std::move(n), c);
  }
}

void require_dominant_cw(const Coweight& mu, const char* where) {
  for (std::size_t i = 0; i + 1 < mu.size(); ++i)
    if (mu[i] < mu[i + 1])
      throw validation_error(std::string(where) + ": grading coweight must be nonincreasing");
  if (!mu.empty() && mu.back() < 0)
    throw validation_error(std::string(where) + ": grading coweight must be nonnegative");
}

void push_denominators(HilbertSeries& hs, const std::vector<long>& raw, const char* where) {
  for (long e : raw) {
    if (e <= 0)
      throw validation_error(std::string(where) + ": nonpositive variety weight " +
                             std::to_string(e));
    hs.denom_exponents.push_back(e);
  }
  std::sort(hs.denom_exponents.begin(), hs.denom_exponents.end());
}

}  // namespace

// Corrections applied relative to the published display:
//  - the next-to-last block carries t^{8u}, not t^{9u};
//  - the constant blocks P1(0)=21, P2(0)=64, P3(0)=70; in P3 the product
//    blocks group as [t^{a_i+2a_j} sums] * [sum over both signs of a_3-type
//    singles] plus [t^{a_1+-a_2} block] * [both signs of 2a_3], with a
//    trailing +4.
HilbertSeries compact_lgr36(const Coweight& mu, long u) {
  if (mu.size() != 3) throw validation_error("compact_lgr36: mu must have 3 entries");
  require_dominant_cw(mu, "compact_lgr36");

  std::vector<ExpTerm> p1, p2, p3;
  // P1: all nine ordered differences a_i - a_j, plus both signs of a_i + a_j
  // over i <= j.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::vector<long> e(3, 0);
      e[i] += 1;
      e[j] -= 1;
      p1.emplace_back(std::move(e), 1);
    }
  {
    std::vector<std::vector<long>> vals;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        std::vector<long> e(3, 0);
        e[i] += 1;
        e[j] += 1;
        vals.push_back(std::move(e));
      }
    sym2(p1, vals);
  }
  // P2.
  {
    std::vector<std::vector<long>> vals;
    const long pat[4][2] = {{2, 1}, {2, -1}, {1, 2}, {1, -2}};
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        for (const auto& pq : pat) {
          std::vector<long> e(3, 0);
          e[i] += pq[0];
          e[j] += pq[1];
          vals.push_back(std::move(e));
        }
    sym2(p2, vals);
    sym2(p2, {{1, 1, 1}, {1, 1, -1}, {1, -1, -1}, {1, -1, 1}}, 2);
    sym2(p2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 4);
  }
  // P3.
  {
    sym2(p3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    std::vector<std::vector<long>> vals;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        std::vector<long> ep(3, 0), em(3, 0);
        ep[i] += 1;
        ep[j] -= 1;
        em[i] += 1;
        em[j] += 1;
        vals.push_back(std::move(ep));
        vals.push_back(std::move(em));
      }
    sym2(p3, vals, 3);
  }
  LaurentPoly P1 = eval_terms(p1, mu);
  LaurentPoly P2 = eval_terms(p2, mu);
  LaurentPoly P3 = eval_terms(p3, mu);
  {
    std::vector<ExpTerm> a, b, c, d;
    sym2(a, {{1, 2, 0}, {2, 1, 0}, {1, -2, 0}, {2, -1, 0}});
    sym2(b, {{0, 0, 1}});
    sym2(c, {{1, 1, 0}, {1, -1, 0}});
    sym2(d, {{0, 0, 2}});
    P3 = P3 + eval_terms(a, mu) * eval_terms(b, mu) + eval_terms(c, mu) * eval_terms(d, mu) +
         LaurentPoly::term(0, 4);
  }

  HilbertSeries hs;
  LaurentPoly& N = hs.numerator;
  N = LaurentPoly::one();
  N = N - P1.shifted(2 * u) + P2.shifted(3 * u) - P3.shifted(4 * u) + P3.shifted(6 * u) -
      P2.shifted(7 * u) + P1.shifted(8 * u) - LaurentPoly::term(10 * u, 1);

  std::vector<long> dens;
  for (int s0 : {1, -1})
    for (int s1 : {1, -1})
      for (int s2 : {1, -1}) dens.push_back(s0 * mu[0] + s1 * mu[1] + s2 * mu[2] + u);
  for (int i = 0; i < 3; ++i)
    for (int s : {1, -1}) dens.push_back(s * mu[i] + u);
  push_denominators(hs, dens, "compact_lgr36");
  return hs;
}

// Corrections applied relative to the published display: the four trailing
// blocks carry t^{(k+3)s}, not t^{(k+1)s}, for k = 5..8; the final term is
// -t^{12(s+u)}; P1 sums a_i - a_j over all ordered pairs (with -2t^s
// compensating the diagonal); P3 carries t^{2(a_i-a_j)+s}, not t^{2(a_i-a_j)}.
HilbertSeries compact_fl13(const Coweight& mu, long u) {
  if (mu.size() != 4) throw validation_error("compact_fl13: mu must have 4 entries");
  require_dominant_cw(mu, "compact_fl13");
  long s = mu[0] + mu[1] + mu[2] + mu[3];

  std::vector<ExpTerm> two_aiaj, s_aiaj, three_aiaj, diff_s;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::vector<long> e(4, 0);
      e[i] += 2;
      e[j] += 2;
      two_aiaj.emplace_back(std::move(e), 1);
    }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::vector<long> e(4, 1);
      e[i] += 1;
      e[j] -= 1;
      s_aiaj.emplace_back(std::move(e), 1);
    }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      std::vector<long> e(4, 0);
      e[i] += 3;
      e[j] += 1;
      three_aiaj.emplace_back(std::move(e), 1);
      std::vector<long> e2(4, 2);
      e2[i] -= 3;
      e2[j] -= 1;
      three_aiaj.emplace_back(std::move(e2), 1);
      std::vector<long> e3(4, 1);
      e3[i] += 2;
      e3[j] -= 2;
      diff_s.emplace_back(std::move(e3), 1);
    }

  LaurentPoly A2 = eval_terms(two_aiaj, mu);
  LaurentPoly AS = eval_terms(s_aiaj, mu);
  LaurentPoly A3 = eval_terms(three_aiaj, mu);
  LaurentPoly DS = eval_terms(diff_s, mu);
  auto cpoly = [](long c) { return LaurentPoly::term(0, c); };
  LaurentPoly TS = LaurentPoly::term(s, 1);

  LaurentPoly P1 = A2 + cpoly(2) * AS - cpoly(2) * TS;
  LaurentPoly P2 = cpoly(4) * A2 + cpoly(8) * AS + A3 - cpoly(16) * TS;
  LaurentPoly P3 = cpoly(6) * A2 + cpoly(14) * AS + cpoly(3) * A3 + DS - cpoly(29) * TS;
  LaurentPoly P4 = cpoly(4) * A2 + cpoly(12) * AS + cpoly(3) * A3 + cpoly(2) * DS - cpoly(24) * TS;
  // The trailing blocks carry the mirrored polynomials P(1/t); plain and
  // mirrored agree only at mu = 0.
  auto mirror = [](const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.coeffs) r.coeffs[-e] = c;
    return r;
  };

  HilbertSeries hs;
  LaurentPoly& N = hs.numerator;
  N = LaurentPoly::one();
  N = N - P1.shifted(2 * u + s) + P2.shifted(3 * u + 2 * s) - P3.shifted(4 * u + 3 * s) +
      P4.shifted(5 * u + 4 * s) - mirror(P4).shifted(7 * u + 8 * s) +
      mirror(P3).shifted(8 * u + 9 * s) - mirror(P2).shifted(9 * u + 10 * s) +
      mirror(P1).shifted(10 * u + 11 * s) - LaurentPoly::term(12 * (u + s), 1);

  std::vector<long> dens;
  std::vector<long> base{0, 1, 1, 2};
  // next_permutation over the multiset yields each of the 12 distinct
  // arrangements of (2,1,1,0) exactly once.
  do {
    long d = 0;
    for (int i = 0; i < 4; ++i) d += base[i] * mu[i];
    dens.push_back(d + u);
  } while (std::next_permutation(base.begin(), base.end()));
  for (int k = 0; k < 3; ++k) dens.push_back(s + u);
  push_denominators(hs, dens, "compact_fl13");
  return hs;
}

}  // namespace wflag
