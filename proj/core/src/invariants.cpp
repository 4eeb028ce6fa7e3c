#include <wflag/invariants.hpp>

#include <numeric>

#include <wflag/errors.hpp>

namespace wflag {

namespace {

// Dense coefficients of the numerator, degree 0 upward.
std::vector<Rat> dense_numerator(const HilbertSeries& hs) {
  if (!hs.numerator.is_zero() && hs.numerator.low_degree() < 0) {
    throw validation_error("series numerator has negative exponents");
  }
  long hi = hs.numerator.is_zero() ? 0 : hs.numerator.high_degree();
  std::vector<Rat> c(hi + 1);
  for (const auto& [e, v] : hs.numerator.coeffs) c[e] = v;
  return c;
}

}  // namespace

Rat degree(const HilbertSeries& hs, long dim) {
  const long k = static_cast<long>(hs.denom_exponents.size());
  const long zeros = k - dim - 1;
  if (dim < 0 || zeros < 0) {
    throw validation_error("dimension " + std::to_string(dim) +
                           " is inconsistent with " + std::to_string(k) + " ambient weights");
  }
  std::vector<Rat> c = dense_numerator(hs);
  for (long j = 0; j < zeros; ++j) {
    // Divide by (1 - t): prefix sums; the full sum is the remainder.
    for (std::size_t i = 1; i < c.size(); ++i) c[i] += c[i - 1];
    if (c.back() != 0) {
      throw validation_error(
          "numerator is not divisible by (1-t)^" + std::to_string(zeros) +
          "; the claimed dimension does not match the series");
    }
    c.pop_back();
  }
  Rat value(0);
  for (const Rat& x : c) value += x;
  Rat denom(1);
  for (long w : hs.denom_exponents) denom *= Rat(w);
  Rat result = value / denom;
  result.canonicalize();
  return result;
}

Rat fano_genus(const HilbertSeries& hs) {
  Rat g = degree(hs, 3) / 2 + 1;
  g.canonicalize();
  return g;
}

namespace {

// Exact cubic through four points, coefficients c0..c3.
std::vector<Rat> fit_cubic(const std::vector<std::pair<long, Rat>>& pts) {
  std::vector<std::vector<Rat>> a(4, std::vector<Rat>(4));
  std::vector<Rat> b(4);
  for (int r = 0; r < 4; ++r) {
    Rat x(pts[r].first);
    Rat p(1);
    for (int k = 0; k < 4; ++k) {
      a[r][k] = p;
      p *= x;
    }
    b[r] = pts[r].second;
  }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rat inv = Rat(1) / a[col][col];
    for (auto& x : a[col]) x = Rat(x * inv);
    b[col] = Rat(b[col] * inv);
    for (int r = 0; r < 4; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int k = 0; k < 4; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
      for (int k = 0; k < 4; ++k) a[r][k].canonicalize();
      b[r].canonicalize();
    }
  }
  return b;
}

Rat eval_cubic(const std::vector<Rat>& c, long n) {
  Rat x(n);
  Rat v = c[0] + c[1] * x + c[2] * x * x + c[3] * x * x * x;
  v.canonicalize();
  return v;
}

// Fit one cubic per residue class from samples starting at n0 and check two
// further periods; empty result on failure.
std::vector<std::vector<Rat>> try_fit_window(const std::vector<Int>& h, long m, long n0) {
  std::vector<std::vector<Rat>> polys(m);
  for (long r = 0; r < m; ++r) {
    std::vector<std::pair<long, Rat>> pts;
    for (long n = n0; n < n0 + 4 * m && static_cast<std::size_t>(n) < h.size(); ++n) {
      if (n % m == r) pts.emplace_back(n, Rat(h[n]));
    }
    if (pts.size() < 4) return {};
    pts.resize(4);
    polys[r] = fit_cubic(pts);
  }
  for (long n = n0 + 4 * m; n < n0 + 6 * m; ++n) {
    if (static_cast<std::size_t>(n) >= h.size()) return {};
    if (eval_cubic(polys[n % m], n) != Rat(h[n])) return {};
  }
  return polys;
}

}  // namespace

QuasiPolyFit quasipoly_fit(const HilbertSeries& hs, long period) {
  if (hs.denom_exponents.empty()) {
    throw validation_error("cannot fit a series without ambient weights");
  }
  long m = period;
  if (m == 0) {
    m = 1;
    for (long w : hs.denom_exponents) m = std::lcm(m, w);
  }
  if (m < 1) throw validation_error("period must be positive");

  const long n_max = 10 * m + 40;
  std::vector<Int> h = expand(hs, n_max);

  QuasiPolyFit fit;
  fit.period = m;
  for (long n0 = 0; n0 < 4 * m; ++n0) {
    auto polys = try_fit_window(h, m, n0);
    if (polys.empty()) continue;
    fit.start = n0;
    fit.residue_coefficients = std::move(polys);
    break;
  }
  if (fit.residue_coefficients.empty()) {
    throw validation_error("no stable cubic quasi-polynomial fit: the series "
                           "does not behave like a threefold");
  }

  fit.cubic = fit.residue_coefficients[0][3];
  if (fit.cubic <= 0) {
    throw validation_error("leading coefficient of the fit is not positive; "
                           "the series does not behave like a threefold");
  }
  Rat lin_sum(0);
  for (const auto& c : fit.residue_coefficients) {
    if (c[3] != fit.cubic) {
      throw validation_error("leading coefficient varies across residue classes; "
                             "the series does not behave like a threefold");
    }
    lin_sum += c[1];
  }
  fit.d3 = Rat(6) * fit.cubic;
  fit.d3.canonicalize();
  fit.linear_average = lin_sum / Rat(m);
  fit.linear_average.canonicalize();
  fit.dc2_estimate = Rat(12) * fit.linear_average;
  fit.dc2_estimate.canonicalize();
  return fit;
}

}  // namespace wflag
