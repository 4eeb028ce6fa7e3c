#pragma once

#include <vector>

#include <wflag/rational.hpp>
#include <wflag/series.hpp>

namespace wflag {

// Self-intersection degree D^dim of the polarizing divisor, computed exactly
// from the Hilbert series: the numerator is divided by (1 - t)^(k - dim - 1)
// with k the number of ambient weights, evaluated at t = 1 and divided by
// the product of the weights.  Throws validation_error when the numerator is
// not divisible, i.e. when the claimed dimension does not match the series.
Rat degree(const HilbertSeries& hs, long dim);

// Genus g with 2g - 2 = degree for a threefold polarized by its
// anticanonical class (degree/2 + 1).
Rat fano_genus(const HilbertSeries& hs);

// Exact quasi-polynomial fit of the Hilbert function of a threefold.
// For each residue class modulo the period, a cubic is interpolated through
// four samples starting at `start`; the fit must then reproduce two further
// periods of exact values.  The leading coefficient is constant across
// residue classes and determines the degree; the averaged linear coefficient
// gives an estimate of D.c2/12 that carries orbifold corrections and is
// reported for information only.
struct QuasiPolyFit {
  long period = 0;  // modulus of the quasi-polynomial
  long start = 0;   // first sample index used by the successful fit
  Rat cubic;        // common leading coefficient
  Rat d3;           // 6 * cubic: the degree D^3
  Rat linear_average;
  Rat dc2_estimate;  // 12 * linear_average, informational
  std::vector<std::vector<Rat>> residue_coefficients;  // per class: c0..c3
};

// period == 0 selects the least common multiple of the ambient weights.
QuasiPolyFit quasipoly_fit(const HilbertSeries& hs, long period = 0);

}  // namespace wflag
