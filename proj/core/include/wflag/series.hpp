#pragma once

#include <optional>
#include <vector>

#include "wflag/laurent.hpp"
#include "wflag/lattice.hpp"

namespace wflag {

// P(t) = numerator / prod (1 - t^e) over denom_exponents (a multiset,
// kept sorted ascending).
struct HilbertSeries {
  LaurentPoly numerator;
  std::vector<long> denom_exponents;

  bool operator==(const HilbertSeries& o) const {
    return numerator == o.numerator && denom_exponents == o.denom_exponents;
  }
};

struct SymmetryReport {
  long adjunction = 0;  // top degree of the numerator
  bool palindromic = false;
};

// Hilbert series of the weight-mu, shift-u grading on the flag variety of
// lambda, reduced over one factor (1 - t^{<nu,mu>+u}) per line of nabla
// (with multiplicity). Evaluates the alternating Weyl sum exactly: the
// w-sum is cleared to a common product over the orbit of lambda, divided
// by the alternating rho-sum (zero remainder asserted), then re-expressed
// over the nabla factors. Degenerate gradings (any <w rho, mu> collision,
// e.g. mu = 0) are resolved by refining with an auxiliary regular
// direction that is substituted away at the end.
//
// Throws validation_error unless every <nu,mu>+u is a positive integer.
HilbertSeries hilbert_series_weyl(const RootSystem& rs, const RationalVector& lambda,
                                  const Coweight& mu, long u, const WeightSystem& nabla);

// Closed forms for the two flagship families; mu is (a1,a2,a3) resp.
// (a1..a4). Corrections applied relative to the published displays are
// documented in the implementation.
HilbertSeries compact_lgr36(const Coweight& mu, long u);
HilbertSeries compact_fl13(const Coweight& mu, long u);

// Coefficients h_0..h_nmax of the expanded series. Throws validation_error
// if any coefficient is fractional or negative (ill-posed input).
std::vector<Int> expand(const HilbertSeries& hs, long n_max);
// Same, but returns nullopt instead of throwing; used by search filters.
std::optional<std::vector<Int>> try_expand(const HilbertSeries& hs, long n_max);

// Adjunction number (top degree) and palindromy of |coefficients|.
SymmetryReport numerator_symmetry_check(const HilbertSeries& hs);

}  // namespace wflag
