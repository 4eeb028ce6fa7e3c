#pragma once

#include <map>
#include <string>

#include "wflag/rational.hpp"

namespace wflag {

// Sparse Laurent polynomial in one variable t, exact rational coefficients.
// The map never stores zero coefficients.
struct LaurentPoly {
  std::map<long, Rat> coeffs;

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return term(0, 1); }
  static LaurentPoly term(long exp, const Rat& c);

  bool is_zero() const { return coeffs.empty(); }
  long low_degree() const;   // requires nonzero
  long high_degree() const;  // requires nonzero
  Rat coeff(long exp) const;
  Rat value_at_one() const;  // sum of coefficients

  void set(long exp, const Rat& c);
  void add_term(long exp, const Rat& c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return coeffs == o.coeffs; }

  LaurentPoly shifted(long by) const;  // multiply by t^by
  // Exact quotient this / d; throws internal_error on nonzero remainder.
  LaurentPoly exact_div(const LaurentPoly& d) const;
  // Substitute t -> t^k, k >= 1.
  LaurentPoly substitute_power(long k) const;

  std::string to_string() const;  // e.g. "1 - 2*t^3 + t^6"
};

// 1 - t^e.
LaurentPoly one_minus_t(long e);

}  // namespace wflag
