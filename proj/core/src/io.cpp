#include <sstream>

#include "wflag/errors.hpp"
#include "wflag/laurent.hpp"
#include "wflag/rational.hpp"

namespace wflag {

std::string rat_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw validation_error("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw validation_error("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

long to_long(const Rat& r) {
  if (!is_integer(r)) throw internal_error("to_long on non-integer " + rat_to_string(r));
  if (!r.get_num().fits_slong_p())
    throw internal_error("integer out of long range: " + rat_to_string(r));
  return r.get_num().get_si();
}

std::string vec_to_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_to_string(v[i]);
  }
  return out + ")";
}

LaurentPoly LaurentPoly::term(long exp, const Rat& c) {
  LaurentPoly p;
  if (c != 0) p.coeffs[exp] = c;
  return p;
}

long LaurentPoly::low_degree() const {
  if (is_zero()) throw internal_error("low_degree of zero polynomial");
  return coeffs.begin()->first;
}

long LaurentPoly::high_degree() const {
  if (is_zero()) throw internal_error("high_degree of zero polynomial");
  return coeffs.rbegin()->first;
}

Rat LaurentPoly::coeff(long exp) const {
  auto it = coeffs.find(exp);
  return it == coeffs.end() ? Rat(0) : it->second;
}

Rat LaurentPoly::value_at_one() const {
  Rat s = 0;
  for (const auto& [e, c] : coeffs) s += c;
  return Rat(s);
}

void LaurentPoly::set(long exp, const Rat& c) {
  if (c == 0)
    coeffs.erase(exp);
  else
    coeffs[exp] = c;
}

void LaurentPoly::add_term(long exp, const Rat& c) {
  auto it = coeffs.find(exp);
  if (it == coeffs.end()) {
    if (c != 0) coeffs[exp] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) coeffs.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs) r.coeffs[e] = Rat(-c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs) r.add_term(e, Rat(-c));
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : coeffs)
    for (const auto& [e2, c2] : o.coeffs) r.add_term(e1 + e2, Rat(c1 * c2));
  return r;
}

LaurentPoly LaurentPoly::shifted(long by) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs) r.coeffs[e + by] = c;
  return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
  if (d.is_zero()) throw internal_error("division by zero polynomial");
  LaurentPoly q, r = *this;
  const long dh = d.high_degree();
  const Rat& dc = d.coeffs.rbegin()->second;
  // Peel leading terms; for an exact quotient this takes at most
  // high(q) - low(q) + 1 steps, so any overrun means a nonzero remainder.
  long budget = 0;
  if (!r.is_zero())
    budget = (r.high_degree() - r.low_degree()) + (d.high_degree() - d.low_degree()) + 2;
  while (!r.is_zero()) {
    if (budget-- < 0) throw internal_error("nonzero remainder in exact_div");
    long e = r.high_degree();
    Rat c = Rat(r.coeffs.rbegin()->second / dc);
    q.add_term(e - dh, c);
    for (const auto& [de, dcoef] : d.coeffs) r.add_term(e - dh + de, Rat(-c * dcoef));
  }
  return q;
}

LaurentPoly LaurentPoly::substitute_power(long k) const {
  if (k < 1) throw internal_error("substitute_power requires k >= 1");
  LaurentPoly r;
  for (const auto& [e, c] : coeffs) r.coeffs[e * k] = c;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = Rat(-a);
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = Rat(-a);
    }
    first = false;
    const bool unit = (a == 1);
    if (e == 0) {
      out << rat_to_string(a);
    } else {
      if (!unit) out << rat_to_string(a) << "*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

LaurentPoly one_minus_t(long e) {
  LaurentPoly p = LaurentPoly::one();
  p.add_term(e, Rat(-1));
  return p;
}

}  // namespace wflag
