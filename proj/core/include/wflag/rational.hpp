#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace wflag {

using Int = mpz_class;
using Rat = mpq_class;
using RationalVector = std::vector<Rat>;
using Coweight = std::vector<long>;

// Canonical "p" or "p/q" with q > 0, gcd(p,q) = 1.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

bool is_integer(const Rat& r);
// Requires is_integer(r) and a value that fits in long.
long to_long(const Rat& r);

std::string vec_to_string(const RationalVector& v);

}  // namespace wflag
