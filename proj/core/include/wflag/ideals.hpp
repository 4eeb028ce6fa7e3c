#pragma once

#include <map>
#include <string>
#include <vector>

#include <wflag/rational.hpp>
#include <wflag/series.hpp>

namespace wflag {

// Exponent vector of a monomial; one entry per ambient variable.
using Monomial = std::vector<int>;

// Polynomials are sparse maps from monomials to rational coefficients; the
// map order (plain lexicographic on exponent vectors) is only a storage
// order, term selection always goes through a MonomialOrder.
using Poly = std::map<Monomial, Rat>;

enum class OrderKind { WGrevlex, WLex };

// A monomial order refining the weighted degree given by positive variable
// weights: ties are broken by graded reverse lexicographic or lexicographic
// comparison.
struct MonomialOrder {
  std::vector<long> weights;
  OrderKind kind = OrderKind::WGrevlex;

  long weighted_degree(const Monomial& m) const;
  // Strict comparison: true when a precedes b (a is smaller).
  bool less(const Monomial& a, const Monomial& b) const;
};

bool monomial_divides(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

// The largest monomial of a nonzero polynomial under the order.
const Monomial& leading_monomial(const Poly& p, const MonomialOrder& order);

struct GroebnerStats {
  std::size_t basis_size = 0;
  long spairs_processed = 0;
  long reduction_steps = 0;
};

// Reduced Groebner basis of the ideal generated by gens: every element is
// monic, no leading monomial divides another, tails are fully reduced, and
// the result is sorted by leading monomial.  The outcome is a deterministic
// function of (gens, order).  Reduction work is capped; exceeding step_cap
// raises resource_error.
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const MonomialOrder& order,
                                 GroebnerStats* stats = nullptr, long step_cap = 1000000);

// Hilbert series of the quotient by the ideal, graded so variable i has
// degree weights[i]: numerator over the denominators (1 - t^{weights[i]}).
// Computes a Groebner basis internally; the result is independent of kind.
HilbertSeries quotient_hilbert_series(const std::vector<Poly>& gens,
                                      const std::vector<long>& weights,
                                      OrderKind kind = OrderKind::WGrevlex,
                                      long step_cap = 1000000);

// A recorded defining ideal together with named gradings of its variables.
struct IdealData {
  std::string id;
  int variables = 0;
  std::vector<std::string> generator_names;
  std::vector<Poly> generators;
  std::map<std::string, std::vector<long>> gradings;
};

// Defining quadric ideals shipped with the library ("lgr36", "fl13").
const IdealData& defining_ideal(const std::string& id);
std::vector<std::string> defining_ideal_ids();

// Weighted degree of every generator; throws validation_error naming the
// first generator that fails to be homogeneous under the grading.
std::vector<long> homogeneous_degrees(const IdealData& ideal, const std::vector<long>& weights);

// Restriction to a coordinate stratum: variables outside `keep` are set to
// zero; generators that vanish are dropped (order otherwise preserved).
std::vector<Poly> restrict_to_stratum(const std::vector<Poly>& gens,
                                      const std::vector<bool>& keep);

// True when some generator contains the pure power x_var^degree as a term.
bool pure_power_present(const std::vector<Poly>& gens, int var, int degree);

}  // namespace wflag
