#pragma once

#include <optional>
#include <string>
#include <vector>

#include <wflag/lattice.hpp>
#include <wflag/series.hpp>

namespace wflag {

// One row of the table of minimal homogeneous varieties cut out by quadrics:
// a simple root system together with a dominant weight lambda whose
// associated flag variety is embedded in P(V_lambda).
struct CatalogEntry {
  std::string id;           // stable identifier, e.g. "lgr36"
  std::string description;  // human-readable name of the variety
  LieType lie_type = LieType::A;
  int rank = 0;
  RationalVector lambda;  // dominant weight in realization coordinates
  long dim = 0;           // dimension of the flag variety
  long ambient_dim = 0;   // dimension of P(V_lambda)
  long codim = 0;         // ambient_dim - dim
  long num_quadrics = 0;  // quadrics cutting out the straight embedding
};

// The nine catalog rows, in order of increasing codimension.
const std::vector<CatalogEntry>& catalog();

// Look up a row by id; throws validation_error for unknown ids.
const CatalogEntry& catalog_entry(const std::string& id);

// A weighted homogeneous variety: the coordinate ring of a catalog row,
// regraded so the ambient coordinate corresponding to the weight-nu line of
// V_lambda has degree <nu, mu> + u.
struct WeightedVariety {
  std::string entry_id;
  Coweight mu;
  long u = 0;
  long dim = 0;               // dimension of the variety itself
  std::vector<long> weights;  // ambient weights, ascending, with multiplicity
  HilbertSeries series;
  long canonical_degree = 0;  // K = O(canonical_degree)
  bool palindromic = false;   // Gorenstein symmetry of the numerator
};

// Build the weighted variety for a catalog row.  Throws validation_error if
// mu has the wrong dimension or any ambient weight fails to be a positive
// integer.
WeightedVariety make_weighted(const CatalogEntry& entry, const Coweight& mu, long u);

// Closed-form expression for the canonical degree, available for some rows;
// nullopt when no closed form is on record.  The value computed by
// make_weighted from the series is authoritative; this is a cross-check.
std::optional<long> canonical_formula(const std::string& entry_id, const Coweight& mu, long u);

}  // namespace wflag
