#pragma once

#include <string>
#include <vector>

#include <wflag/catalog.hpp>
#include <wflag/series.hpp>

namespace wflag {

// A weighted homogeneous variety after a sequence of cone and quasilinear
// section operations, polarized by O(1) of the ambient weighted projective
// space.
struct Polarized {
  std::string entry_id;
  Coweight mu;
  long u = 0;
  std::vector<long> cone_weights;     // weights of added cone coordinates
  std::vector<long> section_degrees;  // degrees of sections taken, in order
  long dim = 0;
  std::vector<long> weights;  // ambient weights, ascending; == series denoms
  HilbertSeries series;
  long canonical_degree = 0;
  bool palindromic = false;
};

// Wrap a weighted catalog variety as the starting point of a construction.
Polarized polarize(const WeightedVariety& base);

// Projective cone: adds one ambient coordinate of the given weight.  The
// dimension rises by one and the canonical degree drops by the weight.
Polarized cone(const Polarized& p, long weight = 1);

// Hypersurface section of the given degree.  When the degree matches an
// ambient weight the section is quasilinear: eliminating the coordinate
// removes one denominator factor and leaves the numerator unchanged.
// Otherwise a general section multiplies the numerator by (1 - t^degree);
// this is only taken when allow_general is set, else validation_error.
Polarized section(const Polarized& p, long degree, bool allow_general = false);

// A weighted projective space is well formed when every n-element subset of
// its n+1 weights has gcd one.
bool wellformed_wps(const std::vector<long>& weights);

enum class SearchTarget { CY3, Fano3 };

struct SearchParams {
  SearchTarget target = SearchTarget::CY3;
  long mu_bound = 1;     // componentwise cap for dominant mu
  long u_bound = 3;      // inclusive upper bound for u
  int max_sections = 4;  // cap on the number of sections
  int jobs = 1;          // worker threads; output independent of the value
};

struct Candidate {
  Coweight mu;
  long u = 0;
  int cones = 0;                // number of weight-one cone coordinates added
  std::vector<long> sections;   // section degrees, ascending
  std::vector<long> ambient;    // remaining ambient weights, ascending
  long canonical_degree = 0;
  std::string note;  // always flags that singularities are not verified

  bool operator==(const Candidate&) const = default;
};

// Enumerate three-dimensional candidates obtained from a catalog row by
// choosing a dominant grading mu (componentwise at most mu_bound), a shift u
// up to u_bound, zero to two weight-one cones and a multiset of quasilinear
// sections.  A configuration is kept when the polarized variety has
// dimension three, the canonical degree matches the target (zero for CY3,
// negative for Fano3), the ambient space is well formed and the Hilbert
// expansion is nonnegative through order 30.  Results are sorted by
// (mu, u, cones, sections) and do not depend on params.jobs.
std::vector<Candidate> search(const CatalogEntry& entry, const SearchParams& params);

}  // namespace wflag
