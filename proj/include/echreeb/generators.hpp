#pragma once

#include <optional>

#include "echreeb/orbits.hpp"

namespace echreeb {

struct GeneratorEntry {
  std::string orbit;
  long long multiplicity = 1;
};

// Admissible orbit set: multiplicity 1 at every hyperbolic orbit. Action is
// carried as an exact interval sum; parity counts positive hyperbolic orbits.
struct OrbitSetGenerator {
  std::vector<GeneratorEntry> pairs;  // sorted by orbit name
  double action_lo = 0.0;
  double action_hi = 0.0;
  long long total_class = 0;
  int parity = 0;
};

struct EnumerationOptions {
  long long count_cap = 5'000'000;     // guards against runaway enumerations
  std::optional<double> rho;           // when set, keep only action <= rho
};

struct EnumeratedGenerators {
  std::vector<OrbitSetGenerator> generators;  // action upper end < L, canonically sorted
  std::vector<OrbitSetGenerator> borderline;  // action_lo < L <= action_hi
};

// Exhaustive list of admissible orbit sets with the given total class and
// action below the cutoff (interval upper ends decide; straddlers are
// reported separately). The empty set appears for class 0.
EnumeratedGenerators enumerate_generators(const OrbitCatalog& catalog, long long total_class,
                                          double L, const EnumerationOptions& opts = {});

int grading_parity(const OrbitSetGenerator& gen);

struct FilteredDimensions {
  long long even_count = 0;
  long long odd_count = 0;
};

FilteredDimensions filtered_dimensions(const OrbitCatalog& catalog, long long total_class, double L,
                                       const EnumerationOptions& opts = {});

// One component of a weighted current for the sign/weight bookkeeping: its
// index parity constrains the positive-hyperbolic ends and intersected loops.
struct SignedComponent {
  std::string id;
  long long fredholm_index = 0;
  std::vector<std::string> hyperbolic_ends;  // positive hyperbolic end orbits, in order
  std::vector<std::string> loops;            // intersected loop labels, in order
  std::optional<long long> r_weight;         // external weight; +1 rule below
  bool special_plane_or_sphere = false;      // these resolve to weight +1
};

// Sign from comparing the component-induced orderings of the positive
// hyperbolic orbits and of the loops against the reference orderings.
int epsilon_sign(const std::vector<SignedComponent>& components,
                 const std::vector<std::string>& reference_hyperbolic,
                 const std::vector<std::string>& reference_loops);

// epsilon * product of component weights; exceptional spheres and special
// planes default to +1, anything else needs an external weight.
long long total_weight(const std::vector<SignedComponent>& components,
                       const std::vector<std::string>& reference_hyperbolic,
                       const std::vector<std::string>& reference_loops);

// Sign for reordering a tensor product of generators with the given parities:
// parity of the induced permutation on the odd factors.
int tensor_ordering_sign(const std::vector<int>& order, const std::vector<int>& parities);

}  // namespace echreeb
