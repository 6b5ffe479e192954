#pragma once

#include "echreeb/orbits.hpp"
#include "echreeb/profile.hpp"

namespace echreeb {

// Data for the tubular-neighborhood choice that realizes the perturbed form
// as a contact hypersurface below the reference one.
struct NeighborhoodSpec {
  Surd epsilon;
  Surd c;
  double kappa = 0.0;     // ceil(-inf F_A), >= 1
  double max_f = 0.0;     // upper bound for max F_A, must be < -1
  double inf_f = 0.0;     // lower bound for inf F_A
};

struct LambdaAResult {
  FormProfile profile;
  OrbitCatalog catalog;
  NeighborhoodSpec neighborhood;
};

// Quadratic conformal exponent -((3 - sqrt6 eps)/2) cos^2(theta) - c.
// For eps = sqrt(3/2), c = 0 this is identically zero and the base form is
// recovered; the pole rotation classes of the rescaled form both equal eps.
ConformalExponent taubes_modifier(const Surd& eps, const Surd& c);

// Splits every torus family of action < L into a positive hyperbolic orbit
// and an L-positive elliptic orbit (actions within delta below the family
// action) and appends the two exceptional pole orbits. No other embedded
// orbits of action < L exist for the perturbed form.
OrbitCatalog bourgeois_split(const FormProfile& profile, double L, double delta,
                             int grid_size = 10000);

// Full pipeline: modifier, splitting, flatness marking below rho, and the
// neighborhood bookkeeping. Requires L > rho, eps small enough that both
// exceptional orbits are L-positive, and c > 1 + delta.
LambdaAResult build_lambda_A(double rho, const Surd& eps, const Surd& c, double delta, double L,
                             int grid_size = 10000);

// Catalog for the quotient by the free involution
// (t, theta, phi) -> (t + pi, pi - theta, -phi): one exceptional elliptic
// orbit, merged torus families, and the interval family through the equator
// replaced by two negative hyperbolic orbits (double-covered endpoints, half
// period) plus one elliptic orbit. Requires a sigma-symmetric profile.
OrbitCatalog twisted_catalog(const FormProfile& profile, double L, double delta,
                             int grid_size = 10000);

// Validates that a catalog has the expected boundary-component type.
void require_catalog_type(const OrbitCatalog& catalog, BoundaryType expected);

}  // namespace echreeb
