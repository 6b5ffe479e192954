#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "echreeb/orbits.hpp"

namespace echreeb {

// Orbit data needed by the index calculus: kind, exact rotation class for
// elliptic orbits, and the action (for positivity cutoffs).
struct OrbitRef {
  std::string name;
  OrbitKind kind = OrbitKind::elliptic;
  Surd rotation;  // in (0,1), elliptic only
  double action = 0.0;
};

OrbitRef orbit_ref(const ReebOrbit& o);

inline OrbitRef elliptic_orbit(std::string name, Surd rotation, double action = 1.0) {
  return {std::move(name), OrbitKind::elliptic, std::move(rotation), action};
}
inline OrbitRef positive_hyperbolic_orbit(std::string name, double action = 1.0) {
  return {std::move(name), OrbitKind::positive_hyperbolic, Surd(0), action};
}
inline OrbitRef negative_hyperbolic_orbit(std::string name, double action = 1.0) {
  return {std::move(name), OrbitKind::negative_hyperbolic, Surd(0), action};
}

struct CurveEnd {
  OrbitRef orbit;
  long long multiplicity = 1;
  bool positive = false;  // sign of the puncture
};

enum class KindHint { generic_embedded, special_plane, special_torus, exceptional_sphere, cylinder };

// Combinatorial stand-in for a punctured curve: topological and end data plus
// the relative Chern number and relative self-intersection in the fixed
// trivialization (inputs, not computed from geometry).
struct FormalCurveComponent {
  std::string id;
  long long genus = 0;
  std::vector<CurveEnd> ends;
  long long c_tau = 0;
  long long q_tau = 0;
  long long delta_sing = 0;
  KindHint hint = KindHint::generic_embedded;

  long long end_count() const { return static_cast<long long>(ends.size()); }
  long long euler_characteristic() const { return 2 - 2 * genus - end_count(); }
};

// Throws std::invalid_argument when the hint's structural constraints fail.
void validate_component(const FormalCurveComponent& c);

// Index-zero embedded plane with one negative end of multiplicity one at an
// elliptic orbit; c_tau = 1, Q_tau = 0 in the adjusted trivialization.
FormalCurveComponent make_special_plane(const OrbitRef& orbit, std::string id = "plane");
FormalCurveComponent make_special_torus(std::string id = "torus");
FormalCurveComponent make_exceptional_sphere(std::string id = "sphere");
// Plane with one negative end of multiplicity one at a negative hyperbolic
// orbit (the quotient-catalog counterexample).
FormalCurveComponent make_negative_hyperbolic_plane(const OrbitRef& orbit,
                                                    std::string id = "nh-plane");

// d-fold branched cover of a base component. Each cover end sits over a base
// end; multiplicities over a base end sum to degree x base multiplicity.
struct CoverEnd {
  std::size_t base_end = 0;
  long long multiplicity = 1;
};

struct CoverData {
  FormalCurveComponent base;
  long long degree = 1;
  long long branch_points = 0;
  long long cover_genus = 0;
  std::vector<CoverEnd> ends;
  bool connected = true;
};

void validate_cover(const CoverData& c);

CoverData identity_cover(const FormalCurveComponent& base);
// Connected cover of a one-ended plane with prescribed end partition; branch
// count from Riemann-Hurwitz.
CoverData plane_cover(const FormalCurveComponent& base, long long degree, long long cover_genus,
                      const std::vector<long long>& end_multiplicities);

}  // namespace echreeb
