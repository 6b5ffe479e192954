#pragma once

#include <optional>
#include <string>
#include <vector>

#include "echreeb/surd.hpp"

namespace echreeb {

enum class OrbitKind { elliptic, positive_hyperbolic, negative_hyperbolic };

enum class BoundaryType { untwisted, twisted };

enum class LPositivity { positive, not_positive, not_applicable };

// A nondegenerate Reeb orbit record. Elliptic orbits carry an exact rotation
// class in (0,1); hyperbolic orbits carry none. Actions from a splitting are
// intervals [action_lo, action_hi] with a nominal representative.
struct ReebOrbit {
  std::string name;
  OrbitKind kind = OrbitKind::elliptic;
  std::optional<Surd> rotation;
  double action_lo = 0.0;
  double action_hi = 0.0;
  double action = 0.0;  // nominal
  long long homology_class = 0;
  bool l_flat = false;
  LPositivity l_positive = LPositivity::not_applicable;
  bool exceptional = false;
  std::optional<double> from_angle;
  std::string note;
};

struct OrbitCatalog {
  std::string profile_label;
  double cutoff = 0.0;   // L
  double delta = 0.0;    // perturbation scale
  BoundaryType type = BoundaryType::untwisted;
  std::vector<ReebOrbit> orbits;

  const ReebOrbit* find(const std::string& name) const {
    for (const auto& o : orbits)
      if (o.name == name) return &o;
    return nullptr;
  }
};

inline const char* to_string(OrbitKind k) {
  switch (k) {
    case OrbitKind::elliptic: return "elliptic";
    case OrbitKind::positive_hyperbolic: return "positive_hyperbolic";
    case OrbitKind::negative_hyperbolic: return "negative_hyperbolic";
  }
  return "?";
}

inline const char* kind_tag(OrbitKind k) {
  switch (k) {
    case OrbitKind::elliptic: return "e";
    case OrbitKind::positive_hyperbolic: return "h";
    case OrbitKind::negative_hyperbolic: return "n";
  }
  return "?";
}

// L-positivity of a nondegenerate orbit: rotation class in (0, action/L) mod 1.
// Exact; uses the conservative lower end of the action interval. Hyperbolic
// orbits and orbits of action >= L fall outside the definition.
LPositivity l_positive_check(const ReebOrbit& orbit, double L);

}  // namespace echreeb
