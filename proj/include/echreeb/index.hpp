#pragma once

#include "echreeb/curves.hpp"

namespace echreeb {

// Conley-Zehnder index of the m-th cover in the adjusted trivialization:
// 0 for positive hyperbolic, m for negative hyperbolic, 2 floor(m theta) + 1
// for elliptic with exact rotation theta in (0,1).
long long cz(const OrbitRef& orbit, long long m);

// Sum of cz(orbit, k) for k = 1..m.
long long cz_total(const OrbitRef& orbit, long long m);

// ECH index of the d-fold current over the component:
// I = d c_tau + d^2 Q_tau + sum over ends of +-(sum_{k<=d m} cz).
long long ech_index(const FormalCurveComponent& curve, long long d = 1);

// Fredholm index: -chi + 2 c_tau + sum over ends of +-cz at the multiplicity.
long long fredholm_index(const FormalCurveComponent& curve);

enum class CertStatus { granted, not_granted, not_applicable };

struct Certificate {
  CertStatus status = CertStatus::not_applicable;
  long long margin = 0;
  std::string reason;
};

struct CoverIndexResult {
  long long index = 0;             // Fredholm index of the covering curve
  long long pullback_index = 0;    // index of the pulled-back operator: index - 2b
  bool hypothesis_ok = false;      // base ends positive hyperbolic or degree-positive elliptic
  std::string hypothesis_note;
  bool index_ge_branch_points = false;
};

CoverIndexResult cover_index(const CoverData& cover);
long long pullback_operator_index(const CoverData& cover);

struct InequalityCheck {
  bool pass = false;
  long long slack = 0;  // I - 2 delta - ind
};

// ind <= I - 2 delta for somewhere-injective components.
InequalityCheck index_inequality_check(const FormalCurveComponent& curve);

struct Rational {
  long long num = 0;
  long long den = 1;
  bool operator==(const Rational&) const = default;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// rho-dependent self-intersection
// C.C = (1/2)[2g - 2 + ind + h + 2 e_rho + 4 delta], exact rational.
Rational self_intersection(const FormalCurveComponent& curve, double rho);

// True when the elliptic orbit's rotation lies in (0, action/rho) mod 1; ends
// of action >= rho qualify vacuously (the interval covers the full circle).
bool rho_positive(const OrbitRef& orbit, double rho);

long long cz_one_window(const OrbitRef& orbit);

Certificate partition_check(const OrbitRef& orbit, long long total_multiplicity,
                            const std::vector<long long>& end_multiplicities, bool positive_side);

// Surjectivity criterion 2g - 2 + h_plus < ind, with h_plus counting ends at
// positive hyperbolic orbits and even multiples of negative hyperbolic ones.
Certificate auto_transversality(const FormalCurveComponent& curve);

// Injectivity criterion 2g~ - 2 + h~_plus + ind(C~) - 2b < 0 for covers of a
// special plane whose end covers all have Conley-Zehnder index one; reduces
// to -2 x (number of cover ends) < 0 there.
Certificate super_rigidity_certificate(const CoverData& cover);

// Consistency validator: parity of the ECH index against the count of ends at
// positive hyperbolic orbits. A theorem for genuine curves; on formal data it
// only audits the (c_tau, Q_tau) inputs.
bool validate_index_parity(const FormalCurveComponent& curve);

struct CoveredComponent {
  FormalCurveComponent curve;
  long long multiplicity = 1;
};

struct ExceptionalSphereEntry {
  std::string id;
  long long multiplicity = 1;
};

// Decomposition of a current into non-exceptional components with covering
// multiplicities and exceptional spheres, with all pairwise intersection
// numbers and the pairings of the exceptional classes with the total class.
struct CurrentDecomposition {
  std::vector<CoveredComponent> components;
  std::vector<ExceptionalSphereEntry> exceptional;
  std::vector<std::vector<long long>> cc_cross;  // size KxK, diagonal ignored
  std::vector<std::vector<long long>> ee_cross;  // size SxS, diagonal ignored
  std::vector<std::vector<long long>> ec_cross;  // size SxK
  std::vector<long long> e_dot_a;                // size S
};

struct IndexBoundDiagnostics {
  long long rhs_full = 0;        // with self-intersection and exceptional cross terms
  long long rhs_with_gate = 0;   // intermediate form using the E.A pairings
  long long rhs_simplified = 0;  // sum d ind + 2 sum d^2 delta + sum m(m-1) + cross
  long long clean_part = 0;      // sum d ind alone
  bool gate_ok = false;          // all E.A >= -1
  bool cross_terms_zero = false;
  bool deltas_zero = false;
  bool exceptional_simple = false;   // all exceptional multiplicities <= 1
  bool covers_only_special = false;  // d > 1 only where the self-intersection vanishes
  bool structural_equality = false;  // rhs_simplified == clean_part and all of the above
  std::vector<std::string> violations;
};

IndexBoundDiagnostics current_index_bound(const CurrentDecomposition& current, double rho);

}  // namespace echreeb
