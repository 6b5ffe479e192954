#pragma once

#include <functional>
#include <string>
#include <vector>

#include "echreeb/poly.hpp"

namespace echreeb {

inline constexpr double kPi = 3.14159265358979323846;

// Euler number of the reference contact structure on S1 x S2.
// Documented constant; nothing in the library computes it.
inline constexpr int kContactStructureEulerNumber = -2;

enum class Pole { north, south };  // theta = 0 and theta = pi

inline double pole_angle(Pole p) { return p == Pole::north ? 0.0 : kPi; }

// Conformal exponent f = poly(cos theta) - c. Applying e^f to the base
// coefficient pair preserves the contact structure.
struct ConformalExponent {
  SurdPoly poly;
  Surd c = Surd(0);

  bool is_zero() const { return poly_is_zero(poly) && c.is_zero(); }
  SurdPoly combined() const;
};

// S^1-invariant contact form  a1(theta) dt + a2(theta) dphi  on S1 x S2.
// The base pair is a1 = 3u^2 - 1, a2 = -sqrt6 u (1 - u^2) in u = cos(theta);
// the profile multiplies both by e^{f(u)}. Writing
//   a1' = e^f sin(theta) P(u),   a2' = e^f sin(theta) Q(u),
//   a x a'  = e^{2f} sin(theta) W(u),
//   a' x a'' = -e^{2f} sin^3(theta) V(u),
// reduces every structural question to polynomials with coefficients in
// Q(sqrt6), which this class precomputes exactly.
class FormProfile {
 public:
  static FormProfile taubes() { return FormProfile(ConformalExponent{}); }
  explicit FormProfile(ConformalExponent exponent);

  const ConformalExponent& exponent() const { return exp_; }
  const SurdPoly& f() const { return f_; }
  const SurdPoly& fu() const { return fu_; }
  const SurdPoly& P() const { return P_; }
  const SurdPoly& Q() const { return Q_; }
  const SurdPoly& W() const { return W_; }
  const SurdPoly& V() const { return V_; }
  const SurdPoly& dP() const { return dP_; }
  const SurdPoly& dQ() const { return dQ_; }
  const SurdPoly& dW() const { return dW_; }

  double conformal(double theta) const;        // e^{f(cos theta)}
  double a1(double theta) const;
  double a2(double theta) const;
  double da1(double theta) const;
  double da2(double theta) const;
  double cross(double theta) const;            // a x a' = a1 a2' - a2 a1'
  double cross_over_sin_u(double u) const;     // (a x a')/sin, smooth through the poles
  double a1_at_pole(Pole p) const;
  double conformal_at_pole(Pole p) const;

  // f(u) == f(-u) exactly; required by the quotient catalog.
  bool sigma_symmetric() const;

 private:
  ConformalExponent exp_;
  SurdPoly f_, fu_, P_, Q_, W_, V_, dP_, dQ_, dW_;
};

struct ContactCertificate {
  bool pass = false;
  double worst_margin = 0.0;  // max of (a x a')/sin over the grid; negative iff contact
  double worst_theta = 0.0;
  std::string message;
};

struct ReebVector {
  double dt = 0.0;
  double dphi = 0.0;
};

struct MorseBottFamily {
  double theta0 = 0.0;
  long long winding_t = 0;    // primitive (t, phi) winding of the orbits
  long long winding_phi = 0;
  double action = 0.0;        // 2 pi (m a1 + n a2)(theta0) > 0
  long long homology_class = 0;  // = -winding_t; S^1 factor oriented by -dt
  bool contractible = false;
  long long slope_p = 0;  // a1'/a2' = p/q at theta0, gcd-reduced, q >= 0
  long long slope_q = 1;
};

struct MorseBottCatalog {
  std::vector<MorseBottFamily> families;  // sorted by theta0
  long long winding_bound = 0;            // heuristic search bound M(L)
  int grid_size = 0;
  double cutoff = 0.0;
};

struct ExceptionalOrbitData {
  Pole pole = Pole::north;
  double action = 0.0;
  Surd rotation;  // exact, reduced mod 1 into (0,1)
};

struct TechnicalConditionEntry {
  double theta0 = 0.0;
  double margin = 0.0;  // a' x a'' at theta0, must be < 0
};

struct TechnicalCertificate {
  bool pass = false;
  std::vector<TechnicalConditionEntry> entries;
};

std::pair<double, double> evaluate_profile(const FormProfile& profile, double theta);

ContactCertificate contact_certificate(const FormProfile& profile, int grid_size = 4096);

// Certificate for a raw coefficient pair (interior grid only); used to reject
// degenerate pairs that are not conformal rescalings of the base form.
ContactCertificate contact_certificate_raw(const std::function<double(double)>& a1,
                                           const std::function<double(double)>& a2,
                                           const std::function<double(double)>& da1,
                                           const std::function<double(double)>& da2,
                                           int grid_size = 4096);

// Interior Reeb field (a2', -a1')/(a x a'); throws within 1e-9 of a pole.
ReebVector reeb_field(const FormProfile& profile, double theta);
// At a pole the field is (1/a1) d/dt; returns dt/ds.
double reeb_at_pole(const FormProfile& profile, Pole pole);

// All Morse-Bott torus families with action below the cutoff, found by a
// rational-slope search up to the reported winding bound.
MorseBottCatalog morse_bott_catalog(const FormProfile& profile, double cutoff,
                                    int grid_size = 10000);

ExceptionalOrbitData exceptional_rotation(const FormProfile& profile, Pole pole);

TechnicalCertificate technical_condition_check(const FormProfile& profile,
                                               const std::vector<MorseBottFamily>& families);

}  // namespace echreeb
