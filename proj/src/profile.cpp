#include "echreeb/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace echreeb {

namespace {

SurdPoly base_a1() { return {Surd(-1), Surd(0), Surd(3)}; }  // 3u^2 - 1

SurdPoly base_a2() {  // -sqrt6 u (1 - u^2)
  const Surd s6 = Surd::sqrt6();
  return {Surd(0), -s6, Surd(0), s6};
}

long long llgcd(long long a, long long b) { return std::gcd(a, b); }

}  // namespace

SurdPoly ConformalExponent::combined() const {
  SurdPoly out = poly;
  if (out.empty()) out.push_back(Surd(0));
  out[0] -= c;
  poly_trim(out);
  return out;
}

FormProfile::FormProfile(ConformalExponent exponent) : exp_(std::move(exponent)) {
  f_ = exp_.combined();
  fu_ = poly_derivative(f_);
  const SurdPoly a1p = base_a1();
  const SurdPoly u_one_minus_u2 = {Surd(0), Surd(1), Surd(0), Surd(-1)};
  // a1' = e^f sin * P,  P = -f_u (3u^2-1) - 6u
  P_ = poly_sub(poly_scale(Surd(-1), poly_mul(fu_, a1p)), SurdPoly{Surd(0), Surd(6)});
  // a2' = e^f sin * Q,  Q = sqrt6 (f_u u (1-u^2) - (3u^2-1))
  Q_ = poly_scale(Surd::sqrt6(), poly_sub(poly_mul(fu_, u_one_minus_u2), a1p));
  W_ = poly_sub(poly_mul(a1p, Q_), poly_mul(base_a2(), P_));
  dP_ = poly_derivative(P_);
  dQ_ = poly_derivative(Q_);
  dW_ = poly_derivative(W_);
  V_ = poly_sub(poly_mul(P_, dQ_), poly_mul(Q_, dP_));
}

double FormProfile::conformal(double theta) const { return std::exp(poly_eval(f_, std::cos(theta))); }

double FormProfile::a1(double theta) const {
  const double u = std::cos(theta);
  return conformal(theta) * (3.0 * u * u - 1.0);
}

double FormProfile::a2(double theta) const {
  const double u = std::cos(theta);
  const double s = std::sin(theta);
  return conformal(theta) * (-std::sqrt(6.0) * u * s * s);
}

double FormProfile::da1(double theta) const {
  return conformal(theta) * std::sin(theta) * poly_eval(P_, std::cos(theta));
}

double FormProfile::da2(double theta) const {
  return conformal(theta) * std::sin(theta) * poly_eval(Q_, std::cos(theta));
}

double FormProfile::cross(double theta) const {
  const double e = conformal(theta);
  return e * e * std::sin(theta) * poly_eval(W_, std::cos(theta));
}

double FormProfile::cross_over_sin_u(double u) const {
  const double e = std::exp(poly_eval(f_, u));
  return e * e * poly_eval(W_, u);
}

double FormProfile::conformal_at_pole(Pole p) const {
  return std::exp(poly_eval(f_, p == Pole::north ? 1.0 : -1.0));
}

double FormProfile::a1_at_pole(Pole p) const { return 2.0 * conformal_at_pole(p); }

bool FormProfile::sigma_symmetric() const {
  for (std::size_t k = 1; k < f_.size(); k += 2)
    if (!f_[k].is_zero()) return false;
  return true;
}

std::pair<double, double> evaluate_profile(const FormProfile& profile, double theta) {
  if (!(theta >= 0.0 && theta <= kPi))
    throw std::domain_error("evaluate_profile: theta outside [0, pi]");
  return {profile.a1(theta), profile.a2(theta)};
}

ContactCertificate contact_certificate(const FormProfile& profile, int grid_size) {
  if (grid_size < 2) throw std::invalid_argument("contact_certificate: grid_size must be >= 2");
  ContactCertificate cert;
  cert.worst_margin = -std::numeric_limits<double>::infinity();
  // (a x a')/sin extends smoothly to the poles; scan u = cos(theta) inclusive.
  for (int i = 0; i <= grid_size; ++i) {
    const double theta = kPi * i / grid_size;
    const double m = profile.cross_over_sin_u(std::cos(theta));
    if (m > cert.worst_margin) {
      cert.worst_margin = m;
      cert.worst_theta = theta;
    }
  }
  cert.pass = cert.worst_margin < 0.0;
  if (!cert.pass) {
    std::ostringstream os;
    os << "contact positivity violated at theta=" << cert.worst_theta
       << " (margin=" << cert.worst_margin << ")";
    cert.message = os.str();
  }
  return cert;
}

ContactCertificate contact_certificate_raw(const std::function<double(double)>& a1,
                                           const std::function<double(double)>& a2,
                                           const std::function<double(double)>& da1,
                                           const std::function<double(double)>& da2,
                                           int grid_size) {
  if (grid_size < 2) throw std::invalid_argument("contact_certificate: grid_size must be >= 2");
  ContactCertificate cert;
  cert.worst_margin = -std::numeric_limits<double>::infinity();
  for (int i = 1; i < grid_size; ++i) {
    const double theta = kPi * i / grid_size;
    const double m = (a1(theta) * da2(theta) - a2(theta) * da1(theta)) / std::sin(theta);
    if (m > cert.worst_margin) {
      cert.worst_margin = m;
      cert.worst_theta = theta;
    }
  }
  cert.pass = cert.worst_margin < 0.0;
  if (!cert.pass) {
    std::ostringstream os;
    os << "contact positivity violated at theta=" << cert.worst_theta
       << " (margin=" << cert.worst_margin << ")";
    cert.message = os.str();
  }
  return cert;
}

ReebVector reeb_field(const FormProfile& profile, double theta) {
  if (theta < 1e-9 || theta > kPi - 1e-9)
    throw std::domain_error("reeb_field: interior formula invalid at a pole; use reeb_at_pole");
  const double g = profile.cross(theta);
  return {profile.da2(theta) / g, -profile.da1(theta) / g};
}

double reeb_at_pole(const FormProfile& profile, Pole pole) {
  return 1.0 / profile.a1_at_pole(pole);
}

namespace {

struct Slope {
  long long p, q;  // a1'/a2' = p/q, q >= 0, gcd-reduced
};

std::vector<Slope> primitive_slopes(long long bound) {
  std::vector<Slope> out;
  out.push_back({1, 0});  // vertical slope (a2' = 0)
  for (long long q = 1; q <= bound; ++q)
    for (long long p = -bound; p <= bound; ++p) {
      if (llgcd(std::llabs(p), q) != 1) continue;
      out.push_back({p, q});
    }
  return out;
}

}  // namespace

MorseBottCatalog morse_bott_catalog(const FormProfile& profile, double cutoff, int grid_size) {
  if (cutoff <= 0.0) throw std::invalid_argument("morse_bott_catalog: cutoff must be positive");
  if (grid_size < 16) throw std::invalid_argument("morse_bott_catalog: grid too small");
  const auto cert = contact_certificate(profile, std::max(grid_size, 1024));
  if (!cert.pass)
    throw std::runtime_error("morse_bott_catalog: " + cert.message);

  // Winding bound M(L): at a family angle the action equals
  // 2 pi |a x a'| |(m,n)| / |a'|, so max(|m|,|n|) <= L sup(|a'|/(2 pi |a x a'|)).
  // The ratio |(P,Q)|/(e^f |W|) is smooth through the poles. Heuristic: the sup
  // is taken over the same grid used for root scanning.
  double sup_ratio = 0.0;
  for (int i = 0; i <= grid_size; ++i) {
    const double u = std::cos(kPi * i / grid_size);
    const double pv = poly_eval(profile.P(), u);
    const double qv = poly_eval(profile.Q(), u);
    const double wv = std::exp(poly_eval(profile.f(), u)) * poly_eval(profile.W(), u);
    sup_ratio = std::max(sup_ratio, std::hypot(pv, qv) / std::abs(wv));
  }
  const long long bound = std::max<long long>(1, static_cast<long long>(std::ceil(cutoff * sup_ratio / (2.0 * kPi))));

  MorseBottCatalog catalog;
  catalog.winding_bound = bound;
  catalog.grid_size = grid_size;
  catalog.cutoff = cutoff;

  const auto slope_fn = [&](const Slope& s, double theta) {
    const double u = std::cos(theta);
    return static_cast<double>(s.q) * poly_eval(profile.P(), u) -
           static_cast<double>(s.p) * poly_eval(profile.Q(), u);
  };

  for (const Slope& s : primitive_slopes(bound)) {
    std::vector<double> roots;
    double prev_theta = kPi * 1.0 / grid_size;
    double prev_val = slope_fn(s, prev_theta);
    for (int i = 2; i < grid_size; ++i) {
      const double theta = kPi * i / grid_size;
      const double val = slope_fn(s, theta);
      const bool crossing = (prev_val == 0.0) || (prev_val < 0.0 && val > 0.0) || (prev_val > 0.0 && val < 0.0);
      if (crossing) {
        double lo = prev_theta, hi = theta;
        double flo = prev_val;
        if (flo == 0.0) {
          roots.push_back(lo);
        } else {
          int iter = 0;
          while (hi - lo > 1e-12) {
            if (++iter > 200) {
              std::ostringstream os;
              os << "morse_bott_catalog: root refinement stalled for slope " << s.p << "/" << s.q
                 << " in [" << lo << ", " << hi << "]";
              throw std::runtime_error(os.str());
            }
            const double mid = 0.5 * (lo + hi);
            const double fmid = slope_fn(s, mid);
            if (fmid == 0.0) {
              lo = hi = mid;
              break;
            }
            if ((flo < 0.0) == (fmid < 0.0)) {
              lo = mid;
              flo = fmid;
            } else {
              hi = mid;
            }
          }
          roots.push_back(0.5 * (lo + hi));
        }
      }
      prev_theta = theta;
      prev_val = val;
    }
    // Deduplicate near-coincident roots of the same slope.
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                roots.end());

    for (double theta0 : roots) {
      long long m = s.q, n = -s.p;
      double action = 2.0 * kPi * (static_cast<double>(m) * profile.a1(theta0) +
                                   static_cast<double>(n) * profile.a2(theta0));
      if (action < 0.0) {
        m = -m;
        n = -n;
        action = -action;
      }
      if (action >= cutoff) continue;
      MorseBottFamily fam;
      fam.theta0 = theta0;
      fam.winding_t = m;
      fam.winding_phi = n;
      fam.action = action;
      fam.homology_class = -m;
      fam.contractible = (m == 0);
      fam.slope_p = s.p;
      fam.slope_q = s.q;
      catalog.families.push_back(fam);
    }
  }

  std::sort(catalog.families.begin(), catalog.families.end(),
            [](const MorseBottFamily& a, const MorseBottFamily& b) { return a.theta0 < b.theta0; });
  return catalog;
}

ExceptionalOrbitData exceptional_rotation(const FormProfile& profile, Pole pole) {
  const Surd u0 = (pole == Pole::north) ? Surd(1) : Surd(-1);
  const Surd Pv = poly_eval(profile.P(), u0);
  const Surd Qv = poly_eval(profile.Q(), u0);
  if (Qv.is_zero())
    throw std::domain_error("exceptional_rotation: a2' limit vanishes at the pole");
  // rotation = sign(lim -a2'/(sin cos)) * (a1'/a2')(pole), with
  // lim -a2'/(sin cos) = -e^f Q(u0)/u0.
  const int sgn = -(Qv * u0).sign();
  Surd rot = (Surd(sgn) * Pv / Qv).mod1();
  if (rot.is_zero())
    throw std::domain_error("exceptional_rotation: integer rotation class (degenerate orbit)");
  ExceptionalOrbitData out;
  out.pole = pole;
  out.action = 2.0 * kPi * profile.a1_at_pole(pole);
  out.rotation = rot;
  return out;
}

TechnicalCertificate technical_condition_check(const FormProfile& profile,
                                               const std::vector<MorseBottFamily>& families) {
  TechnicalCertificate cert;
  cert.pass = true;
  for (const auto& fam : families) {
    const double s = std::sin(fam.theta0);
    const double e = profile.conformal(fam.theta0);
    // a' x a'' = -e^{2f} sin^3 V(u)
    const double margin = -e * e * s * s * s * poly_eval(profile.V(), std::cos(fam.theta0));
    cert.entries.push_back({fam.theta0, margin});
    if (!(margin < 0.0)) cert.pass = false;
  }
  return cert;
}

}  // namespace echreeb
