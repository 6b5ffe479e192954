#include "echreeb/flow.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace echreeb {

namespace {

double wrap_2pi(double a) {
  double w = std::fmod(a, 2.0 * kPi);
  if (w < 0.0) w += 2.0 * kPi;
  return w;
}

// dt/ds and dphi/ds as functions of u = cos(theta).
struct FieldEval {
  double tdot;
  double phidot;
};

FieldEval field_at_u(const FormProfile& pr, double u) {
  const double ef = std::exp(poly_eval(pr.f(), u));
  const double w = ef * poly_eval(pr.W(), u);
  return {poly_eval(pr.Q(), u) / w, -poly_eval(pr.P(), u) / w};
}

// d(phidot)/du, used by the polar variational system.
double phidot_du(const FormProfile& pr, double u) {
  const double ef = std::exp(poly_eval(pr.f(), u));
  const double fu = poly_eval(pr.fu(), u);
  const double P = poly_eval(pr.P(), u);
  const double dP = poly_eval(pr.dP(), u);
  const double W = poly_eval(pr.W(), u);
  const double dW = poly_eval(pr.dW(), u);
  return -((dP - fu * P) * W - P * dW) / (ef * W * W);
}

}  // namespace

FlowState make_interior_state(double t, double theta, double phi) {
  if (theta <= 0.0 || theta >= kPi)
    throw std::domain_error("make_interior_state: theta must lie in (0, pi)");
  FlowState s;
  s.t = wrap_2pi(t);
  s.theta = theta;
  s.phi = wrap_2pi(phi);
  return s;
}

FlowState make_polar_state(double t, Pole pole, double x, double y) {
  FlowState s;
  s.t = wrap_2pi(t);
  s.polar_chart = true;
  s.pole = pole;
  s.x = x;
  s.y = y;
  const double r = std::hypot(x, y);
  s.theta = (pole == Pole::north) ? std::asin(r) : kPi - std::asin(r);
  s.phi = wrap_2pi(std::atan2(y, x));
  return s;
}

FlowState to_polar_chart(const FlowState& s) {
  if (s.polar_chart) return s;
  FlowState out = s;
  out.polar_chart = true;
  out.pole = (s.theta < 0.5 * kPi) ? Pole::north : Pole::south;
  const double r = std::sin(s.theta);
  out.x = r * std::cos(s.phi);
  out.y = r * std::sin(s.phi);
  return out;
}

FlowState to_interior_chart(const FlowState& s) {
  if (!s.polar_chart) return s;
  const double r = std::hypot(s.x, s.y);
  if (r > 1.0 + 1e-12) {
    std::ostringstream os;
    os << "chart switch failed: |(x,y)| = " << r << " > 1 at t=" << s.t;
    throw std::runtime_error(os.str());
  }
  FlowState out;
  out.t = s.t;
  const double rc = std::min(r, 1.0);
  out.theta = (s.pole == Pole::north) ? std::asin(rc) : kPi - std::asin(rc);
  out.phi = wrap_2pi(std::atan2(s.y, s.x));
  return out;
}

namespace {

void rk4_step_interior(const FormProfile& pr, FlowState& s, double h) {
  // theta is a first integral (the field has no d/dtheta component), so all
  // four stages see the same theta and the step is exact.
  auto deriv = [&](double theta, double* dt, double* dth, double* dphi) {
    const auto f = field_at_u(pr, std::cos(theta));
    *dt = f.tdot;
    *dth = 0.0;
    *dphi = f.phidot;
  };
  double k1t, k1h, k1p, k2t, k2h, k2p, k3t, k3h, k3p, k4t, k4h, k4p;
  deriv(s.theta, &k1t, &k1h, &k1p);
  deriv(s.theta + 0.5 * h * k1h, &k2t, &k2h, &k2p);
  deriv(s.theta + 0.5 * h * k2h, &k3t, &k3h, &k3p);
  deriv(s.theta + h * k3h, &k4t, &k4h, &k4p);
  s.t += h / 6.0 * (k1t + 2.0 * k2t + 2.0 * k3t + k4t);
  s.theta += h / 6.0 * (k1h + 2.0 * k2h + 2.0 * k3h + k4h);
  s.phi += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
}

void rk4_step_polar(const FormProfile& pr, FlowState& s, double h) {
  const double sp = (s.pole == Pole::north) ? 1.0 : -1.0;
  auto deriv = [&](double x, double y, double* dx, double* dy, double* dt) {
    const double r2 = x * x + y * y;
    const double u = sp * std::sqrt(std::max(0.0, 1.0 - r2));
    const auto f = field_at_u(pr, u);
    *dx = -y * f.phidot;
    *dy = x * f.phidot;
    *dt = f.tdot;
  };
  double k1x, k1y, k1t, k2x, k2y, k2t, k3x, k3y, k3t, k4x, k4y, k4t;
  deriv(s.x, s.y, &k1x, &k1y, &k1t);
  deriv(s.x + 0.5 * h * k1x, s.y + 0.5 * h * k1y, &k2x, &k2y, &k2t);
  deriv(s.x + 0.5 * h * k2x, s.y + 0.5 * h * k2y, &k3x, &k3y, &k3t);
  deriv(s.x + h * k3x, s.y + h * k3y, &k4x, &k4y, &k4t);
  s.x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
  s.y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
  s.t += h / 6.0 * (k1t + 2.0 * k2t + 2.0 * k3t + k4t);
  const double r = std::hypot(s.x, s.y);
  s.theta = (s.pole == Pole::north) ? std::asin(std::min(r, 1.0)) : kPi - std::asin(std::min(r, 1.0));
  s.phi = std::atan2(s.y, s.x);
}

double reeb_pairing_error(const FormProfile& pr, const FlowState& s) {
  const double u = std::cos(s.theta);
  const auto f = field_at_u(pr, u);
  return std::abs(pr.a1(s.theta) * f.tdot + pr.a2(s.theta) * f.phidot - 1.0);
}

}  // namespace

Trajectory integrate_flow(const FormProfile& pr, const FlowState& start, double duration,
                          double step) {
  if (step <= 0.0) throw std::invalid_argument("integrate_flow: step must be positive");
  if (duration < 0.0) throw std::invalid_argument("integrate_flow: duration must be nonnegative");
  Trajectory traj;
  FlowState s = start;
  traj.samples.push_back(s);
  if (duration == 0.0) return traj;

  double remaining = duration;
  while (remaining > 0.0) {
    const double h = std::min(step, remaining);
    if (s.polar_chart) {
      rk4_step_polar(pr, s, h);
      if (std::sin(s.theta) >= kChartSwitchSin) s = to_interior_chart(s);
    } else {
      rk4_step_interior(pr, s, h);
      if (std::sin(s.theta) < kChartSwitchSin) s = to_polar_chart(s);
    }
    traj.max_reeb_pairing_error = std::max(traj.max_reeb_pairing_error, reeb_pairing_error(pr, s));
    FlowState rec = s;
    rec.t = wrap_2pi(rec.t);
    rec.phi = wrap_2pi(rec.phi);
    traj.samples.push_back(rec);
    remaining -= h;
  }
  return traj;
}

double measure_period(const FormProfile& pr, const MorseBottFamily& family, int steps_per_period) {
  const double predicted = family.action;  // lambda(R) = 1 makes action = period
  const double h = predicted / steps_per_period;
  const double u = std::cos(family.theta0);

  // Integrate accumulated (t, phi) displacements without wrapping.
  double t_acc = 0.0, phi_acc = 0.0, s_time = 0.0;
  const double t_target = 2.0 * kPi * static_cast<double>(family.winding_t);
  const double phi_target = 2.0 * kPi * static_cast<double>(family.winding_phi);
  const bool use_t = family.winding_t != 0;

  const double limit = 3.0 * predicted;
  while (s_time < limit) {
    const auto f = field_at_u(pr, u);
    const double t_next = t_acc + h * f.tdot;
    const double phi_next = phi_acc + h * f.phidot;
    const double cur = use_t ? t_acc : phi_acc;
    const double nxt = use_t ? t_next : phi_next;
    const double target = use_t ? t_target : phi_target;
    if ((cur - target) * (nxt - target) <= 0.0 && cur != nxt && std::abs(nxt) >= std::abs(target) - 1e-13) {
      const double frac = (target - cur) / (nxt - cur);
      const double s_star = s_time + frac * h;
      const double other = use_t ? (phi_acc + frac * h * f.phidot) : (t_acc + frac * h * f.tdot);
      const double other_target = use_t ? phi_target : t_target;
      if (std::abs(other - other_target) > 1e-6) {
        std::ostringstream os;
        os << "measure_period: orbit at theta0=" << family.theta0
           << " did not close (secondary winding off by " << (other - other_target) << ")";
        throw std::runtime_error(os.str());
      }
      return s_star;
    }
    t_acc = t_next;
    phi_acc = phi_next;
    s_time += h;
  }
  std::ostringstream os;
  os << "measure_period: no return within 3x predicted period for theta0=" << family.theta0;
  throw std::runtime_error(os.str());
}

double measure_pole_period(const FormProfile& pr, Pole pole, int steps_per_period) {
  const double predicted = 2.0 * kPi * pr.a1_at_pole(pole);
  const double h = predicted / steps_per_period;
  const double u = (pole == Pole::north) ? 1.0 : -1.0;
  double t_acc = 0.0, s_time = 0.0;
  const double limit = 3.0 * predicted;
  while (s_time < limit) {
    const auto f = field_at_u(pr, u);
    const double t_next = t_acc + h * f.tdot;
    if (std::abs(t_next) >= 2.0 * kPi) {
      const double frac = (2.0 * kPi * (t_next > 0 ? 1.0 : -1.0) - t_acc) / (t_next - t_acc);
      return s_time + frac * h;
    }
    t_acc = t_next;
    s_time += h;
  }
  throw std::runtime_error("measure_pole_period: no return within 3x predicted period");
}

namespace {

ReturnMapReport classify(const std::array<std::array<double, 2>, 2>& M, double period) {
  ReturnMapReport rep;
  rep.period = period;
  rep.monodromy = M;
  const double det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
  rep.det_error = std::abs(det - 1.0);
  if (rep.det_error > 1e-4)
    throw std::runtime_error("linearized_return: monodromy determinant drifted from 1");
  const double tr = M[0][0] + M[1][1];
  if (std::abs(M[0][0] - 1.0) < 1e-6 && std::abs(M[1][1] - 1.0) < 1e-6 && std::abs(M[0][1]) < 1e-6) {
    rep.classification = OrbitClass::degenerate_shear;
    rep.shear = M[1][0];
  } else if (tr > -2.0 && tr < 2.0) {
    rep.classification = OrbitClass::elliptic;
    double frac = std::atan2(0.5 * (M[1][0] - M[0][1]), 0.5 * tr) / (2.0 * kPi);
    frac -= std::floor(frac);
    rep.rotation = frac;
  } else if (tr >= 2.0) {
    rep.classification = OrbitClass::positive_hyperbolic;
  } else {
    rep.classification = OrbitClass::negative_hyperbolic;
  }
  return rep;
}

}  // namespace

ReturnMapReport linearized_return(const FormProfile& pr, const MorseBottFamily& family,
                                  int steps_per_period) {
  const double T = measure_period(pr, family, steps_per_period);
  const double theta0 = family.theta0;
  const double u = std::cos(theta0);
  const double sn = std::sin(theta0);
  const double ef = std::exp(poly_eval(pr.f(), u));
  const double fu = poly_eval(pr.fu(), u);
  const double P = poly_eval(pr.P(), u);
  const double Q = poly_eval(pr.Q(), u);
  const double dP = poly_eval(pr.dP(), u);
  const double dQ = poly_eval(pr.dQ(), u);
  const double W = poly_eval(pr.W(), u);
  const double dW = poly_eval(pr.dW(), u);

  // d/dtheta of the field components (Rt, Rphi) = (Q, -P)/(e^f W).
  const double dRt = -sn * ((dQ - fu * Q) * W - Q * dW) / (ef * W * W);
  const double dRphi = sn * ((dP - fu * P) * W - P * dW) / (ef * W * W);

  // Variational system in coordinates (dt, dtheta, dphi): only the dtheta
  // component sources growth. Columns start at d/dtheta and a-perp.
  double col[2][3] = {{0.0, 1.0, 0.0}, {pr.a2(theta0), 0.0, -pr.a1(theta0)}};
  const double h = T / steps_per_period;
  for (int step = 0; step < steps_per_period; ++step) {
    for (auto& v : col) {
      // dv/ds = v_theta * (dRt, 0, dRphi); constant coefficients, RK4 is exact.
      v[0] += h * v[1] * dRt;
      v[2] += h * v[1] * dRphi;
    }
  }

  const auto f = field_at_u(pr, u);
  const double a1v = pr.a1(theta0), a2v = pr.a2(theta0);
  const double det = a2v * f.phidot + a1v * f.tdot;  // = 1 analytically
  std::array<std::array<double, 2>, 2> M{};
  for (int j = 0; j < 2; ++j) {
    const double xi1 = col[j][1];
    const double xi2 = (col[j][0] * f.phidot - col[j][2] * f.tdot) / det;
    M[0][j] = xi1;
    M[1][j] = xi2;
  }
  return classify(M, T);
}

ReturnMapReport linearized_return_pole(const FormProfile& pr, Pole pole, int steps_per_period) {
  const double T = measure_pole_period(pr, pole, steps_per_period);
  const double sp = (pole == Pole::north) ? 1.0 : -1.0;
  const double h = T / steps_per_period;

  // 2x2 variational system along (x, y) = (0, 0).
  double M[2][2] = {{1.0, 0.0}, {0.0, 1.0}};
  auto jac = [&](double x, double y, double J[2][2]) {
    const double r2 = x * x + y * y;
    const double root = std::sqrt(std::max(0.0, 1.0 - r2));
    const double u = sp * root;
    const double omega = field_at_u(pr, u).phidot;
    const double dom = phidot_du(pr, u);
    const double dudx = (root > 0.0) ? -sp * x / root : 0.0;
    const double dudy = (root > 0.0) ? -sp * y / root : 0.0;
    J[0][0] = -y * dom * dudx;
    J[0][1] = -omega - y * dom * dudy;
    J[1][0] = omega + x * dom * dudx;
    J[1][1] = x * dom * dudy;
  };
  double J[2][2];
  jac(0.0, 0.0, J);
  for (int step = 0; step < steps_per_period; ++step) {
    // RK4 for dM/ds = J M with J constant along the pole orbit.
    double k1[2][2], k2[2][2], k3[2][2], k4[2][2], tmp[2][2];
    auto mul = [&](const double A[2][2], const double B[2][2], double C[2][2]) {
      C[0][0] = A[0][0] * B[0][0] + A[0][1] * B[1][0];
      C[0][1] = A[0][0] * B[0][1] + A[0][1] * B[1][1];
      C[1][0] = A[1][0] * B[0][0] + A[1][1] * B[1][0];
      C[1][1] = A[1][0] * B[0][1] + A[1][1] * B[1][1];
    };
    mul(J, M, k1);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) tmp[i][j] = M[i][j] + 0.5 * h * k1[i][j];
    mul(J, tmp, k2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) tmp[i][j] = M[i][j] + 0.5 * h * k2[i][j];
    mul(J, tmp, k3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) tmp[i][j] = M[i][j] + h * k3[i][j];
    mul(J, tmp, k4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        M[i][j] += h / 6.0 * (k1[i][j] + 2.0 * k2[i][j] + 2.0 * k3[i][j] + k4[i][j]);
  }

  // Orientation of the Cartesian chart against d(lambda): the pairing
  // d(lambda)(dx, dy) has the sign of Q(u0)/u0, and rotation classes are
  // measured in the d(lambda) orientation.
  const double u0 = sp;
  const double orient = (poly_eval(pr.Q(), u0) / u0 > 0.0) ? 1.0 : -1.0;

  std::array<std::array<double, 2>, 2> Mo{};
  Mo[0][0] = M[0][0];
  Mo[0][1] = M[0][1];
  Mo[1][0] = M[1][0];
  Mo[1][1] = M[1][1];
  ReturnMapReport rep = classify(Mo, T);
  if (rep.classification == OrbitClass::elliptic) {
    double frac = std::atan2(0.5 * (M[1][0] - M[0][1]), 0.5 * (M[0][0] + M[1][1])) / (2.0 * kPi);
    frac *= orient;
    frac -= std::floor(frac);
    rep.rotation = frac;
  }
  return rep;
}

}  // namespace echreeb
