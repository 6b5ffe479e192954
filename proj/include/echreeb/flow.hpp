#pragma once

#include <array>
#include <vector>

#include "echreeb/profile.hpp"

namespace echreeb {

// Point on S1 x S2 along the flow. Near the poles (sin theta < 0.05) the
// Cartesian chart (x, y) = (sin theta cos phi, sin theta sin phi) is used.
struct FlowState {
  double t = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  bool polar_chart = false;
  Pole pole = Pole::north;
  double x = 0.0;
  double y = 0.0;
};

inline constexpr double kChartSwitchSin = 0.05;

FlowState make_interior_state(double t, double theta, double phi);
FlowState make_polar_state(double t, Pole pole, double x = 0.0, double y = 0.0);
FlowState to_polar_chart(const FlowState& s);
FlowState to_interior_chart(const FlowState& s);

struct Trajectory {
  std::vector<FlowState> samples;
  double max_reeb_pairing_error = 0.0;  // max |lambda(R) - 1| seen along the way
};

// Fixed-step RK4 along the Reeb field.
Trajectory integrate_flow(const FormProfile& profile, const FlowState& start, double duration,
                          double step);

// First-return time of a family orbit to its start point; must agree with the
// closed-form action. Throws if the orbit fails to close within 3x the
// predicted period.
double measure_period(const FormProfile& profile, const MorseBottFamily& family,
                      int steps_per_period = 1 << 14);
double measure_pole_period(const FormProfile& profile, Pole pole, int steps_per_period = 1 << 14);

enum class OrbitClass { elliptic, positive_hyperbolic, negative_hyperbolic, degenerate_shear };

struct ReturnMapReport {
  double period = 0.0;
  std::array<std::array<double, 2>, 2> monodromy{};  // in the <d/dtheta, a-perp> basis
  OrbitClass classification = OrbitClass::degenerate_shear;
  double rotation = 0.0;  // elliptic only, mod 1 in (0,1)
  double shear = 0.0;     // degenerate-shear only: lower-left entry, = r(theta0) * action
  double det_error = 0.0;
};

// Integrates the variational equation over one period and projects onto the
// <d/dtheta, a-perp> trivialization of the contact planes.
ReturnMapReport linearized_return(const FormProfile& profile, const MorseBottFamily& family,
                                  int steps_per_period = 1 << 14);
// Same for an exceptional orbit, in the Cartesian chart; reports the rotation
// class measured against the d(lambda) orientation of the contact planes.
ReturnMapReport linearized_return_pole(const FormProfile& profile, Pole pole,
                                       int steps_per_period = 1 << 14);

}  // namespace echreeb
