#include "omnihex/vehicle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include <Eigen/SVD>

#include "omnihex/errors.hpp"

namespace omnihex {

void RotorLayout::validate() const {
  auto fail = [](const std::string& msg) { throw InvalidArgument("RotorLayout: " + msg); };
  if (!(arm_length > 0.0) || !std::isfinite(arm_length)) fail("arm_length must be > 0");
  if (!(max_thrust > 0.0) || !std::isfinite(max_thrust)) fail("max_thrust must be > 0");
  if (!std::isfinite(drag_ratio)) fail("drag_ratio must be finite");
  for (int s : spin_signs) {
    if (s != 1 && s != -1) fail("spin signs must be +1 or -1");
  }
  constexpr double kHalfPi = std::numbers::pi / 2;
  if (!(alpha >= 0.0 && alpha <= kHalfPi)) fail("alpha must lie in [0, pi/2]");
  if (!(beta >= 0.0 && beta <= kHalfPi)) fail("beta must lie in [0, pi/2]");
}

namespace {

void check_index(int rotor) {
  if (rotor < 1 || rotor > kRotorCount) {
    throw IndexOutOfRange("rotor index " + std::to_string(rotor) + " outside 1..6");
  }
}

double azimuth(int rotor) { return (rotor - 1) * std::numbers::pi / 3.0; }

}  // namespace

int tilt_sign(int rotor) {
  check_index(rotor);
  return (rotor % 2 == 1) ? 1 : -1;
}

Vec3 rotor_position(int rotor, double arm_length) {
  check_index(rotor);
  const double psi = azimuth(rotor);
  return Vec3(arm_length * std::cos(psi), arm_length * std::sin(psi), 0.0);
}

Rotation rotor_orientation(int rotor, double alpha, double beta) {
  const int s = tilt_sign(rotor);
  return rot_z(azimuth(rotor)) * rot_x(s * alpha) * rot_y(s * beta);
}

Vec3 thrust_axis(int rotor, double alpha, double beta) {
  return rotor_orientation(rotor, alpha, beta).col(2);
}

Vec3 torque_axis(const RotorLayout& layout, int rotor) {
  const Vec3 u = thrust_axis(rotor, layout.alpha, layout.beta);
  const Vec3 r = rotor_position(rotor, layout.arm_length);
  return r.cross(u) + layout.drag_ratio * layout.spin_signs[rotor - 1] * u;
}

AllocationMatrix allocation_matrix(const RotorLayout& layout) {
  Mat6 m;
  for (int i = 1; i <= kRotorCount; ++i) {
    m.col(i - 1) << torque_axis(layout, i), thrust_axis(i, layout.alpha, layout.beta);
  }
  return AllocationMatrix(m);
}

int AllocationMatrix::rank() const {
  Eigen::JacobiSVD<Mat6> svd(m_);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol::kRank * sv(0)) ++r;
  }
  return r;
}

double AllocationMatrix::condition_number() const {
  Eigen::JacobiSVD<Mat6> svd(m_);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smin;
}

Wrench gravity_wrench(const Rotation& attitude, double mass, double gravity) {
  return Wrench(Vec3::Zero(), attitude.transpose() * Vec3(0.0, 0.0, -mass * gravity));
}

StateDerivative dynamics(const RigidBodyState& state, const Wrench& applied,
                         const VehicleParams& params) {
  const auto& inertia = params.inertia;
  const Twist& t = state.twist;
  const Wrench momentum = inertia.momentum(t);
  // ad_T^T (I T) = [J w x w - v x m v ; -w x m v]
  const Vec3 w = t.angular(), v = t.linear();
  const Wrench coriolis(momentum.torque().cross(w) + momentum.force().cross(v),
                        momentum.force().cross(w));
  const Wrench gravity = gravity_wrench(state.pose.rotation(), inertia.mass(), params.gravity);
  return {t, inertia.solve(coriolis + gravity + applied)};
}

Wrench inertial_momentum(const RigidBodyState& state, const SpatialInertia& inertia) {
  return co_adjoint_wrench(state.pose.inverse(), inertia.momentum(state.twist));
}

}  // namespace omnihex
