#pragma once

// Tilted-hexarotor geometry and rigid-body dynamics.
//
// Rotor i (1-based) sits at r_i = Rz(psi_i) [L 0 0]^T, psi_i = (i-1) pi/3, and
// thrusts along u_i = Rz(psi_i) Rx(alpha_i) Ry(beta_i) e3 with the alternating
// tilt pattern alpha_i = (-1)^(i+1) alpha, beta_i = (-1)^(i+1) beta.

#include <array>

#include "omnihex/se3.hpp"
#include "omnihex/spatial_inertia.hpp"

namespace omnihex {

inline constexpr int kRotorCount = 6;

using Thrusts = Vec6;

struct RotorLayout {
  double arm_length = 1.0;   ///< L [m], distance from the central axis
  double drag_ratio = 0.0;   ///< gamma [m], drag torque / thrust
  double max_thrust = 1.0;   ///< lambda_max [N], bidirectional bound
  std::array<int, kRotorCount> spin_signs{+1, -1, +1, -1, +1, -1};
  double alpha = 0.0;        ///< [rad], 0 <= alpha <= pi/2
  double beta = 0.0;         ///< [rad], 0 <= beta <= pi/2

  /// Throws InvalidArgument when a field is out of its domain.
  void validate() const;
};

/// Tilt sign (-1)^(i+1) for 1-based rotor index i.
int tilt_sign(int rotor);

/// r_i. Throws IndexOutOfRange unless 1 <= rotor <= 6.
Vec3 rotor_position(int rotor, double arm_length);

/// R_{p_i}^B.
Rotation rotor_orientation(int rotor, double alpha, double beta);

/// u_i = R_{p_i}^B e3.
Vec3 thrust_axis(int rotor, double alpha, double beta);

/// tau_d = gamma * sigma * lambda.
inline double drag_torque(double thrust, double drag_ratio, int spin_sign) {
  return drag_ratio * spin_sign * thrust;
}

/// t_i = r_i x u_i + gamma sigma_i u_i.
Vec3 torque_axis(const RotorLayout& layout, int rotor);

/// Maps rotor thrusts to the body wrench, rows ordered [torque; force].
class AllocationMatrix {
 public:
  explicit AllocationMatrix(const Mat6& m) : m_(m) {}

  const Mat6& matrix() const { return m_; }
  Eigen::Matrix<double, 3, 6> torque_map() const { return m_.topRows<3>(); }
  Eigen::Matrix<double, 3, 6> force_map() const { return m_.bottomRows<3>(); }

  Wrench apply(const Thrusts& thrusts) const { return Wrench(Vec6(m_ * thrusts)); }

  /// Numerical rank with singular values below tol::kRank * sigma_max
  /// treated as zero.
  int rank() const;

  /// sigma_max / sigma_min; infinity when singular.
  double condition_number() const;

 private:
  Mat6 m_;
};

AllocationMatrix allocation_matrix(const RotorLayout& layout);

/// Gravity as seen in the body frame: Ad^T_{(R,0)} [0 0 0 0 0 -mg].
Wrench gravity_wrench(const Rotation& attitude, double mass, double gravity);

struct VehicleParams {
  SpatialInertia inertia = SpatialInertia::diagonal(Vec3(0.5, 0.5, 2.0), 0.6);
  RotorLayout layout{};
  double gravity = 9.81;
};

struct RigidBodyState {
  Pose pose;
  Twist twist;
};

/// Right-hand side of the Euler-Poincare equations.
struct StateDerivative {
  Twist velocity;      ///< body twist T, so that H_dot = H hat(T)
  Twist acceleration;  ///< T_dot
};

/// T_dot = I^-1 (ad_T^T (I T) + W_g + W_p). `applied` is every non-gravity
/// wrench acting on the body (propellers plus disturbances).
StateDerivative dynamics(const RigidBodyState& state, const Wrench& applied,
                         const VehicleParams& params);

/// Inertial-frame spatial momentum Ad_{H^-1}^T (I T); constant when no
/// external wrench acts.
Wrench inertial_momentum(const RigidBodyState& state, const SpatialInertia& inertia);

}  // namespace omnihex
