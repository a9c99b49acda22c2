#pragma once

// Geometric tracking controller on SE(3).
//
// With H_e = H_D^-1 H_B the configuration error and
//   phi(H_e) = 1/2 tr(K_p1 (I - R_e)) + 1/2 k_p2 |xi_e|^2
// the control wrench is W = W_ff + W_p + W_d where W_p = -dphi and
// W_d = -K_d T_e. W_ff cancels gravity and the Coriolis term and transports
// the reference acceleration, leaving the error dynamics
//   I T_e_dot = -dphi - K_d T_e.

#include "omnihex/se3.hpp"
#include "omnihex/vehicle.hpp"

namespace omnihex {

class GainSet {
 public:
  /// Throws InvariantViolation unless K_p1 and K_d are symmetric positive
  /// definite and k_p2 > 0.
  GainSet(const Mat3& kp1, double kp2, const Mat6& kd);

  /// K_p1 = 10 I, k_p2 = 3, K_d = diag(5, 5, 5, 2, 2, 2).
  static GainSet standard();

  /// All gains zero. Skips validation; useful only as an open-loop baseline.
  static GainSet open_loop();

  const Mat3& kp1() const { return kp1_; }
  double kp2() const { return kp2_; }
  const Mat6& kd() const { return kd_; }

 private:
  GainSet() = default;
  Mat3 kp1_ = Mat3::Zero();
  double kp2_ = 0.0;
  Mat6 kd_ = Mat6::Zero();
};

struct ReferencePoint {
  Pose pose;         ///< H_D
  Twist twist;       ///< T_D, expressed in the desired frame
  Twist twist_rate;  ///< T_D_dot
};

struct TrackingError {
  Pose pose_error;    ///< H_e = H_D^-1 H_B
  Twist twist_error;  ///< T_e = T_B - Ad_{H_e^-1} T_D
  double phi_rot = 0.0;
  double phi_pos = 0.0;

  double phi() const { return phi_rot + phi_pos; }
};

TrackingError tracking_error(const RigidBodyState& state, const ReferencePoint& ref,
                             const GainSet& gains);

/// dphi = [as(K_p1 R_e)^v ; k_p2 R_e^T xi_e], so that phi_dot = dphi^T T_e.
Wrench error_gradient(const TrackingError& err, const GainSet& gains);

double error_function_rate(const TrackingError& err, const GainSet& gains);

struct ControlWrench {
  Wrench feedforward;
  Wrench proportional;
  Wrench derivative;

  Wrench total() const { return feedforward + proportional + derivative; }
};

ControlWrench control_wrench(const RigidBodyState& state, const ReferencePoint& ref,
                             const GainSet& gains, const VehicleParams& params);

/// Same, reusing an already computed tracking error.
ControlWrench control_wrench(const RigidBodyState& state, const ReferencePoint& ref,
                             const TrackingError& err, const GainSet& gains,
                             const VehicleParams& params);

enum class SaturationPolicy {
  kReport,  ///< leave the thrusts untouched and flag the excess
  kScale,   ///< shrink the thrust vector uniformly back into the box
};

struct Allocation {
  Thrusts thrusts = Thrusts::Zero();
  bool saturated = false;
  /// max_i |lambda_i| / lambda_max before any scaling.
  double clip_ratio = 0.0;
  bool scaled = false;
};

/// Solves M lambda = W with a factorization of M prepared once.
class Allocator {
 public:
  /// Throws SingularAllocation if cond(M) >= tol::kAllocationCondition.
  Allocator(const AllocationMatrix& m, double max_thrust,
            SaturationPolicy policy = SaturationPolicy::kReport);

  Allocation operator()(const Wrench& desired) const;

  double condition_number() const { return condition_; }
  const AllocationMatrix& matrix() const { return m_; }

 private:
  AllocationMatrix m_;
  Eigen::PartialPivLU<Mat6> lu_;
  double max_thrust_;
  SaturationPolicy policy_;
  double condition_;
};

Allocation allocate(const Wrench& desired, const AllocationMatrix& m, double max_thrust,
                    SaturationPolicy policy = SaturationPolicy::kReport);

}  // namespace omnihex
