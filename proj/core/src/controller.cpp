#include "omnihex/controller.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "omnihex/errors.hpp"

namespace omnihex {

namespace {

template <typename M>
void require_spd(const M& k, const char* name) {
  if ((k - k.transpose()).norm() > tol::kSymmetry) {
    throw InvariantViolation(std::string("GainSet: ") + name + " is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<M> eig(k);
  if (eig.info() != Eigen::Success || !(eig.eigenvalues().minCoeff() > 0.0)) {
    throw InvariantViolation(std::string("GainSet: ") + name + " is not positive definite");
  }
}

}  // namespace

GainSet::GainSet(const Mat3& kp1, double kp2, const Mat6& kd) : kp1_(kp1), kp2_(kp2), kd_(kd) {
  require_spd(kp1_, "K_p1");
  if (!(kp2_ > 0.0) || !std::isfinite(kp2_)) throw InvariantViolation("GainSet: k_p2 must be > 0");
  require_spd(kd_, "K_d");
}

GainSet GainSet::standard() {
  Vec6 kd;
  kd << 5, 5, 5, 2, 2, 2;
  return GainSet(10.0 * Mat3::Identity(), 3.0, Mat6(kd.asDiagonal()));
}

GainSet GainSet::open_loop() { return GainSet(); }

TrackingError tracking_error(const RigidBodyState& state, const ReferencePoint& ref,
                             const GainSet& gains) {
  TrackingError e;
  e.pose_error = ref.pose.inverse() * state.pose;
  const Pose he_inv = e.pose_error.inverse();
  e.twist_error = state.twist - transform_twist(he_inv, ref.twist);
  const Mat3& re = e.pose_error.rotation();
  const Vec3& xe = e.pose_error.position();
  e.phi_rot = 0.5 * (gains.kp1() * (Mat3::Identity() - re)).trace();
  e.phi_pos = 0.5 * gains.kp2() * xe.squaredNorm();
  return e;
}

Wrench error_gradient(const TrackingError& err, const GainSet& gains) {
  const Mat3& re = err.pose_error.rotation();
  const Vec3 rot = vee(skew_part(gains.kp1() * re));
  const Vec3 pos = gains.kp2() * re.transpose() * err.pose_error.position();
  return Wrench(rot, pos);
}

double error_function_rate(const TrackingError& err, const GainSet& gains) {
  return power(error_gradient(err, gains), err.twist_error);
}

ControlWrench control_wrench(const RigidBodyState& state, const ReferencePoint& ref,
                             const GainSet& gains, const VehicleParams& params) {
  return control_wrench(state, ref, tracking_error(state, ref, gains), gains, params);
}

ControlWrench control_wrench(const RigidBodyState& state, const ReferencePoint& ref,
                             const TrackingError& err, const GainSet& gains,
                             const VehicleParams& params) {
  const SpatialInertia& inertia = params.inertia;
  const Pose he_inv = err.pose_error.inverse();
  const Twist td_body = transform_twist(he_inv, ref.twist);
  const Twist tdd_body = transform_twist(he_inv, ref.twist_rate);
  const Vec6 transport = adjoint_algebra(err.twist_error) * td_body.vector();

  const Wrench gravity =
      gravity_wrench(state.pose.rotation(), inertia.mass(), params.gravity);
  const Wrench coriolis(Vec6(adjoint_algebra(state.twist).transpose() *
                             inertia.momentum(state.twist).vector()));
  const Wrench accel = inertia.momentum(Twist(Vec6(tdd_body.vector() - transport)));

  ControlWrench w;
  w.feedforward = accel - gravity - coriolis;
  w.proportional = -error_gradient(err, gains);
  w.derivative = Wrench(Vec6(-gains.kd() * err.twist_error.vector()));
  return w;
}

// ---------------------------------------------------------------------------

Allocator::Allocator(const AllocationMatrix& m, double max_thrust, SaturationPolicy policy)
    : m_(m), max_thrust_(max_thrust), policy_(policy), condition_(m.condition_number()) {
  if (!(max_thrust > 0.0)) throw InvalidArgument("Allocator: max_thrust must be > 0");
  if (!(condition_ < tol::kAllocationCondition)) {
    std::ostringstream os;
    os << "allocation matrix is singular or ill-conditioned (condition number " << condition_
       << ")";
    throw SingularAllocation(os.str(), condition_);
  }
  lu_.compute(m.matrix());
}

Allocation Allocator::operator()(const Wrench& desired) const {
  Allocation a;
  a.thrusts = lu_.solve(desired.vector());
  a.clip_ratio = a.thrusts.cwiseAbs().maxCoeff() / max_thrust_;
  a.saturated = a.clip_ratio > 1.0;
  if (a.saturated && policy_ == SaturationPolicy::kScale) {
    a.thrusts /= a.clip_ratio;
    a.scaled = true;
  }
  return a;
}

Allocation allocate(const Wrench& desired, const AllocationMatrix& m, double max_thrust,
                    SaturationPolicy policy) {
  return Allocator(m, max_thrust, policy)(desired);
}

}  // namespace omnihex
