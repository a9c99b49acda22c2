#include "omnihex/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "omnihex/errors.hpp"

namespace omnihex {

Wrench disturbance_at(const std::vector<DisturbanceEvent>& events, double t, double dt) {
  Wrench total;
  const double mid = t + 0.5 * dt;
  for (const auto& e : events) {
    const double width = e.duration > 0.0 ? e.duration : dt;
    if (mid >= e.time && mid < e.time + width) total += e.impulse * (1.0 / width);
  }
  return total;
}

void Scenario::validate() const {
  auto fail = [](const std::string& m) { throw InvalidArgument("Scenario: " + m); };
  if (!(dt > 0.0 && dt <= 0.01)) fail("dt must lie in (0, 0.01]");
  if (!(duration > 0.0) || !std::isfinite(duration)) fail("duration must be > 0");
  if (log_decimation < 1) fail("log_decimation must be >= 1");
  if (!(convergence_threshold > 0.0)) fail("convergence_threshold must be > 0");
  for (const auto& e : disturbances) {
    if (!(e.duration >= 0.0) || !std::isfinite(e.time)) fail("invalid disturbance window");
  }
  vehicle.layout.validate();
}

VehicleParams standard_vehicle() {
  VehicleParams p;
  p.inertia = SpatialInertia::diagonal(Vec3(0.5, 0.5, 2.0), 0.6);
  p.gravity = 9.81;
  p.layout.arm_length = 1.0;
  p.layout.max_thrust = 10.0;
  p.layout.drag_ratio = 0.0;
  p.layout.alpha = 47.7 * std::numbers::pi / 180.0;
  p.layout.beta = 0.0;
  return p;
}

Scenario Scenario::standard() {
  Scenario s;
  s.vehicle = standard_vehicle();
  const Vec3 axis = Vec3(1.0, 1.0, 0.0).normalized();
  s.initial.pose = Pose::from_rotation(exp_so3(axis * (30.0 * std::numbers::pi / 180.0)));
  s.initial.twist = Twist::Zero();
  s.disturbances.push_back({7.0, Wrench(Vec3(0.5, 0.0, 0.0), Vec3::Zero()), 0.0});
  return s;
}

// ---------------------------------------------------------------------------

ClosedLoop::ClosedLoop(const VehicleParams& params, const GainSet& gains,
                       const TrajectorySpec& trajectory, double dt, SaturationPolicy policy)
    : params_(params),
      gains_(gains),
      allocator_(allocation_matrix(params.layout), params.layout.max_thrust, policy),
      reference_(trajectory, dt),
      dt_(dt) {}

ClosedLoop::Evaluation ClosedLoop::evaluate(double t, const RigidBodyState& state) {
  Evaluation e;
  e.reference = reference_.at(t);
  e.error = tracking_error(state, e.reference, gains_);
  e.control = control_wrench(state, e.reference, e.error, gains_, params_);
  e.allocation = allocator_(e.control.total());
  e.applied = allocator_.matrix().apply(e.allocation.thrusts);
  return e;
}

RigidBodyState ClosedLoop::step(double t, const RigidBodyState& state,
                                const Wrench& disturbance) {
  auto accel = [&](double tau, const RigidBodyState& s) {
    const Evaluation e = evaluate(tau, s);
    return dynamics(s, e.applied + disturbance, params_).acceleration;
  };
  return rkmk4_step(state, t, dt_, accel);
}

// ---------------------------------------------------------------------------

const char* to_string(RunStatus status) {
  switch (status) {
    case RunStatus::kConverged:
      return "converged";
    case RunStatus::kNotConverged:
      return "not_converged";
    case RunStatus::kNonFinite:
      return "non_finite";
  }
  return "unknown";
}

namespace {

SimSample make_sample(double t, const RigidBodyState& s, const ClosedLoop::Evaluation& e) {
  SimSample out;
  out.t = t;
  out.pose = s.pose;
  out.twist = s.twist;
  out.phi_rot = e.error.phi_rot;
  out.phi_pos = e.error.phi_pos;
  out.twist_error = e.error.twist_error;
  out.torque_norm = e.applied.torque().norm();
  out.force_norm = e.applied.force().norm();
  out.thrusts = e.allocation.thrusts;
  out.control = e.control;
  return out;
}

}  // namespace

double pose_error_measure(const Pose& pose_error) {
  return 0.5 * (3.0 - pose_error.rotation().trace()) + 0.5 * pose_error.position().squaredNorm();
}

SimResult run(const Scenario& scenario) {
  scenario.validate();
  ClosedLoop loop(scenario.vehicle, scenario.gains, scenario.trajectory, scenario.dt,
                  scenario.saturation);

  SimResult result;
  const double dt = scenario.dt;
  const auto n_steps = static_cast<std::size_t>(std::llround(scenario.duration / dt));
  RigidBodyState state = scenario.initial;

  std::size_t k = 0;
  try {
    for (; k < n_steps; ++k) {
      const double t = static_cast<double>(k) * dt;
      const ClosedLoop::Evaluation e = loop.evaluate(t, state);
      result.peak_thrust =
          std::max(result.peak_thrust, e.allocation.thrusts.cwiseAbs().maxCoeff());
      if (e.allocation.saturated) ++result.saturation_count;
      if (k % static_cast<std::size_t>(scenario.log_decimation) == 0) {
        result.log.push_back(make_sample(t, state, e));
      }
      state = loop.step(t, state, disturbance_at(scenario.disturbances, t, dt));
    }
  } catch (const NonFiniteState& err) {
    result.steps = k;
    result.status = RunStatus::kNonFinite;
    result.failure_time = err.time();
    result.final_phi = std::numeric_limits<double>::quiet_NaN();
    result.final_pose_error = std::numeric_limits<double>::quiet_NaN();
    result.message = err.what();
    return result;
  }

  result.steps = n_steps;
  const double t_end = static_cast<double>(n_steps) * dt;
  const ClosedLoop::Evaluation last = loop.evaluate(t_end, state);
  result.log.push_back(make_sample(t_end, state, last));
  result.final_phi = last.error.phi();
  result.final_pose_error = pose_error_measure(last.error.pose_error);
  const bool converged = result.final_phi < scenario.convergence_threshold &&
                         result.final_pose_error < scenario.convergence_threshold;
  result.status = converged ? RunStatus::kConverged : RunStatus::kNotConverged;
  return result;
}

}  // namespace omnihex
