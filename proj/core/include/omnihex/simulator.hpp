#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omnihex/controller.hpp"
#include "omnihex/integrator.hpp"
#include "omnihex/reference.hpp"

namespace omnihex {

/// An impulsive wrench. It is spread evenly over `duration` seconds, or over
/// a single step when duration is zero, so its time integral equals `impulse`
/// [N m s; N s].
struct DisturbanceEvent {
  double time = 0.0;
  Wrench impulse;
  double duration = 0.0;
};

/// Disturbance wrench acting during the step [t, t + dt). The whole step
/// carries the pulse of every event whose window contains the step midpoint.
Wrench disturbance_at(const std::vector<DisturbanceEvent>& events, double t, double dt);

struct Scenario {
  VehicleParams vehicle;
  GainSet gains = GainSet::standard();
  TrajectorySpec trajectory;
  RigidBodyState initial;
  std::vector<DisturbanceEvent> disturbances;
  double dt = 1e-3;
  double duration = 15.0;
  int log_decimation = 10;
  SaturationPolicy saturation = SaturationPolicy::kReport;
  double convergence_threshold = 1e-3;

  /// Throws InvalidArgument on out-of-domain settings.
  void validate() const;

  /// Reference scenario: 15 s of tracking from rest at the origin, tilted
  /// 30 degrees about [1, 1, 0], with a 0.5 N m s roll impulse at t = 7 s.
  static Scenario standard();
};

/// Vehicle of the reference scenario: m = 0.6 kg, J = diag(0.5, 0.5, 2),
/// L = 1 m, lambda_max = 10 N, alpha = 47.7 deg, beta = 0, gamma = 0.
VehicleParams standard_vehicle();

/// Controller, allocator and plant wired together for one scenario.
class ClosedLoop {
 public:
  ClosedLoop(const VehicleParams& params, const GainSet& gains, const TrajectorySpec& trajectory,
             double dt, SaturationPolicy policy);

  struct Evaluation {
    ReferencePoint reference;
    TrackingError error;
    ControlWrench control;
    Allocation allocation;
    Wrench applied;  ///< M lambda, what the propellers actually deliver
  };

  Evaluation evaluate(double t, const RigidBodyState& state);

  /// Advances one step of length dt from time t. Throws NonFiniteState.
  RigidBodyState step(double t, const RigidBodyState& state, const Wrench& disturbance);

  const VehicleParams& params() const { return params_; }
  double dt() const { return dt_; }

 private:
  VehicleParams params_;
  GainSet gains_;
  Allocator allocator_;
  ReferenceTrajectory reference_;
  double dt_;
};

struct SimSample {
  double t = 0.0;
  Pose pose;
  Twist twist;
  double phi_rot = 0.0;
  double phi_pos = 0.0;
  Twist twist_error;
  double torque_norm = 0.0;
  double force_norm = 0.0;
  Thrusts thrusts = Thrusts::Zero();
  ControlWrench control;
};

enum class RunStatus { kConverged = 0, kNotConverged = 2, kNonFinite = 3 };

const char* to_string(RunStatus status);

struct SimResult {
  std::vector<SimSample> log;
  RunStatus status = RunStatus::kNotConverged;
  double final_phi = 0.0;
  /// Gain-free error 1/2 tr(I - R_e) + 1/2 |xi_e|^2 at the final time. The
  /// run counts as converged only if this and final_phi are both below the
  /// threshold, so zero gains (phi identically 0) cannot pass.
  double final_pose_error = 0.0;
  double peak_thrust = 0.0;           ///< max over steps of |lambda|_inf [N]
  std::size_t saturation_count = 0;   ///< steps whose demand left the thrust box
  std::size_t steps = 0;
  std::optional<double> failure_time;
  std::string message;
};

/// Unit-weight error function of a pose error.
double pose_error_measure(const Pose& pose_error);

/// Runs the scenario to completion. Logged samples are taken at the start of
/// every log_decimation-th step and at the final time. A non-finite state
/// ends the run with status kNonFinite and the failing time recorded.
SimResult run(const Scenario& scenario);

}  // namespace omnihex
