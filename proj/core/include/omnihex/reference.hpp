#pragma once

#include <vector>

#include "omnihex/controller.hpp"

namespace omnihex {

/// Circle-and-bob position reference with a sinusoidal angular acceleration:
///   xi_D(t)       = [r cos(w t), r sin(w t), r sin(w t) + z_off]
///   omega_dot_D   = a sin(t)
/// with omega_D(0) = 0 and R_D(0) = I.
struct TrajectorySpec {
  double radius = 1.0;             ///< r [m]
  double angular_frequency = 0.5;  ///< w [rad/s]
  double z_offset = 1.0;           ///< z_off [m]
  Vec3 angular_accel_amplitude = Vec3(1.0, 2.0, 1.0);  ///< a [rad/s^2]
};

struct PositionSample {
  Vec3 position;
  Vec3 velocity;
  Vec3 acceleration;
};

/// Closed-form xi_D and its first two derivatives.
PositionSample reference_position(const TrajectorySpec& spec, double t);

/// omega_dot_D(t).
Vec3 reference_angular_acceleration(const TrajectorySpec& spec, double t);

/// Generates reference points by integrating omega_D and R_D with the same
/// fixed step as the plant. Integrated grid states are cached, so queries
/// should move forward in time; any query is still valid (the cache grows on
/// demand). Off-grid times take one partial step from the preceding grid
/// point, so results depend only on (spec, dt, t).
class ReferenceTrajectory {
 public:
  ReferenceTrajectory(TrajectorySpec spec, double dt);

  ReferencePoint at(double t);

  const TrajectorySpec& spec() const { return spec_; }
  double dt() const { return dt_; }

 private:
  RigidBodyState attitude_at(double t);

  TrajectorySpec spec_;
  double dt_;
  std::vector<RigidBodyState> grid_;
};

/// Stateless convenience wrapper: builds a fresh generator and queries it.
ReferencePoint reference(const TrajectorySpec& spec, double t, double dt);

}  // namespace omnihex
