#pragma once

// Free rigid-body tumble (no gravity, no control) integrated with the same
// stepper as the simulator, reporting how far the conserved quantities drift.

#include <algorithm>

#include "omnihex/integrator.hpp"
#include "omnihex/vehicle.hpp"

namespace omnihex::tumble {

struct Drift {
  double energy = 0.0;    ///< max |E(t) - E(0)| / E(0)
  double momentum = 0.0;  ///< max |p(t) - p(0)| / |p(0)|, inertial frame
  double spin_axis_momentum = 0.0;  ///< same, angular part |R J omega| only
};

inline Drift run(const RigidBodyState& initial, const SpatialInertia& inertia, double duration,
                 double dt) {
  VehicleParams params;
  params.inertia = inertia;
  params.gravity = 0.0;
  auto accel = [&](double, const RigidBodyState& s) {
    return dynamics(s, Wrench::Zero(), params).acceleration;
  };

  const double e0 = inertia.kinetic_energy(initial.twist);
  const Vec6 p0 = inertial_momentum(initial, inertia).vector();
  const double l0 = (initial.pose.rotation() * inertia.rotational() * initial.twist.angular()).norm();

  Drift d;
  RigidBodyState s = initial;
  const int steps = static_cast<int>(std::lround(duration / dt));
  for (int k = 0; k < steps; ++k) {
    s = rkmk4_step(s, k * dt, dt, accel);
    d.energy = std::max(d.energy, std::abs(inertia.kinetic_energy(s.twist) - e0) / e0);
    d.momentum =
        std::max(d.momentum, (inertial_momentum(s, inertia).vector() - p0).norm() / p0.norm());
    const double l = (s.pose.rotation() * inertia.rotational() * s.twist.angular()).norm();
    d.spin_axis_momentum = std::max(d.spin_axis_momentum, std::abs(l - l0) / l0);
  }
  return d;
}

/// The reference tumble: J = diag(0.5, 0.5, 2), m = 0.6, spinning about a
/// non-principal axis while translating.
inline RigidBodyState standard_initial() {
  return {Pose(exp_so3(Vec3(0.2, -0.4, 0.1)), Vec3(0.5, -1.0, 2.0)),
          Twist(Vec3(1.0, -0.5, 2.0), Vec3(0.3, 0.2, -0.1))};
}

inline SpatialInertia standard_inertia() { return SpatialInertia::diagonal(Vec3(0.5, 0.5, 2.0), 0.6); }

}  // namespace omnihex::tumble
