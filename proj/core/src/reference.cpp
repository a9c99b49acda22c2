#include "omnihex/reference.hpp"

#include <cmath>

#include "omnihex/errors.hpp"
#include "omnihex/integrator.hpp"

namespace omnihex {

PositionSample reference_position(const TrajectorySpec& spec, double t) {
  const double r = spec.radius, w = spec.angular_frequency;
  const double c = std::cos(w * t), s = std::sin(w * t);
  PositionSample p;
  p.position = Vec3(r * c, r * s, r * s + spec.z_offset);
  p.velocity = Vec3(-r * w * s, r * w * c, r * w * c);
  p.acceleration = Vec3(-r * w * w * c, -r * w * w * s, -r * w * w * s);
  return p;
}

Vec3 reference_angular_acceleration(const TrajectorySpec& spec, double t) {
  return spec.angular_accel_amplitude * std::sin(t);
}

ReferenceTrajectory::ReferenceTrajectory(TrajectorySpec spec, double dt)
    : spec_(std::move(spec)), dt_(dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("ReferenceTrajectory: dt must be > 0");
  grid_.push_back(RigidBodyState{Pose::Identity(), Twist::Zero()});
}

RigidBodyState ReferenceTrajectory::attitude_at(double t) {
  if (!(t >= 0.0)) throw InvalidArgument("ReferenceTrajectory: t must be >= 0");
  auto accel = [this](double tau, const RigidBodyState&) {
    return Twist(reference_angular_acceleration(spec_, tau), Vec3::Zero());
  };
  // Snap to the grid when t is a multiple of dt up to rounding.
  const double steps = t / dt_;
  auto k = static_cast<std::size_t>(std::floor(steps + 1e-9));
  while (grid_.size() <= k) {
    const std::size_t n = grid_.size() - 1;
    grid_.push_back(rkmk4_step(grid_[n], static_cast<double>(n) * dt_, dt_, accel));
  }
  const double t0 = static_cast<double>(k) * dt_;
  const double h = t - t0;
  if (h <= 1e-12 * dt_) return grid_[k];
  return rkmk4_step(grid_[k], t0, h, accel);
}

ReferencePoint ReferenceTrajectory::at(double t) {
  const RigidBodyState att = attitude_at(t);
  const PositionSample p = reference_position(spec_, t);
  const Mat3& rd = att.pose.rotation();
  const Vec3 omega = att.twist.angular();
  const Vec3 v_body = rd.transpose() * p.velocity;

  ReferencePoint ref;
  ref.pose = Pose(rd, p.position);
  ref.twist = Twist(omega, v_body);
  ref.twist_rate = Twist(reference_angular_acceleration(spec_, t),
                         rd.transpose() * p.acceleration - omega.cross(v_body));
  return ref;
}

ReferencePoint reference(const TrajectorySpec& spec, double t, double dt) {
  ReferenceTrajectory gen(spec, dt);
  return gen.at(t);
}

}  // namespace omnihex
