#pragma once

// Fourth-order Runge-Kutta-Munthe-Kaas step for the coupled system
//   H_dot = H hat(T),   T_dot = f(t, H, T)
// on SE(3) x R^6. The pose is advanced by H <- H exp(Theta); the twist stages
// are pulled back through the inverse of the exponential's differential,
// truncated after the second-order bracket (the next Bernoulli term only
// enters at fifth order).

#include <cmath>

#include "omnihex/errors.hpp"
#include "omnihex/se3.hpp"
#include "omnihex/vehicle.hpp"

namespace omnihex {

/// dexp^-1 for a right-multiplied increment: k + [Theta, k] / 2 + [Theta, [Theta, k]] / 12.
inline Twist dexp_inverse(const Twist& theta, const Twist& k) {
  const Mat6 ad = adjoint_algebra(theta);
  const Vec6 once = ad * k.vector();
  return Twist(Vec6(k.vector() + 0.5 * once + (ad * once) / 12.0));
}

/// One RKMK4 step. `accel(t, state)` returns T_dot. Throws NonFiniteState
/// (stamped with `t`) if any stage produces a non-finite value.
template <typename Accel>
RigidBodyState rkmk4_step(const RigidBodyState& s, double t, double dt, Accel&& accel) {
  auto check = [t](const Twist& x, const char* what) {
    if (!x.vector().allFinite()) throw NonFiniteState(std::string("non-finite ") + what, t);
  };
  // A finite but enormous increment can still overflow inside the exponential
  // and leave a non-rotation behind; that is the same blow-up.
  auto advance = [t](const Pose& pose, const Twist& theta) {
    try {
      return pose * exp_se3(theta, 1.0);
    } catch (const InvariantViolation& e) {
      throw NonFiniteState(std::string("pose update failed: ") + e.what(), t);
    }
  };
  auto stage_state = [&](const Twist& theta, const Twist& twist) {
    return RigidBodyState{advance(s.pose, theta), twist};
  };

  const Twist& t1 = s.twist;
  const Twist a1 = accel(t, s);
  check(a1, "acceleration");
  const Twist k1 = t1;

  const Twist th2 = (0.5 * dt) * k1;
  const Twist t2 = s.twist + (0.5 * dt) * a1;
  check(t2, "twist");
  const RigidBodyState s2 = stage_state(th2, t2);
  const Twist a2 = accel(t + 0.5 * dt, s2);
  check(a2, "acceleration");
  const Twist k2 = dexp_inverse(th2, t2);

  const Twist th3 = (0.5 * dt) * k2;
  const Twist t3 = s.twist + (0.5 * dt) * a2;
  check(t3, "twist");
  const RigidBodyState s3 = stage_state(th3, t3);
  const Twist a3 = accel(t + 0.5 * dt, s3);
  check(a3, "acceleration");
  const Twist k3 = dexp_inverse(th3, t3);

  const Twist th4 = dt * k3;
  const Twist t4 = s.twist + dt * a3;
  check(t4, "twist");
  const RigidBodyState s4 = stage_state(th4, t4);
  const Twist a4 = accel(t + dt, s4);
  check(a4, "acceleration");
  const Twist k4 = dexp_inverse(th4, t4);

  const Twist theta = (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  const Twist twist = s.twist + (dt / 6.0) * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
  check(theta, "pose increment");
  check(twist, "twist");
  return RigidBodyState{advance(s.pose, theta).reorthonormalized(), twist};
}

}  // namespace omnihex
