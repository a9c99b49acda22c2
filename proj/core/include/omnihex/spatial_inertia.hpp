#pragma once

#include "omnihex/se3.hpp"

namespace omnihex {

/// Generalized inertia diag(J, m I3) expressed in the principal body frame.
/// Construction rejects non-symmetric or non-positive-definite J and m <= 0.
class SpatialInertia {
 public:
  SpatialInertia(const Mat3& rotational, double mass);

  static SpatialInertia diagonal(const Vec3& principal_moments, double mass) {
    return SpatialInertia(principal_moments.asDiagonal(), mass);
  }

  const Mat3& rotational() const { return j_; }
  double mass() const { return m_; }
  Mat6 matrix() const;

  /// Body momentum I T (a covector, hence a Wrench).
  Wrench momentum(const Twist& t) const;

  /// I^-1 W.
  Twist solve(const Wrench& w) const;

  double kinetic_energy(const Twist& t) const { return 0.5 * power(momentum(t), t); }

 private:
  Mat3 j_;
  Mat3 j_inv_;
  double m_;
};

}  // namespace omnihex
