#pragma once

// Rigid-body math on SE(3): rotations, poses, twists, wrenches, the hat/vee
// maps, group and algebra adjoints, and the exponential map.
//
// Conventions:
//   Twist  = [omega; v]   (angular first)
//   Wrench = [tau; f]     (torque first)
// so that the power pairing is the plain 6-vector dot product.

#include <Eigen/Dense>

#include "omnihex/tolerances.hpp"

namespace omnihex {

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// A rotation is a plain 3x3 matrix; use is_rotation() to check it.
using Rotation = Mat3;

/// hat(v) * x == v.cross(x)
Mat3 hat(const Vec3& v);

/// Inverse of hat(). Throws NotSkewSymmetric if ||M + M^T||_F > tolerance.
Vec3 vee(const Mat3& m, double tolerance = tol::kSkewSymmetry);

/// Skew-symmetric part (A - A^T) / 2.
Mat3 skew_part(const Mat3& a);

Mat3 rot_x(double angle);
Mat3 rot_y(double angle);
Mat3 rot_z(double angle);

/// Rodrigues formula for the rotation vector `phi` (axis * angle).
Rotation exp_so3(const Vec3& phi);

/// Frobenius norm of R^T R - I.
double orthonormality_defect(const Mat3& r);

bool is_rotation(const Mat3& r, double tolerance = tol::kRotation);

/// One Newton step of the polar decomposition, R <- (R + R^-T) / 2, applied
/// only when the defect exceeds tol::kReorthonormalize.
Rotation reorthonormalize(const Mat3& r);

// ---------------------------------------------------------------------------

class Twist {
 public:
  Twist() : v_(Vec6::Zero()) {}
  Twist(const Vec3& angular, const Vec3& linear) {
    v_ << angular, linear;
  }
  explicit Twist(const Vec6& v) : v_(v) {}

  static Twist Zero() { return Twist(); }

  Vec3 angular() const { return v_.head<3>(); }
  Vec3 linear() const { return v_.tail<3>(); }
  const Vec6& vector() const { return v_; }

  /// 4x4 se(3) matrix [hat(omega) v; 0 0].
  Mat4 matrix() const;

  /// Reads the twist back out of a 4x4 se(3) matrix (vee of the block).
  static Twist from_matrix(const Mat4& m, double tolerance = tol::kSkewSymmetry);

  Twist operator+(const Twist& o) const { return Twist(Vec6(v_ + o.v_)); }
  Twist operator-(const Twist& o) const { return Twist(Vec6(v_ - o.v_)); }
  Twist operator-() const { return Twist(Vec6(-v_)); }
  Twist operator*(double s) const { return Twist(Vec6(v_ * s)); }
  friend Twist operator*(double s, const Twist& t) { return t * s; }
  Twist& operator+=(const Twist& o) {
    v_ += o.v_;
    return *this;
  }

 private:
  Vec6 v_;
};

class Wrench {
 public:
  Wrench() : w_(Vec6::Zero()) {}
  Wrench(const Vec3& torque, const Vec3& force) {
    w_ << torque, force;
  }
  explicit Wrench(const Vec6& w) : w_(w) {}

  static Wrench Zero() { return Wrench(); }

  Vec3 torque() const { return w_.head<3>(); }
  Vec3 force() const { return w_.tail<3>(); }
  const Vec6& vector() const { return w_; }

  Wrench operator+(const Wrench& o) const { return Wrench(Vec6(w_ + o.w_)); }
  Wrench operator-(const Wrench& o) const { return Wrench(Vec6(w_ - o.w_)); }
  Wrench operator-() const { return Wrench(Vec6(-w_)); }
  Wrench operator*(double s) const { return Wrench(Vec6(w_ * s)); }
  friend Wrench operator*(double s, const Wrench& w) { return w * s; }
  Wrench& operator+=(const Wrench& o) {
    w_ += o.w_;
    return *this;
  }

 private:
  Vec6 w_;
};

/// W^T T.
inline double power(const Wrench& w, const Twist& t) {
  return w.vector().dot(t.vector());
}

// ---------------------------------------------------------------------------

/// Homogeneous transform H = [R p; 0 1].
class Pose {
 public:
  Pose() : r_(Mat3::Identity()), p_(Vec3::Zero()) {}

  /// Throws InvariantViolation if `rotation` is not in SO(3).
  Pose(const Rotation& rotation, const Vec3& position);

  static Pose Identity() { return Pose(); }
  static Pose from_matrix(const Mat4& h);
  static Pose from_rotation(const Rotation& r) { return Pose(r, Vec3::Zero()); }
  static Pose from_translation(const Vec3& p) { return Pose(Mat3::Identity(), p); }

  const Rotation& rotation() const { return r_; }
  const Vec3& position() const { return p_; }
  Mat4 matrix() const;

  Pose inverse() const;
  Pose operator*(const Pose& o) const;
  Vec3 operator*(const Vec3& x) const { return r_ * x + p_; }

  /// Copy with the rotation re-projected onto SO(3) if it has drifted.
  Pose reorthonormalized() const;

 private:
  struct Unchecked {};
  Pose(Unchecked, const Rotation& r, const Vec3& p) : r_(r), p_(p) {}

  Rotation r_;
  Vec3 p_;
};

/// Ad_H = [R 0; hat(p) R  R]. Maps a twist expressed in the child frame of H
/// to its parent frame.
Mat6 adjoint_group(const Pose& h);

/// ad_T = [hat(w) 0; hat(v) hat(w)]; ad_X Y is the Lie bracket [X, Y].
Mat6 adjoint_algebra(const Twist& t);

/// Ad_H T.
Twist transform_twist(const Pose& h, const Twist& t);

/// Ad_H^T W: a wrench known in the parent frame of H re-expressed in its
/// child frame. Preserves power: (Ad^T W)^T T == W^T (Ad T).
Wrench co_adjoint_wrench(const Pose& h, const Wrench& w);

/// exp(dt * hat(T)) as a pose. Closed form with a Taylor fallback for small
/// rotation angles.
Pose exp_se3(const Twist& t, double dt);

}  // namespace omnihex
