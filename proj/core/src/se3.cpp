#include "omnihex/se3.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/LU>

#include "omnihex/errors.hpp"

namespace omnihex {

Mat3 hat(const Vec3& v) {
  Mat3 m;
  // clang-format off
  m <<  0.0,  -v.z(),  v.y(),
        v.z(),  0.0,  -v.x(),
       -v.y(),  v.x(),  0.0;
  // clang-format on
  return m;
}

Vec3 vee(const Mat3& m, double tolerance) {
  const double asym = (m + m.transpose()).norm();
  if (!(asym <= tolerance)) {
    std::ostringstream os;
    os << "vee: matrix is not skew-symmetric (||M + M^T|| = " << asym << ")";
    throw NotSkewSymmetric(os.str());
  }
  return Vec3(m(2, 1), m(0, 2), m(1, 0));
}

Mat3 skew_part(const Mat3& a) { return 0.5 * (a - a.transpose()); }

Mat3 rot_x(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 r;
  r << 1, 0, 0, 0, c, -s, 0, s, c;
  return r;
}

Mat3 rot_y(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 r;
  r << c, 0, s, 0, 1, 0, -s, 0, c;
  return r;
}

Mat3 rot_z(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 r;
  r << c, -s, 0, s, c, 0, 0, 0, 1;
  return r;
}

namespace {

// Coefficients of exp(hat(phi)) = I + a*K + b*K^2 and of the left Jacobian
// V = I + b*K + c*K^2 with K = hat(phi), theta = |phi|.
struct ExpCoefficients {
  double a;  // sin(t)/t
  double b;  // (1 - cos t)/t^2
  double c;  // (t - sin t)/t^3
};

ExpCoefficients exp_coefficients(double theta) {
  if (theta < tol::kExpSeries) {
    const double t2 = theta * theta;
    return {1.0 - t2 / 6.0, 0.5 - t2 / 24.0, 1.0 / 6.0 - t2 / 120.0};
  }
  const double s = std::sin(theta);
  const double t2 = theta * theta;
  // 1 - cos and t - sin both cancel badly for small angles: use the half-angle
  // form for the first and a short series for the second.
  const double half = std::sin(0.5 * theta) / (0.5 * theta);
  const double c = theta < 0.1
                       ? 1.0 / 6.0 - t2 / 120.0 * (1.0 - t2 / 42.0 * (1.0 - t2 / 72.0))
                       : (theta - s) / (t2 * theta);
  return {s / theta, 0.5 * half * half, c};
}

}  // namespace

Rotation exp_so3(const Vec3& phi) {
  const Mat3 k = hat(phi);
  const auto e = exp_coefficients(phi.norm());
  return Mat3::Identity() + e.a * k + e.b * k * k;
}

double orthonormality_defect(const Mat3& r) {
  return (r.transpose() * r - Mat3::Identity()).norm();
}

bool is_rotation(const Mat3& r, double tolerance) {
  if (!r.allFinite()) return false;
  return orthonormality_defect(r) <= tolerance &&
         std::abs(r.determinant() - 1.0) <= tolerance;
}

Rotation reorthonormalize(const Mat3& r) {
  if (orthonormality_defect(r) <= tol::kReorthonormalize) return r;
  return 0.5 * (r + r.inverse().transpose());
}

// ---------------------------------------------------------------------------

Mat4 Twist::matrix() const {
  Mat4 m = Mat4::Zero();
  m.topLeftCorner<3, 3>() = hat(angular());
  m.topRightCorner<3, 1>() = linear();
  return m;
}

Twist Twist::from_matrix(const Mat4& m, double tolerance) {
  return Twist(vee(m.topLeftCorner<3, 3>(), tolerance), m.topRightCorner<3, 1>());
}

// ---------------------------------------------------------------------------

Pose::Pose(const Rotation& rotation, const Vec3& position)
    : r_(rotation), p_(position) {
  if (!is_rotation(rotation)) {
    std::ostringstream os;
    os << "Pose: rotation not in SO(3) (defect " << orthonormality_defect(rotation)
       << ", det " << rotation.determinant() << ")";
    throw InvariantViolation(os.str());
  }
  if (!position.allFinite()) throw InvariantViolation("Pose: non-finite position");
}

Pose Pose::from_matrix(const Mat4& h) {
  const Eigen::RowVector4d bottom = h.bottomRows<1>();
  if ((bottom - Eigen::RowVector4d(0, 0, 0, 1)).norm() > tol::kRotation) {
    throw InvariantViolation("Pose: bottom row of homogeneous matrix must be [0 0 0 1]");
  }
  return Pose(h.topLeftCorner<3, 3>(), h.topRightCorner<3, 1>());
}

Mat4 Pose::matrix() const {
  Mat4 h = Mat4::Identity();
  h.topLeftCorner<3, 3>() = r_;
  h.topRightCorner<3, 1>() = p_;
  return h;
}

Pose Pose::inverse() const {
  const Mat3 rt = r_.transpose();
  return Pose(Unchecked{}, rt, -rt * p_);
}

Pose Pose::operator*(const Pose& o) const {
  return Pose(Unchecked{}, r_ * o.r_, r_ * o.p_ + p_);
}

Pose Pose::reorthonormalized() const {
  return Pose(Unchecked{}, reorthonormalize(r_), p_);
}

// ---------------------------------------------------------------------------

Mat6 adjoint_group(const Pose& h) {
  const Mat3& r = h.rotation();
  Mat6 ad = Mat6::Zero();
  ad.topLeftCorner<3, 3>() = r;
  ad.bottomLeftCorner<3, 3>() = hat(h.position()) * r;
  ad.bottomRightCorner<3, 3>() = r;
  return ad;
}

Mat6 adjoint_algebra(const Twist& t) {
  const Mat3 w = hat(t.angular());
  Mat6 ad = Mat6::Zero();
  ad.topLeftCorner<3, 3>() = w;
  ad.bottomLeftCorner<3, 3>() = hat(t.linear());
  ad.bottomRightCorner<3, 3>() = w;
  return ad;
}

Twist transform_twist(const Pose& h, const Twist& t) {
  const Vec3 w = h.rotation() * t.angular();
  return Twist(w, h.position().cross(w) + h.rotation() * t.linear());
}

Wrench co_adjoint_wrench(const Pose& h, const Wrench& w) {
  // Ad^T [tau; f] = [R^T tau + R^T hat(p)^T f; R^T f]
  const Mat3 rt = h.rotation().transpose();
  return Wrench(rt * (w.torque() - h.position().cross(w.force())), rt * w.force());
}

Pose exp_se3(const Twist& t, double dt) {
  const Vec3 phi = t.angular() * dt;
  const Vec3 rho = t.linear() * dt;
  const Mat3 k = hat(phi);
  const Mat3 k2 = k * k;
  const auto e = exp_coefficients(phi.norm());
  const Rotation r = Mat3::Identity() + e.a * k + e.b * k2;
  const Mat3 v = Mat3::Identity() + e.b * k + e.c * k2;
  return Pose(r, v * rho);
}

}  // namespace omnihex
