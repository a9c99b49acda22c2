#include "omnihex/spatial_inertia.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "omnihex/errors.hpp"

namespace omnihex {

SpatialInertia::SpatialInertia(const Mat3& rotational, double mass)
    : j_(rotational), m_(mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw InvariantViolation("SpatialInertia: mass must be positive");
  }
  if (!rotational.allFinite() ||
      (rotational - rotational.transpose()).norm() > tol::kSymmetry) {
    throw InvariantViolation("SpatialInertia: rotational inertia must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Mat3> eig(rotational, Eigen::EigenvaluesOnly);
  if (!(eig.eigenvalues().minCoeff() > 0.0)) {
    throw InvariantViolation("SpatialInertia: rotational inertia must be positive definite");
  }
  j_inv_ = rotational.inverse();
}

Mat6 SpatialInertia::matrix() const {
  Mat6 m = Mat6::Zero();
  m.topLeftCorner<3, 3>() = j_;
  m.bottomRightCorner<3, 3>() = m_ * Mat3::Identity();
  return m;
}

Wrench SpatialInertia::momentum(const Twist& t) const {
  return Wrench(j_ * t.angular(), m_ * t.linear());
}

Twist SpatialInertia::solve(const Wrench& w) const {
  return Twist(j_inv_ * w.torque(), w.force() / m_);
}

}  // namespace omnihex
