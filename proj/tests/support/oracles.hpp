#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the closed forms under test: the exponential is a
// plain power series, frames are built from random generators, and
// derivatives come from central differences.

#include <cmath>
#include <numbers>
#include <random>

#include "omnihex/se3.hpp"

namespace omnihex::oracle {

/// exp(A) by scaling and squaring of the Taylor series.
inline Mat4 expm(const Mat4& a) {
  int squarings = 0;
  double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  const Mat4 scaled = a / std::pow(2.0, squarings);
  Mat4 term = Mat4::Identity();
  Mat4 sum = Mat4::Identity();
  for (int k = 1; k < 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

/// 4x4 se(3) matrix of a twist, built entry by entry.
inline Mat4 twist_matrix(const Vec6& t) {
  Mat4 m = Mat4::Zero();
  m(0, 1) = -t(2);
  m(0, 2) = t(1);
  m(1, 0) = t(2);
  m(1, 2) = -t(0);
  m(2, 0) = -t(1);
  m(2, 1) = t(0);
  m.block<3, 1>(0, 3) = t.tail<3>();
  return m;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }

  Vec3 vec3(double scale = 1.0) {
    return Vec3(uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale));
  }

  Vec6 vec6(double scale = 1.0) {
    Vec6 v;
    for (int i = 0; i < 6; ++i) v(i) = uniform(-scale, scale);
    return v;
  }

  Vec3 unit() {
    Vec3 v;
    do {
      v = vec3();
    } while (v.norm() < 1e-3 || v.norm() > 1.0);
    return v.normalized();
  }

  /// Rotation from the series exponential of a random skew matrix.
  Mat3 rotation(double max_angle = std::numbers::pi) {
    Vec6 t = Vec6::Zero();
    t.head<3>() = unit() * uniform(0.0, max_angle);
    return expm(twist_matrix(t)).topLeftCorner<3, 3>();
  }

  Pose pose(double translation = 2.0) { return Pose(rotation(), vec3(translation)); }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// (f(x + h) - f(x - h)) / 2h for anything with Eigen arithmetic.
template <typename F>
auto central_difference(F&& f, double x, double h) {
  return ((f(x + h) - f(x - h)) / (2.0 * h)).eval();
}

}  // namespace omnihex::oracle
