#include "omnihex/zonotope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "omnihex/errors.hpp"

namespace omnihex {

double support(const Axes& axes, double scale, const Vec3& n) {
  return scale * (n.transpose() * axes).cwiseAbs().sum();
}

std::optional<double> min_facet_value(const Axes& axes, double scale,
                                      FacetNormalization normalization) {
  const auto k = axes.cols();
  double best = std::numeric_limits<double>::infinity();
  bool any = false;
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      const Vec3 c = axes.col(i).cross(axes.col(j));
      const double norm = c.norm();
      if (norm < tol::kDegeneratePair) continue;
      any = true;
      double value = (c.transpose() * axes).cwiseAbs().sum();
      if (normalization == FacetNormalization::kUnit) value /= norm;
      best = std::min(best, value);
    }
  }
  if (!any) return std::nullopt;
  return scale * best;
}

std::vector<Vec3> fibonacci_sphere(int count) {
  std::vector<Vec3> dirs;
  if (count <= 0) return dirs;
  dirs.reserve(static_cast<std::size_t>(count));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / count;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    dirs.emplace_back(rho * std::cos(phi), rho * std::sin(phi), z);
  }
  return dirs;
}

int axes_rank(const Axes& axes) {
  if (axes.cols() == 0) return 0;
  Eigen::JacobiSVD<Axes> svd(axes);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol::kRank * sv(0)) ++r;
  }
  return r;
}

namespace {

void require_full_span(const Axes& axes, const char* who) {
  if (axes_rank(axes) < 3) {
    throw DegenerateDesign(std::string(who) + ": generators span less than R^3");
  }
}

}  // namespace

double brute_force_inscribed_radius(const Axes& axes, double scale, int direction_count) {
  require_full_span(axes, "brute_force_inscribed_radius");
  double best = std::numeric_limits<double>::infinity();
  for (const Vec3& n : fibonacci_sphere(direction_count)) {
    best = std::min(best, support(axes, scale, n));
  }
  for (Eigen::Index i = 0; i < axes.cols(); ++i) {
    for (Eigen::Index j = i + 1; j < axes.cols(); ++j) {
      const Vec3 c = axes.col(i).cross(axes.col(j));
      const double norm = c.norm();
      if (norm == 0.0) continue;
      best = std::min(best, support(axes, scale, c / norm));
    }
  }
  return best;
}

double max_extent_along(const Axes& axes, double scale, const Vec3& direction) {
  require_full_span(axes, "max_extent_along");
  const Vec3 d = direction.normalized();
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < axes.cols(); ++i) {
    for (Eigen::Index j = i + 1; j < axes.cols(); ++j) {
      const Vec3 c = axes.col(i).cross(axes.col(j));
      const double norm = c.norm();
      if (norm < tol::kDegeneratePair) continue;
      const Vec3 m = c / norm;
      const double along = std::abs(m.dot(d));
      if (along < 1e-15) continue;
      best = std::min(best, support(axes, scale, m) / along);
    }
  }
  return best;
}

std::optional<Eigen::VectorXd> feasible_coefficients(const Axes& axes, const Vec3& target,
                                                     double bound) {
  const int k = static_cast<int>(axes.cols());
  if (k < 3) throw InvalidArgument("feasible_coefficients: need at least three axes");
  require_full_span(axes, "feasible_coefficients");
  const double slack = 1e-9 * std::max(1.0, bound);

  std::vector<int> fixed;
  fixed.reserve(static_cast<std::size_t>(k - 3));
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      for (int c = b + 1; c < k; ++c) {
        Mat3 basis;
        basis << axes.col(a), axes.col(b), axes.col(c);
        Eigen::FullPivLU<Mat3> lu(basis);
        if (lu.rank() < 3) continue;
        fixed.clear();
        for (int m = 0; m < k; ++m) {
          if (m != a && m != b && m != c) fixed.push_back(m);
        }
        const int patterns = 1 << fixed.size();
        for (int p = 0; p < patterns; ++p) {
          Eigen::VectorXd lambda = Eigen::VectorXd::Zero(k);
          Vec3 rhs = target;
          for (std::size_t f = 0; f < fixed.size(); ++f) {
            const double v = ((p >> f) & 1) ? bound : -bound;
            lambda(fixed[f]) = v;
            rhs -= v * axes.col(fixed[f]);
          }
          const Vec3 free = lu.solve(rhs);
          if ((free.cwiseAbs().array() <= bound + slack).all()) {
            lambda(a) = free(0);
            lambda(b) = free(1);
            lambda(c) = free(2);
            return lambda;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<ZonotopePoint> corner_images(const Axes& axes, double bound) {
  const int k = static_cast<int>(axes.cols());
  const int count = 1 << k;
  std::vector<ZonotopePoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int p = 0; p < count; ++p) {
    ZonotopePoint zp;
    zp.signs.resize(static_cast<std::size_t>(k));
    zp.point = Vec3::Zero();
    for (int i = 0; i < k; ++i) {
      const int s = ((p >> (k - 1 - i)) & 1) ? 1 : -1;
      zp.signs[static_cast<std::size_t>(i)] = s;
      zp.point += s * bound * axes.col(i);
    }
    out.push_back(std::move(zp));
  }
  return out;
}

}  // namespace omnihex
