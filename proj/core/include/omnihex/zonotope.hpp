#pragma once

// Centrally symmetric zonotopes Z = { scale * sum_k c_k a_k : |c_k| <= 1 } in
// R^3, described by their generator axes a_k (the columns of `axes`).
//
// Every facet normal of such a set is parallel to a cross product a_i x a_j,
// which is what makes the pairwise formulas below exact.

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "omnihex/se3.hpp"

namespace omnihex {

using Axes = Eigen::Matrix3Xd;

/// h(n) = scale * sum_k |n . a_k|.
double support(const Axes& axes, double scale, const Vec3& n);

/// Which quantity the pairwise facet formula evaluates.
enum class FacetNormalization {
  /// scale * sum_k |c.a_k| / |c|, c = a_i x a_j: the inscribed-sphere radius.
  kUnit,
  /// scale * sum_k |c.a_k|: sum of absolute triple products. For unit-length
  /// axes this never exceeds the inscribed radius.
  kNone,
};

/// min over non-degenerate pairs (i, j) of the pairwise facet formula.
/// Pairs with |a_i x a_j| < tol::kDegeneratePair are skipped; returns
/// std::nullopt when no pair remains.
std::optional<double> min_facet_value(const Axes& axes, double scale,
                                      FacetNormalization normalization);

/// `count` nearly uniform unit vectors on the sphere (golden-angle spiral).
std::vector<Vec3> fibonacci_sphere(int count);

/// Rank of the axes with singular values below tol::kRank * sigma_max
/// treated as zero.
int axes_rank(const Axes& axes);

/// Inscribed radius by direct sampling: the minimum of the support function
/// over `direction_count` Fibonacci directions plus every normalized pairwise
/// cross product. Throws DegenerateDesign if the axes span less than R^3.
double brute_force_inscribed_radius(const Axes& axes, double scale, int direction_count);

/// Largest t with t * direction inside Z (ray cast from the origin).
/// Throws DegenerateDesign if the axes span less than R^3.
double max_extent_along(const Axes& axes, double scale, const Vec3& direction);

/// Coefficients lambda with axes * lambda == target and |lambda_k| <= bound,
/// or std::nullopt if none exist. Exact: enumerates the basic solutions of
/// the box-constrained system (three free coefficients, the rest at +-bound).
/// Requires axes of rank 3.
std::optional<Eigen::VectorXd> feasible_coefficients(const Axes& axes, const Vec3& target,
                                                     double bound);

/// Image of one corner of the coefficient box.
struct ZonotopePoint {
  std::vector<int> signs;
  Vec3 point;
};

/// axes * (bound * s) for every sign vector s in {-1, +1}^K, in binary
/// counting order with s_1 as the most significant digit.
std::vector<ZonotopePoint> corner_images(const Axes& axes, double bound);

}  // namespace omnihex
