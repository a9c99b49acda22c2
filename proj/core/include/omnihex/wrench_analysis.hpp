#pragma once

// Control force and torque sets of a tilted hexarotor, their minimum
// guaranteed magnitudes, the weighted tilt-design objective and the
// box-constrained optimizer over (alpha, beta).

#include <numbers>
#include <optional>
#include <vector>

#include "omnihex/vehicle.hpp"
#include "omnihex/zonotope.hpp"

namespace omnihex {

/// How f_min is measured on the force set.
enum class ForceMetric {
  /// Radius of the largest origin-centred ball inside the force set:
  /// lambda_max * min_ij sum_k |(u_i x u_j).u_k| / |u_i x u_j|.
  kInscribedRadius,
  /// lambda_max * min_ij sum_k |(u_i x u_j).u_k| (no normalization). This is
  /// the quantity tabulated for the reference designs; it never exceeds the
  /// inscribed radius, so it is still a guaranteed force.
  kTripleProduct,
};

const char* to_string(ForceMetric metric);

struct WrenchSetMetrics {
  double f_min = 0.0;  ///< [N]
  double t_min = 0.0;  ///< [N m]
};

/// Columns u_i of the force map U.
Axes force_axes(const RotorLayout& layout);
/// Columns t_i of the torque map T.
Axes torque_axes(const RotorLayout& layout);

/// Throws DegenerateDesign when every pair of thrust axes is parallel.
double min_guaranteed_force(const RotorLayout& layout,
                            ForceMetric metric = ForceMetric::kInscribedRadius);

/// Inscribed radius of the torque set. Throws DegenerateDesign when every pair
/// of torque axes is parallel.
double min_guaranteed_torque(const RotorLayout& layout);

WrenchSetMetrics wrench_set_metrics(const RotorLayout& layout,
                                    ForceMetric metric = ForceMetric::kInscribedRadius);

struct DesignPoint {
  double alpha = 0.0;  ///< [rad]
  double beta = 0.0;   ///< [rad]
  double c_f = 0.0;
  WrenchSetMetrics metrics;
  double zeta = 0.0;
  bool degenerate = false;
};

/// zeta = c_f * f_min + (1 - c_f) / L * t_min
double weighted_objective(double c_f, double arm_length, const WrenchSetMetrics& m);

/// Evaluates the design objective at (alpha, beta) using the remaining
/// geometry (L, gamma, lambda_max, spin signs) of `layout_template`.
/// A degenerate design yields zeta = 0 with `degenerate` set.
DesignPoint evaluate_design(double alpha, double beta, double c_f,
                            const RotorLayout& layout_template,
                            ForceMetric metric = ForceMetric::kTripleProduct);

struct OptimizerOptions {
  double c_f = 0.5;
  double grid_step = 0.25 * std::numbers::pi / 180.0;  ///< [rad]
  bool refine = true;
  ForceMetric metric = ForceMetric::kTripleProduct;
  bool keep_surface = false;
};

/// Objective sampled on the (alpha, beta) grid; row-major in beta, i.e.
/// point(ia, ib) is at index ib * alphas.size() + ia.
struct GridSurface {
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<DesignPoint> points;

  const DesignPoint& point(std::size_t ia, std::size_t ib) const {
    return points[ib * alphas.size() + ia];
  }
};

struct TiltOptimum {
  DesignPoint best;
  /// Best grid cell before refinement (ties broken by lowest beta, then
  /// lowest alpha).
  DesignPoint grid_best;
  /// Set when maximizers are found on beta rows more than one degree apart.
  bool plateau = false;
  /// Smallest and largest beta among the rows that reach the maximum.
  double plateau_beta_min = 0.0;
  double plateau_beta_max = 0.0;
  std::size_t evaluations = 0;
  std::optional<GridSurface> surface;
};

/// Grid search over [0, pi/2]^2 followed, when options.refine is set, by a
/// Nelder-Mead polish and a per-row line search in alpha. Among all maximizers
/// the one on the lowest beta row is returned.
TiltOptimum optimize_tilt(const RotorLayout& layout_template, const OptimizerOptions& options);

/// One optimization per weight, in the given order.
std::vector<TiltOptimum> sweep_weight(const std::vector<double>& weights,
                                      const RotorLayout& layout_template,
                                      OptimizerOptions options);

struct ScaleSweepRow {
  double arm_length = 0.0;
  double drag_ratio = 0.0;
  DesignPoint best;
};

/// Rows ordered by drag ratio, then arm length.
std::vector<ScaleSweepRow> sweep_scale(const std::vector<double>& arm_lengths,
                                       const std::vector<double>& drag_ratios,
                                       const RotorLayout& layout_template,
                                       OptimizerOptions options);

struct WrenchSetDump {
  std::vector<ZonotopePoint> force_vertices;
  std::vector<ZonotopePoint> torque_vertices;
  WrenchSetMetrics inscribed;  ///< inscribed-sphere radii of both sets
  double f_min_triple = 0.0;   ///< force metric of the tabulated designs
};

/// Images of the 64 thrust-box corners under U and T. Throws DegenerateDesign
/// if either map has rank below 3.
WrenchSetDump export_wrench_sets(const RotorLayout& layout);

/// Percentage changes between three designs (1: force-optimal,
/// 2: torque-optimal, 3: combined), each (x - ref) / ref * 100.
struct DesignComparison {
  double case2_vs_case1_f = 0.0;
  double case2_vs_case1_t = 0.0;
  double case3_vs_case1_f = 0.0;
  double case3_vs_case1_t = 0.0;
  double case3_vs_case2_f = 0.0;
  double case3_vs_case2_t = 0.0;
  double case1_vs_case2_f = 0.0;
  double case1_vs_case2_t = 0.0;
};

DesignComparison compare_designs(const WrenchSetMetrics& case1, const WrenchSetMetrics& case2,
                                 const WrenchSetMetrics& case3);

}  // namespace omnihex
