#include "omnihex/wrench_analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "omnihex/errors.hpp"

namespace omnihex {

const char* to_string(ForceMetric metric) {
  switch (metric) {
    case ForceMetric::kInscribedRadius:
      return "inscribed_radius";
    case ForceMetric::kTripleProduct:
      return "triple_product";
  }
  return "unknown";
}

Axes force_axes(const RotorLayout& layout) {
  Axes a(3, kRotorCount);
  for (int i = 1; i <= kRotorCount; ++i) a.col(i - 1) = thrust_axis(i, layout.alpha, layout.beta);
  return a;
}

Axes torque_axes(const RotorLayout& layout) {
  Axes a(3, kRotorCount);
  for (int i = 1; i <= kRotorCount; ++i) a.col(i - 1) = torque_axis(layout, i);
  return a;
}

double min_guaranteed_force(const RotorLayout& layout, ForceMetric metric) {
  const auto norm = metric == ForceMetric::kInscribedRadius ? FacetNormalization::kUnit
                                                            : FacetNormalization::kNone;
  const auto value = min_facet_value(force_axes(layout), layout.max_thrust, norm);
  if (!value) throw DegenerateDesign("min_guaranteed_force: all thrust axes are parallel");
  return *value;
}

double min_guaranteed_torque(const RotorLayout& layout) {
  const auto value =
      min_facet_value(torque_axes(layout), layout.max_thrust, FacetNormalization::kUnit);
  if (!value) throw DegenerateDesign("min_guaranteed_torque: all torque axes are parallel");
  return *value;
}

WrenchSetMetrics wrench_set_metrics(const RotorLayout& layout, ForceMetric metric) {
  return {min_guaranteed_force(layout, metric), min_guaranteed_torque(layout)};
}

double weighted_objective(double c_f, double arm_length, const WrenchSetMetrics& m) {
  return c_f * m.f_min + (1.0 - c_f) / arm_length * m.t_min;
}

DesignPoint evaluate_design(double alpha, double beta, double c_f,
                            const RotorLayout& layout_template, ForceMetric metric) {
  RotorLayout layout = layout_template;
  layout.alpha = alpha;
  layout.beta = beta;
  DesignPoint p;
  p.alpha = alpha;
  p.beta = beta;
  p.c_f = c_f;
  try {
    p.metrics = wrench_set_metrics(layout, metric);
    p.zeta = weighted_objective(c_f, layout.arm_length, p.metrics);
  } catch (const DegenerateDesign&) {
    p.metrics = {};
    p.zeta = 0.0;
    p.degenerate = true;
  }
  return p;
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kOneDegree = std::numbers::pi / 180.0;

std::vector<double> grid_axis(double step) {
  std::vector<double> v;
  const auto n = static_cast<long>(std::floor(kHalfPi / step + 1e-9));
  for (long k = 0; k <= n; ++k) v.push_back(static_cast<double>(k) * step);
  if (kHalfPi - v.back() > 1e-12) v.push_back(kHalfPi);
  return v;
}

class Evaluator {
 public:
  Evaluator(const RotorLayout& layout, const OptimizerOptions& opt)
      : layout_(layout), opt_(opt) {}

  DesignPoint operator()(double alpha, double beta) {
    ++count_;
    return evaluate_design(std::clamp(alpha, 0.0, kHalfPi), std::clamp(beta, 0.0, kHalfPi),
                           opt_.c_f, layout_, opt_.metric);
  }

  std::size_t count() const { return count_; }

 private:
  const RotorLayout& layout_;
  const OptimizerOptions& opt_;
  std::size_t count_ = 0;
};

// Maximizes over the box with a clamped Nelder-Mead simplex started at `start`.
DesignPoint nelder_mead(Evaluator& eval, const DesignPoint& start, double step) {
  struct Vertex {
    std::array<double, 2> x;
    DesignPoint p;
  };
  auto make = [&](double a, double b) {
    const double ca = std::clamp(a, 0.0, kHalfPi), cb = std::clamp(b, 0.0, kHalfPi);
    return Vertex{{ca, cb}, eval(ca, cb)};
  };
  auto offset = [](double x, double d) { return x + d <= kHalfPi ? x + d : x - d; };

  std::array<Vertex, 3> s{make(start.alpha, start.beta),
                          make(offset(start.alpha, step), start.beta),
                          make(start.alpha, offset(start.beta, step))};
  auto better = [](const Vertex& u, const Vertex& v) {
    if (u.p.zeta != v.p.zeta) return u.p.zeta > v.p.zeta;
    if (u.x[1] != v.x[1]) return u.x[1] < v.x[1];
    return u.x[0] < v.x[0];
  };

  for (int iter = 0; iter < 400; ++iter) {
    std::sort(s.begin(), s.end(), better);
    const double size = std::max(std::hypot(s[1].x[0] - s[0].x[0], s[1].x[1] - s[0].x[1]),
                                 std::hypot(s[2].x[0] - s[0].x[0], s[2].x[1] - s[0].x[1]));
    if (size < 1e-10) break;

    const double ca = 0.5 * (s[0].x[0] + s[1].x[0]);
    const double cb = 0.5 * (s[0].x[1] + s[1].x[1]);
    auto along = [&](double t) {
      return make(ca + t * (s[2].x[0] - ca), cb + t * (s[2].x[1] - cb));
    };

    Vertex r = along(-1.0);
    if (r.p.zeta > s[0].p.zeta) {
      Vertex e = along(-2.0);
      s[2] = e.p.zeta > r.p.zeta ? e : r;
    } else if (r.p.zeta > s[1].p.zeta) {
      s[2] = r;
    } else {
      const bool outside = r.p.zeta > s[2].p.zeta;
      Vertex c = outside ? along(-0.5) : along(0.5);
      const double target = outside ? r.p.zeta : s[2].p.zeta;
      if (c.p.zeta >= target) {
        s[2] = c;
      } else {
        for (int k = 1; k < 3; ++k) {
          s[k] = make(0.5 * (s[0].x[0] + s[k].x[0]), 0.5 * (s[0].x[1] + s[k].x[1]));
        }
      }
    }
  }
  std::sort(s.begin(), s.end(), better);
  return s[0].p;
}

// Golden-section maximization of alpha -> zeta(alpha, beta) on [lo, hi].
DesignPoint line_search_alpha(Evaluator& eval, double beta, double lo, double hi,
                              const DesignPoint& seed) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  DesignPoint f1 = eval(x1, beta), f2 = eval(x2, beta);
  while (b - a > 1e-11) {
    if (f1.zeta >= f2.zeta) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = eval(x1, beta);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = eval(x2, beta);
    }
  }
  DesignPoint best = f1.zeta >= f2.zeta ? f1 : f2;
  for (const DesignPoint& p : {eval(lo, beta), eval(hi, beta), seed}) {
    if (p.zeta > best.zeta) best = p;
  }
  return best;
}

}  // namespace

TiltOptimum optimize_tilt(const RotorLayout& layout_template, const OptimizerOptions& options) {
  if (!(options.c_f >= 0.0 && options.c_f <= 1.0)) {
    throw InvalidArgument("optimize_tilt: c_f must lie in [0, 1]");
  }
  if (!(options.grid_step > 0.0) || options.grid_step > kHalfPi) {
    throw InvalidArgument("optimize_tilt: grid_step must lie in (0, pi/2]");
  }
  layout_template.validate();

  Evaluator eval(layout_template, options);
  const std::vector<double> alphas = grid_axis(options.grid_step);
  const std::vector<double> betas = grid_axis(options.grid_step);

  TiltOptimum out;
  GridSurface surface;
  surface.alphas = alphas;
  surface.betas = betas;
  surface.points.reserve(alphas.size() * betas.size());

  // Best cell of every beta row; iteration order (beta outer, alpha inner)
  // together with strict comparisons realizes the lowest-beta, lowest-alpha
  // tie-break.
  std::vector<std::size_t> row_best(betas.size(), 0);
  std::vector<DesignPoint> row_best_point(betas.size());
  bool have_best = false;
  for (std::size_t ib = 0; ib < betas.size(); ++ib) {
    for (std::size_t ia = 0; ia < alphas.size(); ++ia) {
      const DesignPoint p = eval(alphas[ia], betas[ib]);
      if (ia == 0 || p.zeta > row_best_point[ib].zeta) {
        row_best[ib] = ia;
        row_best_point[ib] = p;
      }
      if (!have_best || p.zeta > out.grid_best.zeta) {
        out.grid_best = p;
        have_best = true;
      }
      surface.points.push_back(p);
    }
  }

  out.best = out.grid_best;
  out.plateau_beta_min = out.plateau_beta_max = out.grid_best.beta;

  if (options.refine) {
    const DesignPoint polished = nelder_mead(eval, out.grid_best, options.grid_step);
    double zeta_star = std::max(polished.zeta, out.grid_best.zeta);

    std::vector<DesignPoint> refined(betas.size());
    for (std::size_t ib = 0; ib < betas.size(); ++ib) {
      const std::size_t ia = row_best[ib];
      const double lo = alphas[ia > 0 ? ia - 1 : 0];
      const double hi = alphas[std::min(ia + 1, alphas.size() - 1)];
      refined[ib] = line_search_alpha(eval, betas[ib], lo, hi, row_best_point[ib]);
      zeta_star = std::max(zeta_star, refined[ib].zeta);
    }

    const double tolerance = 1e-6 * std::max(1.0, std::abs(zeta_star));
    bool found = false;
    for (std::size_t ib = 0; ib < betas.size(); ++ib) {
      if (refined[ib].zeta < zeta_star - tolerance) continue;
      if (!found) {
        out.best = refined[ib];
        out.plateau_beta_min = betas[ib];
        found = true;
      }
      out.plateau_beta_max = betas[ib];
    }
    if (!found) {
      // The polished point beats every row search by more than the tolerance.
      out.best = polished;
      out.plateau_beta_min = out.plateau_beta_max = polished.beta;
    }
    out.plateau = out.plateau_beta_max - out.plateau_beta_min > kOneDegree;
  }

  out.evaluations = eval.count();
  if (options.keep_surface) out.surface = std::move(surface);
  return out;
}

std::vector<TiltOptimum> sweep_weight(const std::vector<double>& weights,
                                      const RotorLayout& layout_template,
                                      OptimizerOptions options) {
  std::vector<TiltOptimum> out;
  out.reserve(weights.size());
  options.keep_surface = false;
  for (double c : weights) {
    options.c_f = c;
    out.push_back(optimize_tilt(layout_template, options));
  }
  return out;
}

std::vector<ScaleSweepRow> sweep_scale(const std::vector<double>& arm_lengths,
                                       const std::vector<double>& drag_ratios,
                                       const RotorLayout& layout_template,
                                       OptimizerOptions options) {
  std::vector<ScaleSweepRow> out;
  options.keep_surface = false;
  for (double gamma : drag_ratios) {
    for (double length : arm_lengths) {
      RotorLayout layout = layout_template;
      layout.arm_length = length;
      layout.drag_ratio = gamma;
      out.push_back({length, gamma, optimize_tilt(layout, options).best});
    }
  }
  return out;
}

WrenchSetDump export_wrench_sets(const RotorLayout& layout) {
  const Axes u = force_axes(layout);
  const Axes t = torque_axes(layout);
  if (axes_rank(u) < 3) throw DegenerateDesign("export_wrench_sets: force set is not 3-dimensional");
  if (axes_rank(t) < 3) throw DegenerateDesign("export_wrench_sets: torque set is not 3-dimensional");
  WrenchSetDump dump;
  dump.force_vertices = corner_images(u, layout.max_thrust);
  dump.torque_vertices = corner_images(t, layout.max_thrust);
  dump.inscribed = wrench_set_metrics(layout, ForceMetric::kInscribedRadius);
  dump.f_min_triple = min_guaranteed_force(layout, ForceMetric::kTripleProduct);
  return dump;
}

DesignComparison compare_designs(const WrenchSetMetrics& case1, const WrenchSetMetrics& case2,
                                 const WrenchSetMetrics& case3) {
  auto pct = [](double x, double ref) { return (x - ref) / ref * 100.0; };
  DesignComparison c;
  c.case2_vs_case1_f = pct(case2.f_min, case1.f_min);
  c.case2_vs_case1_t = pct(case2.t_min, case1.t_min);
  c.case3_vs_case1_f = pct(case3.f_min, case1.f_min);
  c.case3_vs_case1_t = pct(case3.t_min, case1.t_min);
  c.case3_vs_case2_f = pct(case3.f_min, case2.f_min);
  c.case3_vs_case2_t = pct(case3.t_min, case2.t_min);
  c.case1_vs_case2_f = pct(case1.f_min, case2.f_min);
  c.case1_vs_case2_t = pct(case1.t_min, case2.t_min);
  return c;
}

}  // namespace omnihex
