// Acceptance checks. Prints one PASS/FAIL line per criterion with the
// measured values, then exits non-zero if any criterion failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "identities.hpp"
#include "omnihex/simulator.hpp"
#include "omnihex/wrench_analysis.hpp"
#include "omnihex/zonotope.hpp"
#include "oracles.hpp"
#include "tumble.hpp"

using namespace omnihex;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Line {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void report(const char* id, const char* title, Line& line) {
  std::printf("%s %s %s:%s\n", line.pass ? "PASS" : "FAIL", id, title, line.detail.str().c_str());
  std::fflush(stdout);
  if (!line.pass) ++failures;
}

RotorLayout design_template() {
  RotorLayout l;
  l.arm_length = 1.0;
  l.max_thrust = 1.0;
  l.drag_ratio = 0.0;
  return l;
}

struct TimedOptimum {
  TiltOptimum result;
  double seconds;
};

TimedOptimum optimize(double c_f) {
  OptimizerOptions o;
  o.c_f = c_f;
  o.grid_step = 0.25 * kDeg;
  const auto start = Clock::now();
  TiltOptimum r = optimize_tilt(design_template(), o);
  return {r, seconds_since(start)};
}

// ---------------------------------------------------------------------------

struct TableRow {
  double c_f, alpha_deg, f_min, t_min;
};

void table_one(const TimedOptimum cases[3]) {
  const TableRow expected[3] = {{1.0, 54.7, 2.0, 1.633}, {0.0, 35.3, 1.414, 2.0}, {0.5, 47.7, 1.912, 1.838}};
  Line line;
  line.detail.precision(4);
  for (int i = 0; i < 3; ++i) {
    const DesignPoint& b = cases[i].result.best;
    line.detail << " c_F=" << expected[i].c_f << ": alpha=" << b.alpha / kDeg << " f_min=" << b.metrics.f_min
                << " t_min=" << b.metrics.t_min << " (" << cases[i].seconds << " s);";
    line.require(std::abs(b.alpha / kDeg - expected[i].alpha_deg) <= 0.2, "alpha case " + std::to_string(i + 1));
    line.require(std::abs(b.metrics.f_min - expected[i].f_min) <= 0.005, "f_min case " + std::to_string(i + 1));
    line.require(std::abs(b.metrics.t_min - expected[i].t_min) <= 0.005, "t_min case " + std::to_string(i + 1));
    line.require(cases[i].seconds < 10.0, "runtime case " + std::to_string(i + 1));
  }
  report("C1", "optimal tilt for c_F in {1, 0, 0.5}", line);
}

void table_two(const TimedOptimum cases[3]) {
  const WrenchSetMetrics& c1 = cases[0].result.best.metrics;
  const WrenchSetMetrics& c2 = cases[1].result.best.metrics;
  const WrenchSetMetrics& c3 = cases[2].result.best.metrics;
  auto pct = [](double x, double ref) { return 100.0 * (x - ref) / ref; };
  struct Item {
    const char* name;
    double measured, expected;
  } items[] = {
      {"case2/case1 F", pct(c2.f_min, c1.f_min), -29.29}, {"case2/case1 T", pct(c2.t_min, c1.t_min), 22.47},
      {"case3/case1 F", pct(c3.f_min, c1.f_min), -4.38},  {"case3/case1 T", pct(c3.t_min, c1.t_min), 12.58},
      {"case3/case2 F", pct(c3.f_min, c2.f_min), 35.23},  {"case3/case2 T", pct(c3.t_min, c2.t_min), -8.08},
      {"case1/case2 F", pct(c1.f_min, c2.f_min), 41.42},  {"case1/case2 T", pct(c1.t_min, c2.t_min), -18.35},
  };
  Line line;
  line.detail.setf(std::ios::fixed | std::ios::showpos);
  line.detail.precision(2);
  for (const Item& it : items) {
    line.detail << " " << it.name << " " << it.measured << "%;";
    line.require(std::abs(it.measured - it.expected) <= 0.1, it.name);
  }
  report("C2", "percentage changes between the three optima", line);
}

void beta_zero(const TimedOptimum cases[3]) {
  const double step = 0.25 * kDeg;
  std::vector<std::pair<double, TiltOptimum>> runs{{0.0, cases[1].result}, {0.5, cases[2].result}};
  for (double c : {0.25, 0.75}) runs.emplace_back(c, optimize(c).result);
  Line line;
  line.detail.precision(4);
  for (const auto& [c, r] : runs) {
    line.detail << " c_F=" << c << ": grid beta*=" << r.grid_best.beta / kDeg << " deg alpha*="
                << r.grid_best.alpha / kDeg << ";";
    line.require(r.grid_best.beta <= step + 1e-12, "beta* at c_F=" + std::to_string(c));
  }
  report("C3", "grid argmax has beta* = 0", line);
}

void omnidirectional(const TimedOptimum& balanced) {
  RotorLayout l = design_template();
  l.alpha = balanced.result.best.alpha;
  l.beta = balanced.result.best.beta;
  const Axes axes = force_axes(l);
  double worst_extent = INFINITY;
  int infeasible = 0;
  for (const Vec3& n : fibonacci_sphere(1000)) {
    worst_extent = std::min(worst_extent, max_extent_along(axes, l.max_thrust, n));
    // Independent witness: explicit thrusts inside the box reaching 1.9 lambda_max along n.
    const auto c = feasible_coefficients(axes, 1.9 * l.max_thrust * n, l.max_thrust);
    const bool ok = c && (axes * *c - 1.9 * l.max_thrust * n).norm() < 1e-9 &&
                    c->cwiseAbs().maxCoeff() <= l.max_thrust * (1 + 1e-12);
    if (!ok) ++infeasible;
  }
  const double up = max_extent_along(axes, l.max_thrust, Vec3::UnitZ());
  Line line;
  line.detail.precision(5);
  line.detail << " alpha=" << l.alpha / kDeg << " deg; min reach over 1000 directions = " << worst_extent
              << " lambda_max; directions without a feasible 1.9 lambda_max witness = " << infeasible
              << "; upward reach = " << up << " lambda_max";
  line.require(worst_extent >= 1.9 && infeasible == 0, "force >= 1.9 in every direction");
  line.require(up >= 3.9 && up <= 4.1, "upward reach in [3.9, 4.1]");
  report("C4", "omnidirectional force of the c_F = 0.5 design", line);
}

void scale_sweep() {
  OptimizerOptions o;
  o.c_f = 0.5;
  o.grid_step = 0.25 * kDeg;
  const std::vector<double> lengths{0.2, 0.5, 1.0, 2.0, 5.0};
  const auto rows = sweep_scale(lengths, {0.0}, design_template(), o);
  const auto drag = sweep_scale({0.2}, {0.05}, design_template(), o);
  double lo = INFINITY, hi = -INFINITY, at_small = NAN;
  Line line;
  line.detail.precision(5);
  line.detail << " gamma=0:";
  for (const auto& r : rows) {
    lo = std::min(lo, r.best.alpha);
    hi = std::max(hi, r.best.alpha);
    if (r.arm_length == 0.2) at_small = r.best.alpha;
    line.detail << " L=" << r.arm_length << "->" << r.best.alpha / kDeg;
  }
  const double shift = std::abs(drag[0].best.alpha - at_small) / kDeg;
  line.detail << "; spread " << (hi - lo) / kDeg << " deg; gamma=0.05 L=0.2 -> " << drag[0].best.alpha / kDeg
              << " (shift " << shift << " deg)";
  line.require((hi - lo) / kDeg <= 0.2, "alpha* constant over L for gamma = 0");
  line.require(shift > 1.0, "gamma = 0.05 moves alpha* at L = 0.2");
  report("C5", "arm length and drag sensitivity of alpha*", line);
}

void oracle_equivalence() {
  const auto start = Clock::now();
  oracle::Random rng(2024);
  double worst_f = 0.0, worst_t = 0.0;
  for (int i = 0; i < 50; ++i) {
    RotorLayout l = design_template();
    l.alpha = rng.uniform(1.0, 89.0) * kDeg;
    l.beta = rng.uniform(0.0, 89.0) * kDeg;
    l.arm_length = rng.uniform(0.2, 3.0);
    l.max_thrust = rng.uniform(0.5, 5.0);
    const double f = min_guaranteed_force(l, ForceMetric::kInscribedRadius);
    const double t = min_guaranteed_torque(l);
    const double fb = brute_force_inscribed_radius(force_axes(l), l.max_thrust, 1000);
    const double tb = brute_force_inscribed_radius(torque_axes(l), l.max_thrust, 1000);
    worst_f = std::max(worst_f, std::abs(f - fb) / fb);
    worst_t = std::max(worst_t, std::abs(t - tb) / tb);
  }
  const double elapsed = seconds_since(start);
  Line line;
  line.detail << " 50 random designs; max relative gap force " << worst_f << ", torque " << worst_t << "; "
              << elapsed << " s";
  line.require(worst_f <= 1e-6 && worst_t <= 1e-6, "relative gap <= 1e-6");
  line.require(elapsed < 30.0, "runtime < 30 s");
  report("C6", "closed-form metrics against brute-force inscribed radius", line);
}

void identity_suite() {
  struct Check {
    const char* name;
    identity::Report report;
    double tolerance;
  } checks[] = {
      {"relative twist antisymmetry", identity::relative_twist_antisymmetry(101, 100), 1e-6},
      {"twist frame change", identity::twist_frame_change(102, 100), 1e-10},
      {"adjoint derivative", identity::adjoint_derivative(103, 100), 1e-6},
      {"adjoint inverse", identity::adjoint_inverse(104, 100), 1e-10},
      {"algebra adjoint conjugation", identity::algebra_adjoint_conjugation(105, 100), 1e-10},
      {"trace pairing", identity::trace_pairing(106, 100), 1e-12},
      {"error twist closed form", identity::error_twist_closed_form(107, 100), 1e-5},
      {"transport term", identity::transport_identity(108, 100), 1e-5},
      {"error rate", identity::error_rate_matches_derivative(109, 100), 1e-5},
  };
  Line line;
  line.detail.precision(2);
  for (const Check& c : checks) {
    line.detail << " " << c.name << " " << c.report.max_error << " (tol " << c.tolerance << ", n="
                << c.report.samples << ");";
    line.require(c.report.samples >= 100 && c.report.max_error <= c.tolerance, c.name);
  }
  report("C7", "rigid-body and error-dynamics identities", line);
}

void tracking_simulation() {
  // Wall time of the default run as shipped (log every 10th step).
  const auto start = Clock::now();
  const SimResult shipped = run(Scenario::standard());
  const double wall = seconds_since(start);

  // Same run with every step logged for the shape checks.
  Scenario s = Scenario::standard();
  s.log_decimation = 1;
  const SimResult r = run(s);
  const double impulse_time = s.disturbances.at(0).time;
  const SpatialInertia& inertia = s.vehicle.inertia;

  std::vector<double> phi, v, phi_rot, t;
  for (const SimSample& x : r.log) {
    t.push_back(x.t);
    phi.push_back(x.phi_rot + x.phi_pos);
    phi_rot.push_back(x.phi_rot);
    v.push_back(x.phi_rot + x.phi_pos + inertia.kinetic_energy(x.twist_error));
  }

  // Lyapunov function V = phi + 1/2 T_e^T I T_e: no increase anywhere except
  // across the step that carries the impulse.
  const double noise = 1e-12;
  int v_increases = 0;
  double worst_v_increase = 0.0;
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    const bool impulse_step = t[k] <= impulse_time && impulse_time < t[k + 1] + 0.5 * s.dt;
    const double inc = v[k + 1] - v[k];
    if (inc > noise && !impulse_step) {
      ++v_increases;
      worst_v_increase = std::max(worst_v_increase, inc);
    }
  }

  // Error function itself: once it has fallen below the convergence
  // threshold, it keeps decreasing (up to rounding) outside the window
  // between the impulse and the spike peak.
  std::size_t k_pre = 0;
  while (k_pre + 1 < t.size() && t[k_pre + 1] <= impulse_time) ++k_pre;
  std::size_t k_peak = k_pre;
  for (std::size_t k = k_pre; k < t.size() && t[k] <= impulse_time + 3.0; ++k) {
    if (phi_rot[k] > phi_rot[k_peak]) k_peak = k;
  }
  std::size_t k_settle = 0;
  while (k_settle < phi.size() && phi[k_settle] >= s.convergence_threshold) ++k_settle;
  int phi_increases = 0;
  for (std::size_t k = k_settle; k + 1 < phi.size(); ++k) {
    if (k >= k_pre && k < k_peak) continue;
    if (phi[k + 1] - phi[k] > noise) ++phi_increases;
  }

  // Recovery: first time after the peak where phi_rot is back at or below
  // its value just before the impulse.
  const double pre = phi_rot[k_pre];
  double recovered_at = NAN;
  for (std::size_t k = k_peak; k < t.size(); ++k) {
    if (phi_rot[k] <= pre) {
      recovered_at = t[k];
      break;
    }
  }
  double back_under_threshold = NAN;
  for (std::size_t k = k_peak; k < t.size(); ++k) {
    if (phi_rot[k] < s.convergence_threshold) {
      back_under_threshold = t[k];
      break;
    }
  }
  const double recovery = recovered_at - impulse_time;

  Line line;
  line.detail.precision(4);
  line.detail << " phi(15)=" << shipped.final_phi << " status=" << to_string(shipped.status)
              << "; V increases outside the impulse step: " << v_increases << " (worst " << worst_v_increase
              << "); phi below " << s.convergence_threshold << " from t=" << t[std::min(k_settle, t.size() - 1)]
              << " s, later increases: " << phi_increases << "; phi_rot before impulse " << pre << ", peak "
              << phi_rot[k_peak] << " at t=" << t[k_peak] << " s, back below pre-impulse value at t="
              << recovered_at << " s (" << recovery << " s after impulse), below " << s.convergence_threshold
              << " again at t=" << back_under_threshold << " s; wall time " << wall << " s";
  line.require(shipped.status == RunStatus::kConverged && shipped.final_phi < 1e-3, "phi(15) < 1e-3");
  line.require(v_increases == 0 && phi_increases == 0, "monotone decrease after the transient");
  line.require(phi_rot[k_peak] > pre, "impulse produces a phi_rot spike");
  line.require(std::isfinite(recovery) && recovery <= 3.0, "phi_rot back below pre-impulse value within 3 s");
  line.require(wall < 5.0, "wall time < 5 s");
  report("C8", "closed-loop tracking with impulse disturbance", line);
}

void frame_invariance() {
  oracle::Random rng(909);
  const VehicleParams p = standard_vehicle();
  const GainSet g = GainSet::standard();
  double d_phi = 0.0, d_twist = 0.0, d_wrench_upright = 0.0, d_wrench_general = 0.0;
  for (int i = 0; i < 100; ++i) {
    const RigidBodyState s{rng.pose(), Twist(rng.vec6())};
    const ReferencePoint ref{rng.pose(), Twist(rng.vec6()), Twist(rng.vec6())};
    const TrackingError e = tracking_error(s, ref, g);
    const Wrench w = control_wrench(s, ref, g, p).total();
    auto moved = [&](const Pose& frame, double& wrench_gap, bool remove_gravity) {
      const RigidBodyState s2{frame * s.pose, s.twist};
      const ReferencePoint ref2{frame * ref.pose, ref.twist, ref.twist_rate};
      const TrackingError e2 = tracking_error(s2, ref2, g);
      d_phi = std::max(d_phi, std::abs(e.phi() - e2.phi()));
      d_twist = std::max(d_twist, (e.twist_error - e2.twist_error).vector().cwiseAbs().maxCoeff());
      Wrench a = w;
      Wrench b = control_wrench(s2, ref2, g, p).total();
      if (remove_gravity) {
        a += gravity_wrench(s.pose.rotation(), p.inertia.mass(), p.gravity);
        b += gravity_wrench(s2.pose.rotation(), p.inertia.mass(), p.gravity);
      }
      wrench_gap = std::max(wrench_gap, (a - b).vector().cwiseAbs().maxCoeff());
    };
    moved(Pose(rot_z(rng.uniform(-3.1, 3.1)), rng.vec3(10.0)), d_wrench_upright, false);
    moved(rng.pose(10.0), d_wrench_general, true);
  }
  Line line;
  line.detail.precision(2);
  line.detail << " 100 random states x 2 frames; max |d phi| " << d_phi << ", max |d T_e| " << d_twist
              << ", max |d W| (frames keeping gravity vertical) " << d_wrench_upright
              << ", max |d (W + W_g)| (arbitrary frames) " << d_wrench_general;
  line.require(d_phi <= 1e-12 && d_twist <= 1e-12, "phi and T_e unchanged");
  line.require(d_wrench_upright <= 1e-12 && d_wrench_general <= 1e-12, "control wrench unchanged");
  report("C9", "invariance under a change of inertial frame", line);
}

void conservation() {
  const tumble::Drift d = tumble::run(tumble::standard_initial(), tumble::standard_inertia(), 10.0, 1e-3);
  Line line;
  line.detail.precision(2);
  line.detail << " 10 s at dt=1e-3: relative energy drift " << d.energy << ", relative inertial momentum drift "
              << d.momentum;
  line.require(d.energy <= 1e-7, "energy");
  line.require(d.momentum <= 1e-7, "momentum");
  report("C10", "free tumble conserves energy and momentum", line);
}

}  // namespace

int main() {
  const TimedOptimum cases[3] = {optimize(1.0), optimize(0.0), optimize(0.5)};
  table_one(cases);
  table_two(cases);
  beta_zero(cases);
  omnidirectional(cases[2]);
  scale_sweep();
  oracle_equivalence();
  identity_suite();
  tracking_simulation();
  frame_invariance();
  conservation();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
