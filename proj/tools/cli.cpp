#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "omnihex/config.hpp"
#include "omnihex/csv.hpp"
#include "omnihex/errors.hpp"
#include "omnihex/simulator.hpp"
#include "omnihex/wrench_analysis.hpp"

namespace omnihex::cli {

namespace {

constexpr double kToDeg = 180.0 / std::numbers::pi;

struct IoError : Error {
  using Error::Error;
};

Config resolve_config(const std::string& path) {
  if (!path.empty()) return load_config(path);
  if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') {
    return load_config(env);
  }
  return Config{};
}

std::ofstream open_output(const std::string& path) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(path);
  if (!f) throw IoError("cannot write '" + path + "'");
  return f;
}

std::string design_line(const DesignPoint& p) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << "alpha_deg=" << p.alpha * kToDeg
     << " beta_deg=" << p.beta * kToDeg << std::setprecision(5) << " f_min=" << p.metrics.f_min
     << " t_min=" << p.metrics.t_min << " zeta=" << p.zeta;
  return os.str();
}

// ---------------------------------------------------------------------------

struct OptimizeArgs {
  std::string config;
  double c_f = -1.0;
  double grid_deg = 0.0;
  std::string metric;
  bool refine = true;
  bool refine_set = false;
  std::string out;
};

int cmd_optimize(const OptimizeArgs& a, std::ostream& out) {
  Config cfg = resolve_config(a.config);
  if (a.c_f >= 0.0) cfg.optimizer.c_f = a.c_f;
  if (a.grid_deg > 0.0) cfg.optimizer.grid_deg = a.grid_deg;
  if (a.refine_set) cfg.optimizer.refine = a.refine;
  if (a.metric == "inscribed_radius") cfg.optimizer.force_metric = ForceMetric::kInscribedRadius;
  if (a.metric == "triple_product") cfg.optimizer.force_metric = ForceMetric::kTripleProduct;

  OptimizerOptions opt = cfg.optimizer.to_options();
  opt.keep_surface = !a.out.empty();
  const TiltOptimum r = optimize_tilt(cfg.optimizer.design_template(cfg.vehicle), opt);

  out << "c_f=" << cfg.optimizer.c_f << " " << design_line(r.best)
      << " plateau=" << (r.plateau ? 1 : 0) << " metric=" << to_string(opt.metric) << "\n";
  if (r.plateau) {
    out << std::fixed << std::setprecision(2) << "plateau: maximizers found for beta in ["
        << r.plateau_beta_min * kToDeg << ", " << r.plateau_beta_max * kToDeg
        << "] deg; reporting the beta = " << r.best.beta * kToDeg << " member\n";
  }
  if (!a.out.empty()) {
    auto f = open_output(a.out);
    write_grid_surface(f, *r.surface, config_hash(cfg));
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct WrenchSetArgs {
  std::string config;
  std::string out_dir;
  double alpha_deg = -1.0;
  double beta_deg = -1.0;
  bool table_ii = false;
};

int cmd_table_ii(const Config& cfg, std::ostream& out) {
  const RotorLayout tmpl = cfg.optimizer.design_template(cfg.vehicle);
  OptimizerOptions opt = cfg.optimizer.to_options();
  const auto rows = sweep_weight({1.0, 0.0, 0.5}, tmpl, opt);
  const DesignComparison c =
      compare_designs(rows[0].best.metrics, rows[1].best.metrics, rows[2].best.metrics);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << "case" << i + 1 << " c_f=" << rows[i].best.c_f << " " << design_line(rows[i].best)
        << "\n";
  }
  out << std::showpos << std::fixed << std::setprecision(2);
  out << "case1 vs case2: f_min " << c.case1_vs_case2_f << "% t_min " << c.case1_vs_case2_t
      << "%\n";
  out << "case2 vs case1: f_min " << c.case2_vs_case1_f << "% t_min " << c.case2_vs_case1_t
      << "%\n";
  out << "case3 vs case1: f_min " << c.case3_vs_case1_f << "% t_min " << c.case3_vs_case1_t
      << "%\n";
  out << "case3 vs case2: f_min " << c.case3_vs_case2_f << "% t_min " << c.case3_vs_case2_t
      << "%\n";
  out << std::noshowpos;
  return kOk;
}

int cmd_wrench_sets(const WrenchSetArgs& a, std::ostream& out) {
  Config cfg = resolve_config(a.config);
  if (a.table_ii) return cmd_table_ii(cfg, out);
  if (a.alpha_deg >= 0.0) cfg.vehicle.alpha_deg = a.alpha_deg;
  if (a.beta_deg >= 0.0) cfg.vehicle.beta_deg = a.beta_deg;

  const RotorLayout layout = cfg.vehicle.to_layout();
  const WrenchSetDump dump = export_wrench_sets(layout);
  const double t_min = dump.inscribed.t_min;

  std::ostringstream metrics;
  metrics << std::setprecision(8) << "f_min=" << dump.f_min_triple << " t_min=" << t_min
          << " f_inscribed=" << dump.inscribed.f_min << " alpha_deg=" << cfg.vehicle.alpha_deg
          << " beta_deg=" << cfg.vehicle.beta_deg << " lambda_max=" << layout.max_thrust
          << " arm_length=" << layout.arm_length;
  out << metrics.str() << "\n";

  if (!a.out_dir.empty()) {
    const std::string hash = config_hash(cfg);
    const std::filesystem::path dir(a.out_dir);
    auto ff = open_output((dir / "force_set.csv").string());
    write_vertices(ff, dump.force_vertices, metrics.str(), hash);
    auto tf = open_output((dir / "torque_set.csv").string());
    write_vertices(tf, dump.torque_vertices, metrics.str(), hash);
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
  std::string config;
  std::string out;
  bool no_disturbance = false;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  Config cfg = resolve_config(a.config);
  if (a.no_disturbance) cfg.scenario.disturbances.clear();
  const SimResult r = run(cfg.to_scenario());
  if (!a.out.empty()) {
    auto f = open_output(a.out);
    write_sim_log(f, r, config_hash(cfg));
  }
  out << "status=" << to_string(r.status) << std::scientific << std::setprecision(3)
      << " final_phi=" << r.final_phi << " final_pose_error=" << r.final_pose_error << std::fixed << std::setprecision(3)
      << " peak_thrust=" << r.peak_thrust << " saturation_count=" << r.saturation_count
      << " steps=" << r.steps;
  if (r.failure_time) out << " failure_time=" << *r.failure_time;
  out << "\n";
  if (!r.message.empty()) out << r.message << "\n";
  switch (r.status) {
    case RunStatus::kConverged:
      return kOk;
    case RunStatus::kNotConverged:
      return kNotConverged;
    case RunStatus::kNonFinite:
      return kNonFinite;
  }
  return kFailure;
}

// ---------------------------------------------------------------------------

struct SweepArgs {
  std::string config;
  std::string kind;
  std::string out;
  std::vector<double> weights;
  std::vector<double> arm_lengths{0.1, 0.2, 0.3, 0.5, 1.0, 2.0, 5.0};
  std::vector<double> drag_ratios{0.0, 0.01, 0.02, 0.05};
  double c_f = -1.0;
  double grid_deg = 0.0;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  Config cfg = resolve_config(a.config);
  if (a.c_f >= 0.0) cfg.optimizer.c_f = a.c_f;
  if (a.grid_deg > 0.0) cfg.optimizer.grid_deg = a.grid_deg;
  const RotorLayout tmpl = cfg.optimizer.design_template(cfg.vehicle);
  const OptimizerOptions opt = cfg.optimizer.to_options();
  const std::string hash = config_hash(cfg);

  std::ostringstream csv;
  if (a.kind == "weight") {
    std::vector<double> w = a.weights;
    if (w.empty()) {
      for (int i = 0; i <= 20; ++i) w.push_back(i / 20.0);
    }
    write_weight_sweep(csv, sweep_weight(w, tmpl, opt), hash);
  } else {
    write_scale_sweep(csv, sweep_scale(a.arm_lengths, a.drag_ratios, tmpl, opt), hash);
  }
  if (a.out.empty()) {
    out << csv.str();
  } else {
    auto f = open_output(a.out);
    f << csv.str();
    out << "wrote " << a.out << "\n";
  }
  return kOk;
}

}  // namespace

// ---------------------------------------------------------------------------

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tilted-hexarotor design, control and simulation tool", "omnihex"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);

  OptimizeArgs oa;
  auto* opt = app.add_subcommand("optimize", "Optimize the tilt angles for a weight c_F");
  opt->add_option("--config", oa.config, "JSON config file");
  opt->add_option("--c-f", oa.c_f, "Force/torque weight c_F")->check(CLI::Range(0.0, 1.0));
  opt->add_option("--grid-deg", oa.grid_deg, "Grid step [deg]")
      ->check(CLI::Range(1e-3, 90.0));
  opt->add_option("--metric", oa.metric, "Force metric")
      ->check(CLI::IsMember({"triple_product", "inscribed_radius"}));
  opt->add_flag("--refine,!--no-refine", oa.refine, "Refine the best grid cell")
      ->each([&oa](const std::string&) { oa.refine_set = true; });
  opt->add_option("--out", oa.out, "Write the objective surface CSV here");

  WrenchSetArgs wa;
  auto* ws = app.add_subcommand("wrench-sets", "Dump the control force and torque sets");
  ws->add_option("--config", wa.config, "JSON config file");
  ws->add_option("--out-dir", wa.out_dir, "Directory for force_set.csv and torque_set.csv");
  ws->add_option("--alpha-deg", wa.alpha_deg, "Override alpha [deg]")->check(CLI::Range(0.0, 90.0));
  ws->add_option("--beta-deg", wa.beta_deg, "Override beta [deg]")->check(CLI::Range(0.0, 90.0));
  ws->add_flag("--table-ii", wa.table_ii, "Compare the force-, torque- and combined-optimal designs");

  SimulateArgs sa;
  auto* sim = app.add_subcommand("simulate", "Run the closed-loop tracking simulation");
  sim->add_option("--config", sa.config, "JSON config file");
  sim->add_option("--out", sa.out, "Write the simulation log CSV here");
  sim->add_flag("--no-disturbance", sa.no_disturbance, "Drop all disturbance events");

  SweepArgs wa2;
  auto* sw = app.add_subcommand("sweep", "Optimize over a grid of weights or vehicle scales");
  sw->add_option("--config", wa2.config, "JSON config file");
  sw->add_option("--kind", wa2.kind, "weight or scale")
      ->required()
      ->check(CLI::IsMember({"weight", "scale"}));
  sw->add_option("--out", wa2.out, "Output CSV (stdout if omitted)");
  sw->add_option("--weights", wa2.weights, "c_F values for --kind weight")
      ->check(CLI::Range(0.0, 1.0));
  sw->add_option("--arm-lengths", wa2.arm_lengths, "L values [m] for --kind scale")
      ->check(CLI::PositiveNumber);
  sw->add_option("--drag-ratios", wa2.drag_ratios, "gamma values [m] for --kind scale");
  sw->add_option("--c-f", wa2.c_f, "Weight for --kind scale")->check(CLI::Range(0.0, 1.0));
  sw->add_option("--grid-deg", wa2.grid_deg, "Grid step [deg]")->check(CLI::Range(1e-3, 90.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (opt->parsed()) return cmd_optimize(oa, out);
    if (ws->parsed()) return cmd_wrench_sets(wa, out);
    if (sim->parsed()) return cmd_simulate(sa, out);
    if (sw->parsed()) return cmd_sweep(wa2, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const DegenerateDesign& e) {
    err << "degenerate design: " << e.what() << "\n";
    return kDegenerate;
  } catch (const SingularAllocation& e) {
    err << "degenerate design: " << e.what() << "\n";
    return kDegenerate;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace omnihex::cli
