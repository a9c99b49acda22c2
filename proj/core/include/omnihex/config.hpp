#pragma once

// JSON configuration schema. Angles are written in degrees in files and kept
// in degrees here, so that parse(serialize(c)) reproduces every field
// exactly; conversion to radians happens in the to_*() helpers.
//
// {
//   "vehicle":   { "mass", "inertia_diag"[3], "arm_length", "drag_ratio",
//                  "max_thrust", "spin_signs"[6], "alpha_deg", "beta_deg",
//                  "gravity" },
//   "gains":     { "kp1_diag"[3], "kp2", "kd_diag"[6] },
//   "scenario":  { "trajectory": { "radius", "angular_frequency", "z_offset",
//                                  "angular_accel_amplitude"[3] },
//                  "initial_state": { "position"[3], "rotation_axis"[3],
//                                     "rotation_deg", "angular_velocity"[3],
//                                     "linear_velocity"[3] },
//                  "disturbances": [ { "time", "torque_impulse"[3],
//                                      "force_impulse"[3], "duration" } ],
//                  "dt", "duration", "log_decimation",
//                  "saturation": "report" | "scale",
//                  "convergence_threshold" },
//   "optimizer": { "c_f", "grid_deg", "refine",
//                  "force_metric": "triple_product" | "inscribed_radius",
//                  "arm_length", "max_thrust", "drag_ratio" }
// }
//
// Every section and key is optional; missing entries keep their defaults.
// Unknown keys and out-of-domain values raise ConfigError naming the field.

#include <array>
#include <string>
#include <vector>

#include "omnihex/controller.hpp"
#include "omnihex/simulator.hpp"
#include "omnihex/wrench_analysis.hpp"

namespace omnihex {

inline constexpr const char* kConfigEnvVar = "OMNIHEX_CONFIG";

struct VehicleConfig {
  double mass = 0.6;
  Vec3 inertia_diag = Vec3(0.5, 0.5, 2.0);
  double arm_length = 1.0;
  double drag_ratio = 0.0;
  double max_thrust = 10.0;
  std::array<int, kRotorCount> spin_signs{+1, -1, +1, -1, +1, -1};
  double alpha_deg = 47.7;
  double beta_deg = 0.0;
  double gravity = 9.81;

  RotorLayout to_layout() const;
  VehicleParams to_params() const;
};

struct GainsConfig {
  Vec3 kp1_diag = Vec3::Constant(10.0);
  double kp2 = 3.0;
  Vec6 kd_diag = (Vec6() << 5, 5, 5, 2, 2, 2).finished();

  /// All-zero gains give GainSet::open_loop(); anything else must be SPD.
  GainSet to_gains() const;
};

struct InitialStateConfig {
  Vec3 position = Vec3::Zero();
  Vec3 rotation_axis = Vec3(1.0, 1.0, 0.0);
  double rotation_deg = 30.0;
  Vec3 angular_velocity = Vec3::Zero();
  Vec3 linear_velocity = Vec3::Zero();

  RigidBodyState to_state() const;
};

struct DisturbanceConfig {
  double time = 7.0;
  Vec3 torque_impulse = Vec3(0.5, 0.0, 0.0);
  Vec3 force_impulse = Vec3::Zero();
  double duration = 0.0;

  DisturbanceEvent to_event() const;
};

struct ScenarioConfig {
  TrajectorySpec trajectory;
  InitialStateConfig initial_state;
  std::vector<DisturbanceConfig> disturbances{DisturbanceConfig{}};
  double dt = 1e-3;
  double duration = 15.0;
  int log_decimation = 10;
  SaturationPolicy saturation = SaturationPolicy::kReport;
  double convergence_threshold = 1e-3;
};

struct OptimizerConfig {
  double c_f = 0.5;
  double grid_deg = 0.25;
  bool refine = true;
  ForceMetric force_metric = ForceMetric::kTripleProduct;
  double arm_length = 1.0;
  double max_thrust = 1.0;
  double drag_ratio = 0.0;

  OptimizerOptions to_options() const;
  /// Geometry the tilt angles are optimized for (spin signs from `vehicle`).
  RotorLayout design_template(const VehicleConfig& vehicle) const;
};

struct Config {
  VehicleConfig vehicle;
  GainsConfig gains;
  ScenarioConfig scenario;
  OptimizerConfig optimizer;

  Scenario to_scenario() const;
};

/// Parses JSON text. Throws ConfigError with the offending field path.
Config parse_config(const std::string& text);

/// Reads and parses a file. Throws ConfigError (path "" for I/O failures).
Config load_config(const std::string& path);

/// Pretty-printed JSON containing every field.
std::string serialize_config(const Config& config);

/// 64-bit FNV-1a of the compact serialization, as 16 hex digits.
std::string config_hash(const Config& config);

const char* to_string(SaturationPolicy policy);

}  // namespace omnihex
