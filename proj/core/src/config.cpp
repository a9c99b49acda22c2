#include "omnihex/config.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "omnihex/errors.hpp"

namespace omnihex {

using nlohmann::json;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

// Walks one JSON object, remembering which keys were read so that leftovers
// can be reported as unknown.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_, "expected an object");
  }

  ~Section() = default;
  Section(const Section&) = delete;
  Section& operator=(const Section&) = delete;

  std::string field(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  const json* find(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  void number(const std::string& key, double& out) {
    if (const json* v = find(key)) out = as_number(*v, field(key));
  }

  void positive(const std::string& key, double& out) {
    number(key, out);
    if (!(out > 0.0)) throw ConfigError(field(key), "must be > 0");
  }

  void non_negative(const std::string& key, double& out) {
    number(key, out);
    if (!(out >= 0.0)) throw ConfigError(field(key), "must be >= 0");
  }

  void integer(const std::string& key, int& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_integer()) throw ConfigError(field(key), "expected an integer");
      out = v->get<int>();
    }
  }

  void boolean(const std::string& key, bool& out) {
    if (const json* v = find(key)) {
      if (!v->is_boolean()) throw ConfigError(field(key), "expected true or false");
      out = v->get<bool>();
    }
  }

  template <int N>
  void vector(const std::string& key, Eigen::Matrix<double, N, 1>& out) {
    if (const json* v = find(key)) {
      if (!v->is_array() || v->size() != static_cast<std::size_t>(N)) {
        throw ConfigError(field(key), "expected an array of " + std::to_string(N) + " numbers");
      }
      for (int i = 0; i < N; ++i) {
        out(i) = as_number((*v)[static_cast<std::size_t>(i)],
                           field(key) + "[" + std::to_string(i) + "]");
      }
    }
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) throw ConfigError(field(it.key()), "unknown key");
    }
  }

  static double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) throw ConfigError(path, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConfigError(path, "must be finite");
    return d;
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

void read_vehicle(Section& s, VehicleConfig& v) {
  s.positive("mass", v.mass);
  s.vector<3>("inertia_diag", v.inertia_diag);
  if (!(v.inertia_diag.array() > 0.0).all()) {
    throw ConfigError(s.field("inertia_diag"), "all entries must be > 0");
  }
  s.positive("arm_length", v.arm_length);
  s.number("drag_ratio", v.drag_ratio);
  s.positive("max_thrust", v.max_thrust);
  if (const json* signs = s.find("spin_signs")) {
    if (!signs->is_array() || signs->size() != kRotorCount) {
      throw ConfigError(s.field("spin_signs"), "expected an array of 6 entries");
    }
    for (int i = 0; i < kRotorCount; ++i) {
      const json& e = (*signs)[static_cast<std::size_t>(i)];
      const std::string path = s.field("spin_signs") + "[" + std::to_string(i) + "]";
      if (!e.is_number_integer() || (e.get<int>() != 1 && e.get<int>() != -1)) {
        throw ConfigError(path, "must be +1 or -1");
      }
      v.spin_signs[static_cast<std::size_t>(i)] = e.get<int>();
    }
  }
  s.number("alpha_deg", v.alpha_deg);
  s.number("beta_deg", v.beta_deg);
  if (!(v.alpha_deg >= 0.0 && v.alpha_deg <= 90.0)) {
    throw ConfigError(s.field("alpha_deg"), "must lie in [0, 90]");
  }
  if (!(v.beta_deg >= 0.0 && v.beta_deg <= 90.0)) {
    throw ConfigError(s.field("beta_deg"), "must lie in [0, 90]");
  }
  s.positive("gravity", v.gravity);
  s.finish();
}

void read_gains(Section& s, GainsConfig& g) {
  s.vector<3>("kp1_diag", g.kp1_diag);
  s.number("kp2", g.kp2);
  s.vector<6>("kd_diag", g.kd_diag);
  s.finish();
  const bool all_zero = g.kp1_diag.isZero(0.0) && g.kp2 == 0.0 && g.kd_diag.isZero(0.0);
  if (all_zero) return;
  if (!(g.kp1_diag.array() > 0.0).all()) throw ConfigError(s.field("kp1_diag"), "entries must be > 0");
  if (!(g.kp2 > 0.0)) throw ConfigError(s.field("kp2"), "must be > 0");
  if (!(g.kd_diag.array() > 0.0).all()) throw ConfigError(s.field("kd_diag"), "entries must be > 0");
}

void read_trajectory(Section& s, TrajectorySpec& t) {
  s.non_negative("radius", t.radius);
  s.number("angular_frequency", t.angular_frequency);
  s.number("z_offset", t.z_offset);
  s.vector<3>("angular_accel_amplitude", t.angular_accel_amplitude);
  s.finish();
}

void read_initial(Section& s, InitialStateConfig& i) {
  s.vector<3>("position", i.position);
  s.vector<3>("rotation_axis", i.rotation_axis);
  s.number("rotation_deg", i.rotation_deg);
  if (i.rotation_deg != 0.0 && i.rotation_axis.norm() == 0.0) {
    throw ConfigError(s.field("rotation_axis"), "must be non-zero when rotation_deg != 0");
  }
  s.vector<3>("angular_velocity", i.angular_velocity);
  s.vector<3>("linear_velocity", i.linear_velocity);
  s.finish();
}

void read_disturbance(Section& s, DisturbanceConfig& d) {
  s.non_negative("time", d.time);
  s.vector<3>("torque_impulse", d.torque_impulse);
  s.vector<3>("force_impulse", d.force_impulse);
  s.non_negative("duration", d.duration);
  s.finish();
}

void read_scenario(Section& s, ScenarioConfig& c) {
  if (const json* t = s.find("trajectory")) {
    Section sub(*t, s.field("trajectory"));
    read_trajectory(sub, c.trajectory);
  }
  if (const json* i = s.find("initial_state")) {
    Section sub(*i, s.field("initial_state"));
    read_initial(sub, c.initial_state);
  }
  if (const json* d = s.find("disturbances")) {
    if (!d->is_array()) throw ConfigError(s.field("disturbances"), "expected an array");
    c.disturbances.clear();
    for (std::size_t k = 0; k < d->size(); ++k) {
      Section sub((*d)[k], s.field("disturbances") + "[" + std::to_string(k) + "]");
      DisturbanceConfig e;
      read_disturbance(sub, e);
      c.disturbances.push_back(e);
    }
  }
  s.positive("dt", c.dt);
  if (c.dt > 0.01) throw ConfigError(s.field("dt"), "must be <= 0.01");
  s.positive("duration", c.duration);
  s.integer("log_decimation", c.log_decimation);
  if (c.log_decimation < 1) throw ConfigError(s.field("log_decimation"), "must be >= 1");
  if (const json* p = s.find("saturation")) {
    const std::string v = p->is_string() ? p->get<std::string>() : "";
    if (v == "report") {
      c.saturation = SaturationPolicy::kReport;
    } else if (v == "scale") {
      c.saturation = SaturationPolicy::kScale;
    } else {
      throw ConfigError(s.field("saturation"), "expected \"report\" or \"scale\"");
    }
  }
  s.positive("convergence_threshold", c.convergence_threshold);
  s.finish();
}

void read_optimizer(Section& s, OptimizerConfig& o) {
  s.number("c_f", o.c_f);
  if (!(o.c_f >= 0.0 && o.c_f <= 1.0)) throw ConfigError(s.field("c_f"), "must lie in [0, 1]");
  s.positive("grid_deg", o.grid_deg);
  if (o.grid_deg > 90.0) throw ConfigError(s.field("grid_deg"), "must be <= 90");
  s.boolean("refine", o.refine);
  if (const json* m = s.find("force_metric")) {
    const std::string v = m->is_string() ? m->get<std::string>() : "";
    if (v == "triple_product") {
      o.force_metric = ForceMetric::kTripleProduct;
    } else if (v == "inscribed_radius") {
      o.force_metric = ForceMetric::kInscribedRadius;
    } else {
      throw ConfigError(s.field("force_metric"),
                        "expected \"triple_product\" or \"inscribed_radius\"");
    }
  }
  s.positive("arm_length", o.arm_length);
  s.positive("max_thrust", o.max_thrust);
  s.number("drag_ratio", o.drag_ratio);
  s.finish();
}

json vec_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json to_json(const Config& c) {
  json j;
  const auto& v = c.vehicle;
  j["vehicle"] = {{"mass", v.mass},
                  {"inertia_diag", vec_json(v.inertia_diag)},
                  {"arm_length", v.arm_length},
                  {"drag_ratio", v.drag_ratio},
                  {"max_thrust", v.max_thrust},
                  {"spin_signs", v.spin_signs},
                  {"alpha_deg", v.alpha_deg},
                  {"beta_deg", v.beta_deg},
                  {"gravity", v.gravity}};
  j["gains"] = {{"kp1_diag", vec_json(c.gains.kp1_diag)},
                {"kp2", c.gains.kp2},
                {"kd_diag", vec_json(c.gains.kd_diag)}};
  const auto& s = c.scenario;
  json dist = json::array();
  for (const auto& d : s.disturbances) {
    dist.push_back({{"time", d.time},
                    {"torque_impulse", vec_json(d.torque_impulse)},
                    {"force_impulse", vec_json(d.force_impulse)},
                    {"duration", d.duration}});
  }
  j["scenario"] = {
      {"trajectory",
       {{"radius", s.trajectory.radius},
        {"angular_frequency", s.trajectory.angular_frequency},
        {"z_offset", s.trajectory.z_offset},
        {"angular_accel_amplitude", vec_json(s.trajectory.angular_accel_amplitude)}}},
      {"initial_state",
       {{"position", vec_json(s.initial_state.position)},
        {"rotation_axis", vec_json(s.initial_state.rotation_axis)},
        {"rotation_deg", s.initial_state.rotation_deg},
        {"angular_velocity", vec_json(s.initial_state.angular_velocity)},
        {"linear_velocity", vec_json(s.initial_state.linear_velocity)}}},
      {"disturbances", dist},
      {"dt", s.dt},
      {"duration", s.duration},
      {"log_decimation", s.log_decimation},
      {"saturation", to_string(s.saturation)},
      {"convergence_threshold", s.convergence_threshold}};
  const auto& o = c.optimizer;
  j["optimizer"] = {{"c_f", o.c_f},
                    {"grid_deg", o.grid_deg},
                    {"refine", o.refine},
                    {"force_metric", to_string(o.force_metric)},
                    {"arm_length", o.arm_length},
                    {"max_thrust", o.max_thrust},
                    {"drag_ratio", o.drag_ratio}};
  return j;
}

}  // namespace

// ---------------------------------------------------------------------------

RotorLayout VehicleConfig::to_layout() const {
  RotorLayout l;
  l.arm_length = arm_length;
  l.drag_ratio = drag_ratio;
  l.max_thrust = max_thrust;
  l.spin_signs = spin_signs;
  l.alpha = alpha_deg * kDeg;
  l.beta = beta_deg * kDeg;
  l.validate();
  return l;
}

VehicleParams VehicleConfig::to_params() const {
  VehicleParams p;
  p.inertia = SpatialInertia::diagonal(inertia_diag, mass);
  p.layout = to_layout();
  p.gravity = gravity;
  return p;
}

GainSet GainsConfig::to_gains() const {
  if (kp1_diag.isZero(0.0) && kp2 == 0.0 && kd_diag.isZero(0.0)) return GainSet::open_loop();
  return GainSet(Mat3(kp1_diag.asDiagonal()), kp2, Mat6(kd_diag.asDiagonal()));
}

RigidBodyState InitialStateConfig::to_state() const {
  Rotation r = Mat3::Identity();
  if (rotation_deg != 0.0) r = exp_so3(rotation_axis.normalized() * (rotation_deg * kDeg));
  return RigidBodyState{Pose(r, position), Twist(angular_velocity, linear_velocity)};
}

DisturbanceEvent DisturbanceConfig::to_event() const {
  return DisturbanceEvent{time, Wrench(torque_impulse, force_impulse), duration};
}

OptimizerOptions OptimizerConfig::to_options() const {
  OptimizerOptions o;
  o.c_f = c_f;
  o.grid_step = grid_deg * kDeg;
  o.refine = refine;
  o.metric = force_metric;
  return o;
}

RotorLayout OptimizerConfig::design_template(const VehicleConfig& vehicle) const {
  RotorLayout l;
  l.arm_length = arm_length;
  l.max_thrust = max_thrust;
  l.drag_ratio = drag_ratio;
  l.spin_signs = vehicle.spin_signs;
  return l;
}

Scenario Config::to_scenario() const {
  Scenario s;
  s.vehicle = vehicle.to_params();
  s.gains = gains.to_gains();
  s.trajectory = scenario.trajectory;
  s.initial = scenario.initial_state.to_state();
  s.disturbances.clear();
  for (const auto& d : scenario.disturbances) s.disturbances.push_back(d.to_event());
  s.dt = scenario.dt;
  s.duration = scenario.duration;
  s.log_decimation = scenario.log_decimation;
  s.saturation = scenario.saturation;
  s.convergence_threshold = scenario.convergence_threshold;
  return s;
}

const char* to_string(SaturationPolicy policy) {
  return policy == SaturationPolicy::kScale ? "scale" : "report";
}

Config parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  Config c;
  Section root(j, "");
  if (const json* v = root.find("vehicle")) {
    Section s(*v, "vehicle");
    read_vehicle(s, c.vehicle);
  }
  if (const json* g = root.find("gains")) {
    Section s(*g, "gains");
    read_gains(s, c.gains);
  }
  if (const json* sc = root.find("scenario")) {
    Section s(*sc, "scenario");
    read_scenario(s, c.scenario);
  }
  if (const json* o = root.find("optimizer")) {
    Section s(*o, "optimizer");
    read_optimizer(s, c.optimizer);
  }
  root.finish();
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const Config& config) { return to_json(config).dump(2) + "\n"; }

std::string config_hash(const Config& config) {
  const std::string text = to_json(config).dump();
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

}  // namespace omnihex
