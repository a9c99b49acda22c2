#include "omnihex/csv.hpp"

#include <numbers>

namespace omnihex {

namespace {

constexpr double kToDeg = 180.0 / std::numbers::pi;

class Row {
 public:
  explicit Row(std::ostream& os) : os_(os) {}
  ~Row() { os_ << '\n'; }

  Row& operator<<(double v) {
    sep();
    os_ << v;
    return *this;
  }
  Row& operator<<(int v) {
    sep();
    os_ << v;
    return *this;
  }
  Row& operator<<(const std::string& s) {
    sep();
    os_ << s;
    return *this;
  }
  template <typename Derived>
  Row& operator<<(const Eigen::MatrixBase<Derived>& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) *this << static_cast<double>(v(i));
    return *this;
  }

 private:
  void sep() {
    if (!first_) os_ << ',';
    first_ = false;
  }
  std::ostream& os_;
  bool first_ = true;
};

void begin(std::ostream& os, const std::string& provenance,
           const std::vector<std::string>& columns) {
  os.precision(12);
  os << provenance << '\n';
  Row r(os);
  for (const auto& c : columns) r << c;
}

}  // namespace

const char* version() {
#ifdef OMNIHEX_VERSION
  return OMNIHEX_VERSION;
#else
  return "unknown";
#endif
}

std::string provenance_line(const std::string& config_hash, const std::string& extra) {
  std::string s = std::string("# omnihex ") + version() + " config=" + config_hash;
  if (!extra.empty()) s += " " + extra;
  return s;
}

std::vector<std::string> sim_log_columns() {
  std::vector<std::string> c{"t"};
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 4; ++j) c.push_back("H" + std::to_string(i) + std::to_string(j));
  }
  for (const char* n : {"wx", "wy", "wz", "vx", "vy", "vz"}) c.push_back(std::string("T_") + n);
  c.push_back("phi_rot");
  c.push_back("phi_pos");
  for (const char* n : {"wx", "wy", "wz", "vx", "vy", "vz"}) c.push_back(std::string("Te_") + n);
  c.push_back("torque_norm");
  c.push_back("force_norm");
  for (int i = 1; i <= kRotorCount; ++i) c.push_back("lambda" + std::to_string(i));
  for (const char* w : {"Wff", "Wp", "Wd"}) {
    for (const char* n : {"tx", "ty", "tz", "fx", "fy", "fz"}) {
      c.push_back(std::string(w) + "_" + n);
    }
  }
  return c;
}

void write_sim_log(std::ostream& os, const SimResult& result, const std::string& config_hash) {
  begin(os, provenance_line(config_hash), sim_log_columns());
  for (const SimSample& s : result.log) {
    Row r(os);
    r << s.t;
    const Mat4 h = s.pose.matrix();
    for (int i = 0; i < 3; ++i) r << Eigen::RowVector4d(h.row(i)).transpose();
    r << s.twist.vector() << s.phi_rot << s.phi_pos << s.twist_error.vector() << s.torque_norm
      << s.force_norm << s.thrusts << s.control.feedforward.vector()
      << s.control.proportional.vector() << s.control.derivative.vector();
  }
}

void write_grid_surface(std::ostream& os, const GridSurface& surface,
                        const std::string& config_hash) {
  begin(os, provenance_line(config_hash),
        {"alpha_deg", "beta_deg", "f_min", "t_min", "zeta", "degenerate"});
  for (const DesignPoint& p : surface.points) {
    Row(os) << p.alpha * kToDeg << p.beta * kToDeg << p.metrics.f_min << p.metrics.t_min << p.zeta
            << (p.degenerate ? 1 : 0);
  }
}

void write_weight_sweep(std::ostream& os, const std::vector<TiltOptimum>& rows,
                        const std::string& config_hash) {
  begin(os, provenance_line(config_hash),
        {"c_f", "alpha_deg", "beta_deg", "f_min", "t_min", "zeta", "plateau"});
  for (const TiltOptimum& o : rows) {
    const DesignPoint& p = o.best;
    Row(os) << p.c_f << p.alpha * kToDeg << p.beta * kToDeg << p.metrics.f_min << p.metrics.t_min
            << p.zeta << (o.plateau ? 1 : 0);
  }
}

void write_scale_sweep(std::ostream& os, const std::vector<ScaleSweepRow>& rows,
                       const std::string& config_hash) {
  begin(os, provenance_line(config_hash),
        {"arm_length", "drag_ratio", "c_f", "alpha_deg", "beta_deg", "f_min", "t_min", "zeta"});
  for (const ScaleSweepRow& row : rows) {
    const DesignPoint& p = row.best;
    Row(os) << row.arm_length << row.drag_ratio << p.c_f << p.alpha * kToDeg << p.beta * kToDeg
            << p.metrics.f_min << p.metrics.t_min << p.zeta;
  }
}

void write_vertices(std::ostream& os, const std::vector<ZonotopePoint>& vertices,
                    const std::string& metrics, const std::string& config_hash) {
  std::vector<std::string> cols;
  for (int i = 1; i <= kRotorCount; ++i) cols.push_back("s" + std::to_string(i));
  cols.insert(cols.end(), {"x", "y", "z"});
  begin(os, provenance_line(config_hash, metrics), cols);
  for (const ZonotopePoint& v : vertices) {
    Row r(os);
    for (int s : v.signs) r << s;
    r << v.point;
  }
}

}  // namespace omnihex
