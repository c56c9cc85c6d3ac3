#include "multilift/config_file.hpp"

#include <fstream>
#include <sstream>

namespace multilift {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad numeric value for " + key + ": '" + value +
                      "'");
  }
}

int parse_int(const std::string& key, const std::string& value) {
  const double v = parse_double(key, value);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v) {
    throw ConfigError("config: expected integer for " + key);
  }
  return i;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "on") return true;
  if (value == "false" || value == "0" || value == "off") return false;
  throw ConfigError("config: expected boolean for " + key);
}

Vec3 parse_vec3(const std::string& key, const std::string& value) {
  std::istringstream ss(value);
  Vec3 v;
  if (!(ss >> v.x() >> v.y() >> v.z())) {
    throw ConfigError("config: expected three numbers for " + key);
  }
  std::string rest;
  if (ss >> rest) {
    throw ConfigError("config: trailing content for " + key);
  }
  return v;
}

TrajectoryKind trajectory_kind_from_string(const std::string& s) {
  if (s == "hover") return TrajectoryKind::hover;
  if (s == "circle") return TrajectoryKind::circle;
  if (s == "helix") return TrajectoryKind::helix;
  if (s == "tilted_circle") return TrajectoryKind::tilted_circle;
  if (s == "smoothed_square") return TrajectoryKind::smoothed_square;
  throw ConfigError("config: unknown trajectory.kind '" + s + "'");
}

}  // namespace

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config: missing '=' on line " +
                        std::to_string(line_no));
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("config: empty key or value on line " +
                        std::to_string(line_no));
    }
    kv[key] = value;
  }
  return kv;
}

void apply_config(const std::map<std::string, std::string>& kv,
                  ScenarioConfig* cfg) {
  bool geometry_dirty = false;
  for (const auto& [key, value] : kv) {
    if (key == "scenario.group") {
      cfg->group = group_from_string(value);
    } else if (key == "scenario.controller") {
      cfg->controller = variant_from_string(value);
    } else if (key == "integrator.dt") {
      cfg->integrator.h = parse_double(key, value);
    } else if (key == "integrator.duration") {
      cfg->integrator.duration = parse_double(key, value);
    } else if (key == "integrator.substeps") {
      cfg->integrator.substeps = parse_int(key, value);
    } else if (key == "plant.m0") {
      cfg->plant.m0 = parse_double(key, value);
    } else if (key == "plant.J0") {
      cfg->plant.J0 = parse_vec3(key, value).asDiagonal();
    } else if (key == "plant.g") {
      cfg->plant.g = parse_double(key, value);
    } else if (key == "plant.quad_mass") {
      cfg->quad_mass = parse_double(key, value);
      geometry_dirty = true;
    } else if (key == "plant.quad_J") {
      cfg->quad_J_diag = parse_vec3(key, value);
      geometry_dirty = true;
    } else if (key == "geometry.n") {
      cfg->n = parse_int(key, value);
      geometry_dirty = true;
    } else if (key == "geometry.attach_radius") {
      cfg->attach_radius = parse_double(key, value);
      geometry_dirty = true;
    } else if (key == "geometry.cable_length") {
      cfg->cable_length = parse_double(key, value);
      geometry_dirty = true;
    } else if (key == "reference.m0") {
      cfg->ref_model.m0 = parse_double(key, value);
    } else if (key == "reference.J0") {
      cfg->ref_model.J0 = parse_vec3(key, value);
    } else if (key == "gains.kp") {
      cfg->gains.k_p = parse_vec3(key, value);
    } else if (key == "gains.kd") {
      cfg->gains.k_d = parse_vec3(key, value);
    } else if (key == "gains.kR0") {
      cfg->gains.k_R0 = parse_double(key, value);
    } else if (key == "gains.kOmega0") {
      cfg->gains.k_Omega0 = parse_double(key, value);
    } else if (key == "gains.cR") {
      cfg->gains.c_R = parse_double(key, value);
      cfg->sanm.c_R = cfg->gains.c_R;
    } else if (key == "gains.cq") {
      cfg->gains.c_q = parse_double(key, value);
    } else if (key == "gains.hx0") {
      cfg->gains.h_x0 = parse_double(key, value);
    } else if (key == "gains.hR0") {
      cfg->gains.h_R0 = parse_double(key, value);
    } else if (key == "gains.hxi") {
      cfg->gains.h_xi = parse_double(key, value);
    } else if (key == "gains.kq") {
      cfg->gains.k_q = parse_double(key, value);
    } else if (key == "gains.komega") {
      cfg->gains.k_omega = parse_double(key, value);
    } else if (key == "gains.kRi") {
      cfg->gains.k_Ri = parse_double(key, value);
    } else if (key == "gains.kOmegai") {
      cfg->gains.k_Omegai = parse_double(key, value);
    } else if (key == "gains.q_lyap") {
      cfg->gains.q_lyap = parse_vec3(key, value);
    } else if (key == "sanm.eta_m") {
      cfg->sanm.eta_m = parse_double(key, value);
    } else if (key == "sanm.eta_J") {
      cfg->sanm.eta_J = parse_double(key, value);
    } else if (key == "sanm.s_m") {
      cfg->sanm.s_m = parse_vec3(key, value);
    } else if (key == "sanm.s_J") {
      cfg->sanm.s_J = parse_vec3(key, value);
    } else if (key == "sanm.m0_max") {
      cfg->sanm.m0_max = parse_double(key, value);
    } else if (key == "sanm.J0_max") {
      cfg->sanm.J0_max = parse_vec3(key, value);
    } else if (key == "sanm.weight_radius") {
      cfg->sanm.weight_radius = parse_double(key, value);
    } else if (key == "sanm.gamma_x") {
      const Vec3 g = parse_vec3(key, value);
      for (int j = 0; j < 3; ++j) cfg->sanm.trans[j].gamma = g(j);
    } else if (key == "sanm.gamma_R") {
      const Vec3 g = parse_vec3(key, value);
      for (int j = 0; j < 3; ++j) cfg->sanm.rot[j].gamma = g(j);
    } else if (key == "sanm.widths_x") {
      const Vec3 w = parse_vec3(key, value);
      for (int j = 0; j < 3; ++j) {
        cfg->sanm.trans[j].widths.setConstant(w(j));
      }
    } else if (key == "sanm.widths_R") {
      const Vec3 w = parse_vec3(key, value);
      for (int j = 0; j < 3; ++j) {
        cfg->sanm.rot[j].widths.setConstant(w(j));
      }
    } else if (key == "sanm.neurons") {
      const int l = parse_int(key, value);
      if (l < 1) throw ConfigError("config: sanm.neurons must be >= 1");
      Eigen::Matrix2Xd centers(2, l);
      for (int k = 0; k < l; ++k) {
        const double c = l == 1 ? 0.0 : -1.0 + 2.0 * k / (l - 1);
        centers.col(k) = Vec2(c, c);
      }
      for (int j = 0; j < 3; ++j) {
        const double wx = cfg->sanm.trans[j].widths(0);
        const double wr = cfg->sanm.rot[j].widths(0);
        cfg->sanm.trans[j].centers = centers;
        cfg->sanm.trans[j].widths = Eigen::VectorXd::Constant(l, wx);
        cfg->sanm.rot[j].centers = centers;
        cfg->sanm.rot[j].widths = Eigen::VectorXd::Constant(l, wr);
      }
    } else if (key == "trajectory.kind") {
      cfg->trajectory.kind = trajectory_kind_from_string(value);
    } else if (key == "trajectory.start") {
      cfg->trajectory.start = parse_vec3(key, value);
    } else if (key == "trajectory.radius") {
      cfg->trajectory.radius = parse_double(key, value);
    } else if (key == "trajectory.rate") {
      cfg->trajectory.angular_rate = parse_double(key, value);
    } else if (key == "trajectory.climb_rate") {
      cfg->trajectory.climb_rate = parse_double(key, value);
    } else if (key == "trajectory.altitude_amplitude") {
      cfg->trajectory.altitude_amplitude = parse_double(key, value);
    } else if (key == "trajectory.altitude_rate") {
      cfg->trajectory.altitude_rate = parse_double(key, value);
    } else if (key == "trajectory.square_sharpness") {
      cfg->trajectory.square_sharpness = parse_double(key, value);
    } else if (key == "attitude.mode") {
      if (value == "facing") {
        cfg->attitude.mode = AttitudeMode::facing;
      } else if (value == "fixed") {
        cfg->attitude.mode = AttitudeMode::fixed;
      } else {
        throw ConfigError("config: unknown attitude.mode '" + value + "'");
      }
    } else if (key == "disturbance.payload_force") {
      cfg->disturbance.payload_force = parse_bool(key, value);
    } else if (key == "disturbance.payload_moment") {
      cfg->disturbance.payload_moment = parse_bool(key, value);
    } else if (key == "disturbance.moment_onset") {
      cfg->disturbance.payload_moment_onset = parse_double(key, value);
    } else if (key == "disturbance.quads") {
      cfg->disturbance.quad_disturbances = parse_bool(key, value);
    } else if (key == "disturbance.quad_force_amp") {
      cfg->disturbance.quad_force_amp = parse_double(key, value);
    } else if (key == "disturbance.quad_moment_amp") {
      cfg->disturbance.quad_moment_amp = parse_double(key, value);
    } else if (key == "metrics.window_start") {
      cfg->window.t_start = parse_double(key, value);
    } else if (key == "metrics.window_end") {
      cfg->window.t_end = parse_double(key, value);
    } else if (key == "output.log_stride") {
      cfg->log_stride = parse_int(key, value);
    } else {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }
  if (geometry_dirty) cfg->rebuild_geometry();
}

ScenarioConfig load_config(const std::string& path,
                           const ScenarioConfig& base) {
  const auto kv = parse_config_file(path);
  ScenarioConfig cfg = base;
  // When the file names a group/controller, restart from those defaults so
  // the remaining keys override a coherent preset.
  const auto group_it = kv.find("scenario.group");
  const auto ctrl_it = kv.find("scenario.controller");
  if (group_it != kv.end() || ctrl_it != kv.end()) {
    const Group g = group_it != kv.end() ? group_from_string(group_it->second)
                                         : base.group;
    const ControllerVariant v = ctrl_it != kv.end()
                                    ? variant_from_string(ctrl_it->second)
                                    : base.controller;
    cfg = default_config(g, v);
  }
  apply_config(kv, &cfg);
  try {
    cfg.validate();
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(std::string("config: ") + ex.what());
  }
  return cfg;
}

}  // namespace multilift
