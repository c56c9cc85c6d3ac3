#include "multilift/report.hpp"

#include <fstream>

#include "json.hpp"

namespace multilift {

namespace {

using nlohmann::json;

json vec3_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

json metrics_json(const Metrics& m) {
  json j;
  j["rms_e_x"] = m.rms_e_x;
  j["max_e_x"] = m.max_e_x;
  j["rms_psi_R"] = m.rms_psi_R;
  j["max_psi_R"] = m.max_psi_R;
  j["settle_time_e_x"] = m.settle_time_e_x;
  j["settle_time_psi_R"] = m.settle_time_psi_R;
  j["m_hat_final"] = vec3_json(m.m_hat_final);
  j["J_hat_final"] = vec3_json(m.J_hat_final);
  j["m_hat_max"] = m.m_hat_max;
  j["recip_mass_err_max"] = m.recip_mass_err_max;
  j["recip_inertia_err_max"] = m.recip_inertia_err_max;
  j["compression_steps"] = m.compression_steps;
  j["max_rotation_orthogonality_err"] = m.max_rotation_orthogonality_err;
  j["max_rotation_det_err"] = m.max_rotation_det_err;
  j["max_cable_norm_err"] = m.max_cable_norm_err;
  j["max_tangency_err"] = m.max_tangency_err;
  j["steps"] = m.steps;
  j["diverged"] = m.diverged;
  j["failure_reason"] = m.failure_reason;
  j["t_end"] = m.t_end;
  return j;
}

json scenario_json(const ScenarioConfig& cfg) {
  json j;
  j["group"] = to_string(cfg.group);
  j["controller"] = to_string(cfg.controller);
  j["dt"] = cfg.integrator.h;
  j["duration"] = cfg.integrator.duration;
  j["plant_m0"] = cfg.plant.m0;
  j["plant_J0_diag"] = vec3_json(cfg.plant.J0.diagonal());
  j["reference_m0"] = cfg.ref_model.m0;
  j["reference_J0_diag"] = vec3_json(cfg.ref_model.J0);
  j["window"] = json::array({cfg.window.t_start, cfg.window.t_end});
  json geometry;
  geometry["n"] = cfg.n;
  geometry["cable_length"] = cfg.cable_length;
  geometry["attach_radius"] = cfg.attach_radius;
  json rho = json::array();
  for (const auto& r : cfg.plant.rho) rho.push_back(vec3_json(r));
  geometry["rho"] = rho;
  j["geometry"] = geometry;
  j["csv_schema_version"] = 1;
  return j;
}

void dump(const json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << j.dump(2) << '\n';
}

}  // namespace

void write_metrics_json(const Metrics& metrics, const ScenarioConfig& cfg,
                        double wall_time_s, const std::string& path) {
  json j;
  j["scenario"] = scenario_json(cfg);
  j["metrics"] = metrics_json(metrics);
  j["wall_time_s"] = wall_time_s;
  dump(j, path);
}

void write_comparison_json(const Metrics& baseline, const Metrics& sanm,
                           const ScenarioConfig& cfg, const std::string& path) {
  json j;
  j["scenario"] = scenario_json(cfg);
  j["baseline"] = metrics_json(baseline);
  j["sanm"] = metrics_json(sanm);
  const auto ratio = [](double a, double b) {
    return b > 0.0 ? a / b : -1.0;
  };
  j["rms_e_x_ratio_sanm_over_baseline"] =
      ratio(sanm.rms_e_x, baseline.rms_e_x);
  j["rms_psi_R_ratio_sanm_over_baseline"] =
      ratio(sanm.rms_psi_R, baseline.rms_psi_R);
  dump(j, path);
}

}  // namespace multilift
