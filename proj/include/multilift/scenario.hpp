#pragma once

#include <string>
#include <vector>

#include "multilift/control_stack.hpp"
#include "multilift/disturbance.hpp"
#include "multilift/integrator.hpp"
#include "multilift/trajectory.hpp"

namespace multilift {

enum class Group { A, B, C, D, E, F, custom };

std::string to_string(Group g);
std::string to_string(ControllerVariant v);
Group group_from_string(const std::string& s);
ControllerVariant variant_from_string(const std::string& s);

struct MetricsWindow {
  double t_start = 10.0;
  double t_end = 50.0;
};

struct ScenarioConfig {
  Group group = Group::A;
  ControllerVariant controller = ControllerVariant::sanm;

  // Attachment geometry: n points on a ring of attach_radius in the payload
  // frame, all cables the same length. rebuild_geometry() propagates these
  // into the plant arrays.
  int n = 3;
  double attach_radius = 0.5;
  double cable_length = 1.0;
  double quad_mass = 1.0;
  Vec3 quad_J_diag = Vec3(0.04, 0.04, 0.08);

  SystemParams plant;       // true plant
  ReferenceModel ref_model; // controller-side payload model
  ControllerGains gains;
  SanmConfig sanm;
  IntegratorConfig integrator;
  TrajectorySpec trajectory;
  AttitudeSpec attitude;
  DisturbanceSpec disturbance;
  MetricsWindow window;
  int log_stride = 1;
  double divergence_norm = 1e6;

  void rebuild_geometry();
  void validate() const;
};

// Paper-parameterized presets for the six comparison groups.
ScenarioConfig default_config(Group g, ControllerVariant v);

// Payload at the reference pose at rest, cables vertical, quadrotors level.
SystemState initial_state(const ScenarioConfig& cfg);

// Column-oriented log; the schema is fixed for a given n (documented in the
// README as schema version 1).
struct CsvSchema {
  std::vector<std::string> columns;
  int index(const std::string& name) const;  // -1 when absent
};

struct TimeSeriesLog {
  double h = 0.0;
  CsvSchema schema;
  std::vector<std::vector<double>> rows;
};

CsvSchema log_schema(int n);

struct Metrics {
  double rms_e_x = 0.0;
  double max_e_x = 0.0;
  double rms_psi_R = 0.0;
  double max_psi_R = 0.0;
  double settle_time_e_x = -1.0;   // first time ||e_x|| stays below 0.05 m
  double settle_time_psi_R = -1.0; // first time Psi_R stays below 0.01
  Vec3 m_hat_final = Vec3::Zero();
  Vec3 J_hat_final = Vec3::Zero();
  double m_hat_max = 0.0;
  double recip_mass_err_max = 0.0;    // max |1/m0 - 1/m_hat|
  double recip_inertia_err_max = 0.0; // max |1/J0 - 1/J_hat|
  long compression_steps = 0;
  double max_rotation_orthogonality_err = 0.0;  // end-state, all rotations
  double max_rotation_det_err = 0.0;
  double max_cable_norm_err = 0.0;  // over the whole run, post-projection
  double max_tangency_err = 0.0;
  long steps = 0;
  bool diverged = false;
  std::string failure_reason;
  double t_end = 0.0;
};

struct RunResult {
  TimeSeriesLog log;
  Metrics metrics;
  AugmentedState final_state;
  double wall_time_s = 0.0;  // informational; excluded from Metrics so that
                             // identical configs yield identical Metrics
};

RunResult run_scenario(const ScenarioConfig& cfg);

}  // namespace multilift
