#include "multilift/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "multilift/so3.hpp"

namespace multilift {

std::string to_string(Group g) {
  switch (g) {
    case Group::A: return "A";
    case Group::B: return "B";
    case Group::C: return "C";
    case Group::D: return "D";
    case Group::E: return "E";
    case Group::F: return "F";
    case Group::custom: return "custom";
  }
  return "?";
}

std::string to_string(ControllerVariant v) {
  return v == ControllerVariant::baseline ? "baseline" : "sanm";
}

Group group_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Group::A;
  if (s == "B" || s == "b") return Group::B;
  if (s == "C" || s == "c") return Group::C;
  if (s == "D" || s == "d") return Group::D;
  if (s == "E" || s == "e") return Group::E;
  if (s == "F" || s == "f") return Group::F;
  if (s == "custom") return Group::custom;
  throw std::invalid_argument("unknown group '" + s + "'");
}

ControllerVariant variant_from_string(const std::string& s) {
  if (s == "baseline") return ControllerVariant::baseline;
  if (s == "sanm") return ControllerVariant::sanm;
  throw std::invalid_argument("unknown controller '" + s + "'");
}

void ScenarioConfig::rebuild_geometry() {
  plant.n = n;
  plant.rho.resize(n);
  plant.l_i.assign(n, cable_length);
  plant.m_i.assign(n, quad_mass);
  plant.J_i.assign(n, quad_J_diag.asDiagonal());
  for (int i = 0; i < n; ++i) {
    const double angle = 2.0 * M_PI * i / n;
    plant.rho[i] =
        attach_radius * Vec3(std::cos(angle), std::sin(angle), 0.0);
  }
}

void ScenarioConfig::validate() const {
  plant.validate();
  gains.validate();
  sanm.validate();
  integrator.validate();
  if (log_stride < 1) {
    throw std::invalid_argument("ScenarioConfig: log_stride must be >= 1");
  }
  if (window.t_start > window.t_end) {
    throw std::invalid_argument("ScenarioConfig: metrics window inverted");
  }
  if (std::abs(sanm.c_R - gains.c_R) > 0.0) {
    throw std::invalid_argument(
        "ScenarioConfig: sanm.c_R and gains.c_R must agree");
  }
  if (divergence_norm <= 0.0) {
    throw std::invalid_argument("ScenarioConfig: divergence_norm must be > 0");
  }
}

ScenarioConfig default_config(Group g, ControllerVariant v) {
  ScenarioConfig cfg;
  cfg.group = g;
  cfg.controller = v;
  cfg.plant.m0 = 1.0;
  cfg.plant.J0 = Vec3(0.125, 0.125, 1.0 / 6.0).asDiagonal();
  cfg.plant.g = 9.81;
  cfg.rebuild_geometry();
  cfg.sanm = default_sanm_config();
  cfg.sanm.c_R = cfg.gains.c_R;

  const bool heavy_plant = g != Group::A && g != Group::custom;
  if (heavy_plant) {
    cfg.plant.m0 = 5.0;
    cfg.plant.J0 = Vec3(0.688, 0.594, 0.783).asDiagonal();
  }

  cfg.trajectory.kind = TrajectoryKind::circle;
  cfg.attitude.mode = AttitudeMode::facing;
  switch (g) {
    case Group::A:
    case Group::custom:
      break;
    case Group::B:
      cfg.disturbance.payload_force = true;
      cfg.disturbance.quad_disturbances = true;
      break;
    case Group::C:
      cfg.disturbance.payload_moment = true;
      cfg.disturbance.quad_disturbances = true;
      break;
    case Group::D:
      cfg.disturbance.payload_force = true;
      cfg.disturbance.quad_disturbances = true;
      cfg.trajectory.kind = TrajectoryKind::helix;
      cfg.attitude.mode = AttitudeMode::fixed;
      break;
    case Group::E:
      cfg.disturbance.payload_force = true;
      cfg.disturbance.quad_disturbances = true;
      cfg.trajectory.kind = TrajectoryKind::tilted_circle;
      cfg.attitude.mode = AttitudeMode::fixed;
      break;
    case Group::F:
      cfg.disturbance.payload_force = true;
      cfg.disturbance.quad_disturbances = true;
      cfg.trajectory.kind = TrajectoryKind::smoothed_square;
      cfg.attitude.mode = AttitudeMode::fixed;
      break;
  }
  return cfg;
}

SystemState initial_state(const ScenarioConfig& cfg) {
  // Zero tracking error at t = 0: the payload starts on the reference with
  // matched velocity and angular rate, cables vertical, quadrotors level.
  const ReferenceSample ref =
      make_reference(0.0, cfg.trajectory, cfg.attitude);
  SystemState s;
  s.payload.x = ref.x_d;
  s.payload.v = ref.v_d;
  s.payload.R = ref.R_d;
  s.payload.Omega = ref.Omega_d;
  s.cables.assign(cfg.n, CableState{});
  s.quads.assign(cfg.n, QuadrotorState{});
  return s;
}

int CsvSchema::index(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  return it == columns.end() ? -1
                             : static_cast<int>(it - columns.begin());
}

namespace {

// Emits either column names or values, so the schema and the rows can never
// drift apart.
class RecordEmitter {
 public:
  explicit RecordEmitter(CsvSchema* schema) : schema_(schema) {}
  explicit RecordEmitter(std::vector<double>* row) : row_(row) {}

  void scalar(const std::string& name, double value) {
    if (schema_) {
      schema_->columns.push_back(name);
    } else {
      row_->push_back(value);
    }
  }
  void vec3(const std::string& base, const Vec3& v) {
    scalar(base + "_x", v.x());
    scalar(base + "_y", v.y());
    scalar(base + "_z", v.z());
  }
  void mat3(const std::string& base, const Mat3& m) {
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        scalar(base + "_" + std::to_string(r + 1) + std::to_string(c + 1),
               m(r, c));
  }

 private:
  CsvSchema* schema_ = nullptr;
  std::vector<double>* row_ = nullptr;
};

void emit_record(RecordEmitter& e, int n, double t, const AugmentedState& aug,
                 const ControlDiagnostics& diag, const HeldCommands& held,
                 const DisturbanceSample& dist) {
  e.scalar("t", t);
  e.vec3("x0", aug.system.payload.x);
  e.vec3("v0", aug.system.payload.v);
  e.mat3("R0", aug.system.payload.R);
  e.vec3("Om0", aug.system.payload.Omega);
  e.vec3("e_x", diag.errors.e_x);
  e.vec3("e_v", diag.errors.e_v);
  e.vec3("e_R", diag.errors.e_R);
  e.vec3("e_Om", diag.errors.e_Omega);
  e.scalar("psi_R", diag.psi_R);
  for (int i = 0; i < n; ++i) {
    const std::string k = std::to_string(i + 1);
    e.vec3("q" + k, aug.system.cables[i].q);
    e.vec3("e_q" + k, diag.cable_errs[i].e_q);
    e.vec3("e_om" + k, diag.cable_errs[i].e_omega);
    e.scalar("psi_q" + k, diag.psi_q[i]);
  }
  e.vec3("m_hat", aug.sanm.m_hat);
  e.vec3("J_hat", aug.sanm.J_hat);
  e.vec3("phi_x", diag.phi_x);
  e.vec3("phi_R", diag.phi_R);
  e.vec3("dhat_x0", aug.estimator.delta_x0);
  e.vec3("dhat_R0", aug.estimator.delta_R0);
  for (int i = 0; i < n; ++i) {
    e.vec3("dhat_x" + std::to_string(i + 1), aug.estimator.delta_xi[i]);
  }
  e.vec3("F_d", held.F_d);
  e.vec3("M_d", held.M_d);
  for (int i = 0; i < n; ++i) {
    const std::string k = std::to_string(i + 1);
    e.vec3("mu_d" + k, held.mu_d[i]);
    e.scalar("f" + k, diag.thrust[i]);
    e.vec3("M" + k, diag.quad_moment[i]);
  }
  e.vec3("dist_F", dist.force_payload);
  e.vec3("dist_M", dist.moment_payload);
}

struct DummyRecord {
  AugmentedState aug;
  ControlDiagnostics diag;
  HeldCommands held;
  DisturbanceSample dist;
};

DummyRecord make_dummy(int n) {
  DummyRecord d;
  d.aug.system.cables.resize(n);
  d.aug.system.quads.resize(n);
  d.aug.estimator = EstimatorState::zero(n);
  d.aug.sanm = SanmState::initial(1.0, Vec3::Ones(), default_sanm_config());
  d.diag.cable_errs.resize(n);
  d.diag.psi_q.assign(n, 0.0);
  d.diag.q_d.assign(n, Vec3::Zero());
  d.diag.thrust.assign(n, 0.0);
  d.diag.quad_moment.assign(n, Vec3::Zero());
  d.held.mu_d.assign(n, Vec3::Zero());
  d.held.u.resize(n);
  d.held.quad_moments.assign(n, Vec3::Zero());
  d.dist = DisturbanceSample::zero(n);
  return d;
}

// Settling detector: records the last time the quantity exceeded its
// threshold; settled means it stayed below from then on.
struct SettleTracker {
  double threshold;
  double last_above = -1.0;
  bool ever_above = false;

  void update(double t, double value) {
    if (value >= threshold) {
      last_above = t;
      ever_above = true;
    }
  }
  double settle_time(double t_final, double h) const {
    if (!ever_above) return 0.0;
    if (last_above >= t_final) return -1.0;
    return last_above + h;
  }
};

}  // namespace

CsvSchema log_schema(int n) {
  CsvSchema schema;
  RecordEmitter emitter(&schema);
  const DummyRecord d = make_dummy(n);
  emit_record(emitter, n, 0.0, d.aug, d.diag, d.held, d.dist);
  return schema;
}

RunResult run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  const auto t0_wall = std::chrono::steady_clock::now();
  const int n = cfg.n;
  const double h = cfg.integrator.h;
  const long steps = std::lround(cfg.integrator.duration / h);

  ControlStack stack(cfg.plant, cfg.ref_model,
                     std::vector<double>(n, cfg.quad_mass),
                     std::vector<Mat3>(n, Mat3(cfg.quad_J_diag.asDiagonal())),
                     cfg.gains, cfg.sanm, cfg.controller, h);

  AugmentedState aug;
  aug.system = initial_state(cfg);
  aug.estimator = EstimatorState::zero(n);
  aug.sanm = SanmState::initial(cfg.ref_model.m0, cfg.ref_model.J0, cfg.sanm);

  RunResult result;
  result.log.h = h;
  result.log.schema = log_schema(n);
  result.log.rows.reserve(steps / cfg.log_stride + 1);

  Metrics& m = result.metrics;
  double sum_ex2 = 0.0, sum_psi2 = 0.0;
  long window_count = 0;
  SettleTracker settle_ex{0.05};
  SettleTracker settle_psi{0.01};
  const Vec3 J0_true_diag = cfg.plant.J0.diagonal();
  double t = 0.0;

  for (long k = 0; k < steps; ++k) {
    t = k * h;
    const ReferenceSample ref = make_reference(t, cfg.trajectory, cfg.attitude);
    const DisturbanceSample dist_now =
        sample_disturbance(t, cfg.disturbance, n);

    ControlDiagnostics diag;
    HeldCommands held;
    const ControlFn control_fn = [&](double tc, const AugmentedState& a) {
      held = stack.compute(tc, a, ref, sample_disturbance(tc, cfg.disturbance, n),
                           &diag);
      return held;
    };
    const DisturbanceFn dist_fn = [&](double ts) {
      return sample_disturbance(ts, cfg.disturbance, n);
    };

    AugmentedState next;
    try {
      next = step_system(aug, t, cfg.plant, cfg.sanm, cfg.integrator,
                         control_fn, dist_fn);
    } catch (const std::exception& ex) {
      m.diverged = true;
      m.failure_reason = ex.what();
      break;
    }

    // Log and accumulate with the commands applied over [t, t+h).
    if (k % cfg.log_stride == 0) {
      std::vector<double> row;
      RecordEmitter emitter(&row);
      emit_record(emitter, n, t, aug, diag, held, dist_now);
      result.log.rows.push_back(std::move(row));
    }

    const double e_x_norm = diag.errors.e_x.norm();
    if (t >= cfg.window.t_start && t <= cfg.window.t_end) {
      sum_ex2 += e_x_norm * e_x_norm;
      sum_psi2 += diag.psi_R * diag.psi_R;
      m.max_e_x = std::max(m.max_e_x, e_x_norm);
      m.max_psi_R = std::max(m.max_psi_R, diag.psi_R);
      ++window_count;
    }
    settle_ex.update(t, e_x_norm);
    settle_psi.update(t, diag.psi_R);
    m.compression_steps += diag.compression_count;
    m.m_hat_max = std::max(m.m_hat_max, next.sanm.m_hat.maxCoeff());
    for (int j = 0; j < 3; ++j) {
      m.recip_mass_err_max =
          std::max(m.recip_mass_err_max,
                   std::abs(1.0 / cfg.plant.m0 - 1.0 / next.sanm.m_hat(j)));
      m.recip_inertia_err_max =
          std::max(m.recip_inertia_err_max,
                   std::abs(1.0 / J0_true_diag(j) - 1.0 / next.sanm.J_hat(j)));
    }
    for (int i = 0; i < n; ++i) {
      m.max_cable_norm_err =
          std::max(m.max_cable_norm_err,
                   std::abs(next.system.cables[i].q.norm() - 1.0));
      m.max_tangency_err =
          std::max(m.max_tangency_err,
                   std::abs(next.system.cables[i].q.dot(
                       next.system.cables[i].omega)));
    }

    aug = next;
    ++m.steps;
    if (pack_state(aug).cwiseAbs().maxCoeff() > cfg.divergence_norm) {
      m.diverged = true;
      m.failure_reason = "state norm exceeded divergence bound";
      break;
    }
  }

  // t is the last control instant that was processed (= last valid time on
  // failure); a completed run ends at steps * h.
  m.t_end = m.diverged ? t : steps * h;
  if (window_count > 0) {
    m.rms_e_x = std::sqrt(sum_ex2 / window_count);
    m.rms_psi_R = std::sqrt(sum_psi2 / window_count);
  }
  m.settle_time_e_x = settle_ex.settle_time(t, h);
  m.settle_time_psi_R = settle_psi.settle_time(t, h);
  m.m_hat_final = aug.sanm.m_hat;
  m.J_hat_final = aug.sanm.J_hat;

  const auto check_rotation = [&](const Mat3& R) {
    m.max_rotation_orthogonality_err =
        std::max(m.max_rotation_orthogonality_err,
                 (R.transpose() * R - Mat3::Identity()).norm());
    m.max_rotation_det_err =
        std::max(m.max_rotation_det_err, std::abs(R.determinant() - 1.0));
  };
  check_rotation(aug.system.payload.R);
  for (const auto& quad : aug.system.quads) check_rotation(quad.R);

  result.final_state = aug;
  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_wall)
          .count();
  return result;
}

}  // namespace multilift
