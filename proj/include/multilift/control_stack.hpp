#pragma once

#include <array>
#include <vector>

#include "multilift/allocation.hpp"
#include "multilift/integrator.hpp"
#include "multilift/payload_control.hpp"
#include "multilift/plant.hpp"
#include "multilift/quadrotor_control.hpp"
#include "multilift/sanm.hpp"
#include "multilift/types.hpp"

namespace multilift {

enum class ControllerVariant {
  baseline,  // fixed reference-model parameters, no neural compensation
  sanm,      // adaptive mass/inertia plus RBF disturbance slices
};

// Per-step values worth logging beyond the held commands.
struct ControlDiagnostics {
  PayloadErrors errors;
  double psi_R = 0.0;
  std::vector<CableErrors> cable_errs;
  std::vector<double> psi_q;
  std::vector<Vec3> q_d;
  Vec3 U_x = Vec3::Zero();
  Vec3 U_R = Vec3::Zero();
  Vec3 phi_x = Vec3::Zero();
  Vec3 phi_R = Vec3::Zero();
  std::vector<double> thrust;
  std::vector<Vec3> quad_moment;
  int compression_count = 0;  // cables commanded to push this step
};

// Evaluates the complete control flow once per step:
// payload errors -> SANM -> wrench -> tension plan -> cable control ->
// quadrotor control, plus the estimator/adaptation rates the integrator holds
// across the step. Owns the finite-difference rate histories, so one instance
// drives exactly one run.
class ControlStack {
 public:
  ControlStack(const SystemParams& plant, const ReferenceModel& ref_model,
               std::vector<double> m_i_ref, std::vector<Mat3> J_i_ref,
               const ControllerGains& gains, const SanmConfig& sanm_cfg,
               ControllerVariant variant, double step_h);

  HeldCommands compute(double t, const AugmentedState& aug,
                       const ReferenceSample& ref,
                       const DisturbanceSample& truth,
                       ControlDiagnostics* diag = nullptr);

  const std::array<Mat2, 3>& lyapunov_P() const { return P_; }
  void reset();

 private:
  SystemParams plant_;
  ReferenceModel ref_model_;
  std::vector<double> m_i_ref_;
  std::vector<Mat3> J_i_ref_;
  ControllerGains gains_;
  SanmConfig sanm_cfg_;
  ControllerVariant variant_;
  double h_;
  TensionPlanner planner_;
  std::array<Mat2, 3> P_;
  std::vector<DirectionRateEstimator> dir_rates_;
  std::vector<AttitudeRateEstimator> att_rates_;
  std::vector<Vec3> held_q_d_;
};

// Horizontal projection of the reference heading, falling back to +x when
// degenerate.
Vec3 default_facing_direction(const Mat3& R_d);

}  // namespace multilift
