#include "multilift/control_stack.hpp"

#include <stdexcept>

#include "multilift/so3.hpp"

namespace multilift {

Vec3 default_facing_direction(const Mat3& R_d) {
  Vec3 heading = R_d.col(0);
  heading.z() = 0.0;
  const double norm = heading.norm();
  if (norm < 1e-9) return Vec3::UnitX();
  return heading / norm;
}

ControlStack::ControlStack(const SystemParams& plant,
                           const ReferenceModel& ref_model,
                           std::vector<double> m_i_ref,
                           std::vector<Mat3> J_i_ref,
                           const ControllerGains& gains,
                           const SanmConfig& sanm_cfg,
                           ControllerVariant variant, double step_h)
    : plant_(plant),
      ref_model_(ref_model),
      m_i_ref_(std::move(m_i_ref)),
      J_i_ref_(std::move(J_i_ref)),
      gains_(gains),
      sanm_cfg_(sanm_cfg),
      variant_(variant),
      h_(step_h),
      planner_(plant.rho) {
  plant_.validate();
  gains_.validate();
  sanm_cfg_.validate();
  if (static_cast<int>(m_i_ref_.size()) != plant_.n ||
      static_cast<int>(J_i_ref_.size()) != plant_.n) {
    throw std::invalid_argument("ControlStack: reference arrays must match n");
  }
  if (step_h <= 0.0) {
    throw std::invalid_argument("ControlStack: step must be positive");
  }
  // Constant gains mean the per-axis Lyapunov solves happen once.
  for (int j = 0; j < 3; ++j) {
    const Mat2 Q = gains_.q_lyap(j) * Mat2::Identity();
    P_[j] = solve_lyapunov_2x2(gains_.k_p(j), gains_.k_d(j), Q);
  }
  dir_rates_.resize(plant_.n);
  att_rates_.resize(plant_.n);
  held_q_d_.assign(plant_.n, -Vec3::UnitZ());
}

void ControlStack::reset() {
  for (auto& e : dir_rates_) e.reset();
  for (auto& e : att_rates_) e.reset();
  held_q_d_.assign(plant_.n, -Vec3::UnitZ());
}

HeldCommands ControlStack::compute(double t, const AugmentedState& aug,
                                   const ReferenceSample& ref,
                                   const DisturbanceSample& truth,
                                   ControlDiagnostics* diag) {
  const int n = plant_.n;
  const SystemState& sys = aug.system;
  const Mat3& R0 = sys.payload.R;

  const PayloadErrors errors = payload_errors(sys.payload, ref);
  const bool sanm_on = variant_ == ControllerVariant::sanm;

  // Per-axis disturbance-dynamics estimates from the RBF slices.
  Vec3 phi_x = Vec3::Zero();
  Vec3 phi_R = Vec3::Zero();
  std::array<Eigen::VectorXd, 3> hbar_x, hbar_R;
  for (int j = 0; j < 3; ++j) {
    hbar_x[j] = rbf_activation(Vec2(errors.e_x(j), errors.e_v(j)),
                               sanm_cfg_.trans[j]);
    hbar_R[j] = rbf_activation(Vec2(errors.e_R(j), errors.e_Omega(j)),
                               sanm_cfg_.rot[j]);
    if (sanm_on) {
      phi_x(j) = phi_estimate(aug.sanm.W_x[j], hbar_x[j]);
      phi_R(j) = phi_estimate(aug.sanm.W_R[j], hbar_R[j]);
    }
  }

  const Vec3 m_hat = sanm_on ? aug.sanm.m_hat : Vec3::Constant(ref_model_.m0);
  const Vec3 J_hat = sanm_on ? aug.sanm.J_hat : ref_model_.J0;

  Vec3 U_x, U_R;
  for (int j = 0; j < 3; ++j) {
    U_x(j) = translational_law(j, errors, ref, m_hat(j), phi_x(j), gains_,
                               plant_.g);
    U_R(j) = rotational_law(j, errors, sys.payload, ref, J_hat(j), phi_R(j),
                            gains_);
  }

  const WrenchCommand wrench =
      assemble_wrench(U_x, U_R, aug.estimator, sys.cables, R0, plant_.rho);

  HeldCommands held;
  held.F_d = wrench.force;
  held.M_d = wrench.moment;
  held.mu_d = planner_.plan(wrench.force, wrench.moment, R0).mu_d;
  held.u.resize(n);
  held.quad_moments.resize(n);

  // Plant-side payload accelerations; the connection-point acceleration in
  // Eqs. for u_par / u_perp is a coupling quantity, not a designed signal.
  Vec3 v_dot, Omega_dot;
  payload_accelerations(sys, wrench.force, wrench.moment, held.mu_d, truth,
                        plant_, &v_dot, &Omega_dot);

  if (diag) {
    diag->errors = errors;
    diag->psi_R = psi_rotation(R0, ref.R_d);
    diag->cable_errs.resize(n);
    diag->psi_q.resize(n);
    diag->q_d.resize(n);
    diag->U_x = U_x;
    diag->U_R = U_R;
    diag->phi_x = phi_x;
    diag->phi_R = phi_R;
    diag->thrust.resize(n);
    diag->quad_moment.resize(n);
    diag->compression_count = 0;
  }

  std::vector<CableErrors> cable_errs(n);
  const Vec3 b1d = default_facing_direction(ref.R_d);
  for (int i = 0; i < n; ++i) {
    const Vec3& q = sys.cables[i].q;
    const Vec3& omega = sys.cables[i].omega;

    Vec3 q_d = held_q_d_[i];
    try {
      q_d = desired_cable_direction(held.mu_d[i]);
      held_q_d_[i] = q_d;
    } catch (const std::runtime_error&) {
      // Tension below floor: hold the previous direction.
    }
    const auto rates = dir_rates_[i].push(q_d, h_);

    cable_errs[i] = cable_errors(q, omega, q_d, rates.omega_d);
    const Vec3 a_i = connection_acceleration(v_dot, R0, sys.payload.Omega,
                                             Omega_dot, plant_.rho[i],
                                             plant_.g);
    const Vec3 q_dot = omega.cross(q);
    const Vec3 u_perp =
        normal_control(q, q_dot, cable_errs[i], rates.omega_d,
                       rates.omegadot_d, a_i, aug.estimator.delta_xi[i],
                       m_i_ref_[i], plant_.l_i[i], gains_.k_q, gains_.k_omega);
    const Vec3 mu = project_tension(held.mu_d[i], q);
    const Vec3 u_par =
        parallel_control(mu, omega, q, a_i, m_i_ref_[i], plant_.l_i[i]);
    held.u[i] = compose_quadrotor_force(u_par, u_perp, q);

    AttitudeCommand cmd;
    cmd.b1d = b1d;
    cmd.R_c = desired_attitude(held.u[i].u, b1d);
    const auto att = att_rates_[i].push(cmd.R_c, h_);
    cmd.Omega_c = att.Omega_c;
    cmd.Omegadot_c = att.Omegadot_c;
    const RotorCommand rotor = thrust_moment(held.u[i].u, sys.quads[i], cmd,
                                             J_i_ref_[i], gains_.k_Ri,
                                             gains_.k_Omegai);
    held.quad_moments[i] = rotor.M;

    if (diag) {
      diag->cable_errs[i] = cable_errs[i];
      diag->psi_q[i] = psi_direction(q, q_d);
      diag->q_d[i] = q_d;
      diag->thrust[i] = rotor.f;
      diag->quad_moment[i] = rotor.M;
      if (held.mu_d[i].dot(q_d) > 0.0) ++diag->compression_count;
    }
  }

  held.estimator_rates =
      integral_rates(errors, sys.cables, cable_errs, gains_, P_, R0,
                     plant_.rho, ref_model_, m_i_ref_, plant_.l_i);

  held.sanm_rates = SanmRates::zero(sanm_cfg_);
  if (sanm_on) {
    const Vec2 B(0.0, 1.0);
    for (int j = 0; j < 3; ++j) {
      const Vec2 E(errors.e_x(j), errors.e_v(j));
      const double sigma = E.dot(P_[j] * B) * U_x(j);
      const double tau =
          (errors.e_Omega(j) + sanm_cfg_.c_R * errors.e_R(j)) * U_R(j);
      held.sanm_rates.m_rate(j) =
          mass_rate(aug.sanm.m_hat(j), sanm_cfg_.s_m(j), sigma,
                    sanm_cfg_.eta_m, sanm_cfg_.m0_max);
      held.sanm_rates.J_rate(j) =
          inertia_rate(aug.sanm.J_hat(j), sanm_cfg_.s_J(j), tau,
                       sanm_cfg_.eta_J, sanm_cfg_.J0_max(j));
      held.sanm_rates.W_x_rate[j] = weight_rate_translational(
          E, P_[j], hbar_x[j], sanm_cfg_.trans[j].gamma);
      held.sanm_rates.W_R_rate[j] = weight_rate_rotational(
          errors.e_R(j), errors.e_Omega(j), hbar_R[j], sanm_cfg_.rot[j].gamma,
          sanm_cfg_.c_R);
    }
  }
  return held;
}

}  // namespace multilift
