#include "multilift/payload_control.hpp"

#include <algorithm>
#include <stdexcept>

#include "multilift/so3.hpp"

namespace multilift {

void ControllerGains::validate() const {
  const bool positive =
      (k_p.array() > 0.0).all() && (k_d.array() > 0.0).all() && k_R0 > 0.0 &&
      k_Omega0 > 0.0 && c_R > 0.0 && c_q > 0.0 && h_x0 > 0.0 && h_R0 > 0.0 &&
      h_xi > 0.0 && k_q > 0.0 && k_omega > 0.0 && k_Ri > 0.0 &&
      k_Omegai > 0.0 && (q_lyap.array() > 0.0).all();
  if (!positive) {
    throw std::invalid_argument("ControllerGains: all gains must be positive");
  }
  const double c_R_bound =
      std::min(k_R0 * k_Omega0 / (k_Omega0 * k_Omega0 + k_R0), k_Omega0);
  if (c_R >= c_R_bound) {
    throw std::invalid_argument(
        "ControllerGains: c_R violates the stability bound "
        "c_R < min{k_R0 k_O0/(k_O0^2 + k_R0), k_O0}");
  }
}

EstimatorState EstimatorState::zero(int n) {
  EstimatorState s;
  s.delta_xi.assign(n, Vec3::Zero());
  return s;
}

EstimatorRates EstimatorRates::zero(int n) {
  EstimatorRates r;
  r.delta_xi.assign(n, Vec3::Zero());
  return r;
}

PayloadErrors payload_errors(const PayloadState& state,
                             const ReferenceSample& ref) {
  PayloadErrors e;
  e.e_x = state.x - ref.x_d;
  e.e_v = state.v - ref.v_d;
  e.e_R = attitude_error(state.R, ref.R_d);
  e.e_Omega = angular_velocity_error(state.Omega, state.R, ref.R_d,
                                     ref.Omega_d);
  return e;
}

double translational_law(int j, const PayloadErrors& errors,
                         const ReferenceSample& ref, double m_hat_j,
                         double phi_x_j, const ControllerGains& gains,
                         double g) {
  const double gravity_ff = (j == 2) ? g : 0.0;
  return m_hat_j * (-gains.k_p(j) * errors.e_x(j) -
                    gains.k_d(j) * errors.e_v(j) + ref.a_d(j) + gravity_ff -
                    phi_x_j);
}

double rotational_law(int j, const PayloadErrors& errors,
                      const PayloadState& state, const ReferenceSample& ref,
                      double J_hat_j, double phi_R_j,
                      const ControllerGains& gains) {
  const Mat3 RtRd = state.R.transpose() * ref.R_d;
  const Vec3 gyro_ff = hat(state.Omega) * (RtRd * ref.Omega_d);
  const Vec3 accel_ff = RtRd * ref.Omegadot_d;
  return J_hat_j * (-gains.k_R0 * errors.e_R(j) -
                    gains.k_Omega0 * errors.e_Omega(j) - gyro_ff(j) +
                    accel_ff(j) - phi_R_j);
}

WrenchCommand assemble_wrench(const Vec3& U_x, const Vec3& U_R,
                              const EstimatorState& est,
                              const std::vector<CableState>& cables,
                              const Mat3& R0, const std::vector<Vec3>& rho) {
  if (est.delta_xi.size() != cables.size() || cables.size() != rho.size()) {
    throw std::invalid_argument("assemble_wrench: array sizes differ");
  }
  WrenchCommand w;
  w.force = U_x - est.delta_x0;
  w.moment = U_R - est.delta_R0;
  for (size_t i = 0; i < cables.size(); ++i) {
    const Vec3 delta_par = project_tension(est.delta_xi[i], cables[i].q);
    w.force -= delta_par;
    w.moment -= hat(rho[i]) * (R0.transpose() * delta_par);
  }
  return w;
}

EstimatorRates integral_rates(const PayloadErrors& errors,
                              const std::vector<CableState>& cables,
                              const std::vector<CableErrors>& cable_errs,
                              const ControllerGains& gains,
                              const std::array<Mat2, 3>& P, const Mat3& R0,
                              const std::vector<Vec3>& rho,
                              const ReferenceModel& ref_model,
                              const std::vector<double>& m_i,
                              const std::vector<double>& l_i) {
  const int n = static_cast<int>(cables.size());
  if (static_cast<int>(cable_errs.size()) != n ||
      static_cast<int>(rho.size()) != n ||
      static_cast<int>(m_i.size()) != n ||
      static_cast<int>(l_i.size()) != n) {
    throw std::invalid_argument("integral_rates: array sizes differ");
  }
  EstimatorRates rates = EstimatorRates::zero(n);
  const Vec2 B(0.0, 1.0);

  Vec3 epb;  // per-axis E_xj^T P_j B
  for (int j = 0; j < 3; ++j) {
    const Vec2 E(errors.e_x(j), errors.e_v(j));
    epb(j) = E.dot(P[j] * B);
    rates.delta_x0(j) = gains.h_x0 / ref_model.m0 * epb(j);
    rates.delta_R0(j) = gains.h_R0 / ref_model.J0(j) * errors.e_Omega(j);
  }

  const Vec3 J0_ref_inv = ref_model.J0.cwiseInverse();
  for (int i = 0; i < n; ++i) {
    const Vec3& q = cables[i].q;
    const Vec3 bracket =
        epb / ref_model.m0 -
        J0_ref_inv.asDiagonal() * (R0 * (hat(rho[i]) * errors.e_Omega)) +
        gains.h_xi / (m_i[i] * l_i[i]) *
            (hat(q) * (cable_errs[i].e_omega + gains.c_q * cable_errs[i].e_q));
    rates.delta_xi[i] = gains.h_xi * project_tension(bracket, q);
  }
  return rates;
}

}  // namespace multilift
