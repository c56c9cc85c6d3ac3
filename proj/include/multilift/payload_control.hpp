#pragma once

#include <array>
#include <vector>

#include "multilift/allocation.hpp"
#include "multilift/plant.hpp"
#include "multilift/types.hpp"

namespace multilift {

struct PayloadErrors {
  Vec3 e_x = Vec3::Zero();      // position error [m]
  Vec3 e_v = Vec3::Zero();      // velocity error [m/s]
  Vec3 e_R = Vec3::Zero();      // attitude error (||.|| <= 1)
  Vec3 e_Omega = Vec3::Zero();  // angular velocity error [rad/s]
};

struct ControllerGains {
  Vec3 k_p = Vec3(20.0, 20.0, 1000.0);
  Vec3 k_d = Vec3(10.0, 10.0, 200.0);
  double k_R0 = 20.0;
  double k_Omega0 = 10.0;
  double c_R = 0.1;
  double c_q = 0.01;
  double h_x0 = 1.0;
  double h_R0 = 0.1;
  double h_xi = 0.1;
  double k_q = 4.0;
  double k_omega = 4.0;
  double k_Ri = 1.0;
  double k_Omegai = 1.0;
  // Q_j = q_lyap[j] * I in the per-axis Lyapunov solves.
  Vec3 q_lyap = Vec3(1.0 / 20.0, 1.0 / 20.0, 1.0);

  // Positivity plus the c_R smallness bound
  // c_R < min{k_R0 k_Omega0 / (k_Omega0^2 + k_R0), k_Omega0}.
  // Violations are configuration errors, not runtime clamps.
  void validate() const;
};

struct ReferenceSample {
  Vec3 x_d = Vec3::Zero();
  Vec3 v_d = Vec3::Zero();
  Vec3 a_d = Vec3::Zero();
  Mat3 R_d = Mat3::Identity();
  Vec3 Omega_d = Vec3::Zero();
  Vec3 Omegadot_d = Vec3::Zero();
};

// Controller-side reference model of the payload (primed quantities).
struct ReferenceModel {
  double m0 = 1.0;                        // [kg]
  Vec3 J0 = Vec3(0.125, 0.125, 1.0 / 6.0);  // diagonal [kg m^2]
};

// Integral disturbance estimates, all initialized to zero.
struct EstimatorState {
  Vec3 delta_x0 = Vec3::Zero();   // [N]
  Vec3 delta_R0 = Vec3::Zero();   // [N m]
  std::vector<Vec3> delta_xi;     // [N], size n

  static EstimatorState zero(int n);
};

struct EstimatorRates {
  Vec3 delta_x0 = Vec3::Zero();
  Vec3 delta_R0 = Vec3::Zero();
  std::vector<Vec3> delta_xi;

  static EstimatorRates zero(int n);
};

struct WrenchCommand {
  Vec3 force = Vec3::Zero();   // F_d [N]
  Vec3 moment = Vec3::Zero();  // M_d [N m]
};

PayloadErrors payload_errors(const PayloadState& state,
                             const ReferenceSample& ref);

// U_x[j] = m_hat_j (-k_p[j] e_x[j] - k_d[j] e_v[j] + a_d[j] + g delta_j3 - phi_x_j),
// j in {0,1,2}.
double translational_law(int j, const PayloadErrors& errors,
                         const ReferenceSample& ref, double m_hat_j,
                         double phi_x_j, const ControllerGains& gains,
                         double g);

// U_R[j] = J_hat_j {-k_R0 e_R[j] - k_Omega0 e_Omega[j]
//                   - (hat(Omega0) R0^T R_d Omega_d)[j]
//                   + (R0^T R_d Omegadot_d)[j] - phi_R_j}.
double rotational_law(int j, const PayloadErrors& errors,
                      const PayloadState& state, const ReferenceSample& ref,
                      double J_hat_j, double phi_R_j,
                      const ControllerGains& gains);

// F_d = U_x - delta_x0 - sum delta_par_xi,
// M_d = U_R - delta_R0 - sum hat(rho_i) R0^T delta_par_xi,
// with delta_par_xi = (q_i (x) q_i) delta_xi.
WrenchCommand assemble_wrench(const Vec3& U_x, const Vec3& U_R,
                              const EstimatorState& est,
                              const std::vector<CableState>& cables,
                              const Mat3& R0, const std::vector<Vec3>& rho);

// Lyapunov-derived integral estimator rates:
// delta_x0'[j] = (h_x0/m0') E_xj^T P_j B,  delta_R0'[j] = (h_R0/J0'[j]) e_Omega[j],
// delta_xi'    = h_xi (q (x) q){ vec_j((1/m0') E_xj^T P_j B)
//                - diag(1/J0') R0 hat(rho_i) e_Omega
//                + (h_xi/(m_i l_i)) hat(q)(e_omega + c_q e_q) }.
EstimatorRates integral_rates(const PayloadErrors& errors,
                              const std::vector<CableState>& cables,
                              const std::vector<CableErrors>& cable_errs,
                              const ControllerGains& gains,
                              const std::array<Mat2, 3>& P, const Mat3& R0,
                              const std::vector<Vec3>& rho,
                              const ReferenceModel& ref_model,
                              const std::vector<double>& m_i,
                              const std::vector<double>& l_i);

}  // namespace multilift
