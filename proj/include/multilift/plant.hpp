#pragma once

#include <vector>

#include "multilift/types.hpp"

namespace multilift {

// True plant parameters. The reference model used by the controller is a
// separate, usually mismatched, copy (see ReferenceModel).
struct SystemParams {
  int n = 3;                  // number of quadrotors
  double m0 = 1.0;            // payload mass [kg]
  Mat3 J0 = Mat3::Identity(); // payload inertia [kg m^2], SPD
  double g = 9.81;            // gravity [m/s^2]
  std::vector<double> m_i;    // quadrotor masses [kg]
  std::vector<Mat3> J_i;      // quadrotor inertias [kg m^2], SPD
  std::vector<double> l_i;    // cable lengths [m]
  std::vector<Vec3> rho;      // attachment offsets in payload body frame [m]

  // Throws std::invalid_argument on violated invariants (sizes, positivity,
  // SPD inertia tensors).
  void validate() const;
};

struct PayloadState {
  Vec3 x = Vec3::Zero();
  Vec3 v = Vec3::Zero();
  Mat3 R = Mat3::Identity();
  Vec3 Omega = Vec3::Zero();
};

struct CableState {
  Vec3 q = -Vec3::UnitZ();   // unit vector, quadrotor -> attachment point
  Vec3 omega = Vec3::Zero(); // cable angular velocity, tangent to sphere
};

struct QuadrotorState {
  Mat3 R = Mat3::Identity();
  Vec3 Omega = Vec3::Zero();
};

struct SystemState {
  PayloadState payload;
  std::vector<CableState> cables;
  std::vector<QuadrotorState> quads;
};

// External disturbances at one instant. phi_x_extra / phi_R_extra are the
// additional acceleration-level terms beyond what the plant computes itself
// (the payload gyroscopic term is always evaluated explicitly).
struct DisturbanceSample {
  Vec3 force_payload = Vec3::Zero();   // [N]
  Vec3 moment_payload = Vec3::Zero();  // [N m]
  std::vector<Vec3> force_quad;        // [N], size n
  std::vector<Vec3> moment_quad;       // [N m], size n
  Vec3 phi_x_extra = Vec3::Zero();     // [m/s^2]
  Vec3 phi_R_extra = Vec3::Zero();     // [rad/s^2]

  static DisturbanceSample zero(int n);
};

// Control force at one quadrotor split along/normal to its cable.
struct QuadrotorForceCommand {
  Vec3 u = Vec3::Zero();
  Vec3 u_par = Vec3::Zero();
  Vec3 u_perp = Vec3::Zero();
};

struct CableDerivative {
  Vec3 q_dot = Vec3::Zero();
  Vec3 omega_dot = Vec3::Zero();
};

struct QuadrotorDerivative {
  Mat3 R_dot = Mat3::Zero();
  Vec3 Omega_dot = Vec3::Zero();
};

struct StateDerivative {
  Vec3 x_dot = Vec3::Zero();
  Vec3 v_dot = Vec3::Zero();
  Mat3 R_dot = Mat3::Zero();
  Vec3 Omega_dot = Vec3::Zero();
  std::vector<CableDerivative> cables;
  std::vector<QuadrotorDerivative> quads;
};

// mu = (q (x) q) mu_d: actual tension transmitted by a taut rigid cable.
Vec3 project_tension(const Vec3& mu_d, const Vec3& q);

// Acceleration of a payload attachment point, gravity included:
// a = xddot0 + g e3 + R0 hat(Omega0)^2 rho - R0 hat(rho) Omegadot0.
Vec3 connection_acceleration(const Vec3& xddot0, const Mat3& R0,
                             const Vec3& Omega0, const Vec3& Omegadot0,
                             const Vec3& rho, double g);

// Wrench error caused by cables off their planned directions:
// Y_x = (1/m0) sum(mu_i - mu_d_i), Y_R = J0^{-1} sum hat(rho_i) R0^T (mu_i - mu_d_i).
void cable_deviation_terms(const std::vector<Vec3>& mu,
                           const std::vector<Vec3>& mu_d, const Mat3& R0,
                           const std::vector<Vec3>& rho, double m0,
                           const Mat3& J0, Vec3* Y_x, Vec3* Y_R);

// Parallel force component dictated by the taut-cable coupling:
// u_par = mu + m_i l_i ||omega||^2 q + m_i (q (x) q) a.
Vec3 parallel_control(const Vec3& mu, const Vec3& omega, const Vec3& q,
                      const Vec3& a, double m_i, double l_i);

// Payload accelerations under the commanded wrench, planned tensions and
// disturbances. This is the first stage of system_rhs, also needed by the
// cable controller for the connection-point accelerations.
void payload_accelerations(const SystemState& state, const Vec3& F_d,
                           const Vec3& M_d, const std::vector<Vec3>& mu_d,
                           const DisturbanceSample& d, const SystemParams& p,
                           Vec3* v_dot, Vec3* Omega_dot);

// Full coupled right-hand side. Payload accelerations are evaluated first,
// then connection-point accelerations, then cable and quadrotor rates.
// Throws on singular inertia or non-finite output.
StateDerivative system_rhs(const SystemState& state,
                           const std::vector<QuadrotorForceCommand>& u,
                           const std::vector<Vec3>& quad_moments,
                           const Vec3& F_d, const Vec3& M_d,
                           const std::vector<Vec3>& mu_d,
                           const DisturbanceSample& d,
                           const SystemParams& p);

// x_i = x0 + R0 rho - l q (taut massless cable kinematics).
Vec3 reconstruct_quadrotor_position(const Vec3& x0, const Mat3& R0,
                                    const Vec3& rho, const Vec3& q, double l);

}  // namespace multilift
