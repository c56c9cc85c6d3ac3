#include "multilift/plant.hpp"

#include <stdexcept>

#include "multilift/so3.hpp"

namespace multilift {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

bool is_spd(const Mat3& M) {
  if ((M - M.transpose()).norm() > 1e-9 * (1.0 + M.norm())) return false;
  Eigen::LLT<Mat3> llt(M);
  return llt.info() == Eigen::Success;
}

Mat3 spd_inverse(const Mat3& M, const char* what) {
  if (!is_spd(M)) throw std::invalid_argument(what);
  return M.inverse();
}

}  // namespace

void SystemParams::validate() const {
  require(n >= 1, "SystemParams: n must be >= 1");
  require(m0 > 0.0, "SystemParams: payload mass must be positive");
  require(g > 0.0, "SystemParams: gravity must be positive");
  require(is_spd(J0), "SystemParams: J0 must be symmetric positive-definite");
  require(static_cast<int>(m_i.size()) == n &&
              static_cast<int>(J_i.size()) == n &&
              static_cast<int>(l_i.size()) == n &&
              static_cast<int>(rho.size()) == n,
          "SystemParams: per-quadrotor arrays must have length n");
  for (int i = 0; i < n; ++i) {
    require(m_i[i] > 0.0, "SystemParams: quadrotor mass must be positive");
    require(l_i[i] > 0.0, "SystemParams: cable length must be positive");
    require(is_spd(J_i[i]),
            "SystemParams: J_i must be symmetric positive-definite");
    require(all_finite(rho[i]), "SystemParams: rho must be finite");
  }
}

DisturbanceSample DisturbanceSample::zero(int n) {
  DisturbanceSample d;
  d.force_quad.assign(n, Vec3::Zero());
  d.moment_quad.assign(n, Vec3::Zero());
  return d;
}

Vec3 project_tension(const Vec3& mu_d, const Vec3& q) {
  return q * q.dot(mu_d);
}

Vec3 connection_acceleration(const Vec3& xddot0, const Mat3& R0,
                             const Vec3& Omega0, const Vec3& Omegadot0,
                             const Vec3& rho, double g) {
  const Mat3 Om = hat(Omega0);
  return xddot0 + g * Vec3::UnitZ() + R0 * (Om * Om * rho) -
         R0 * (hat(rho) * Omegadot0);
}

void cable_deviation_terms(const std::vector<Vec3>& mu,
                           const std::vector<Vec3>& mu_d, const Mat3& R0,
                           const std::vector<Vec3>& rho, double m0,
                           const Mat3& J0, Vec3* Y_x, Vec3* Y_R) {
  require(mu.size() == mu_d.size() && mu.size() == rho.size(),
          "cable_deviation_terms: array sizes differ");
  const Mat3 J0_inv = spd_inverse(J0, "cable_deviation_terms: singular J0");
  Vec3 force_sum = Vec3::Zero();
  Vec3 moment_sum = Vec3::Zero();
  for (size_t i = 0; i < mu.size(); ++i) {
    const Vec3 diff = mu[i] - mu_d[i];
    force_sum += diff;
    moment_sum += hat(rho[i]) * (R0.transpose() * diff);
  }
  *Y_x = force_sum / m0;
  *Y_R = J0_inv * moment_sum;
}

Vec3 parallel_control(const Vec3& mu, const Vec3& omega, const Vec3& q,
                      const Vec3& a, double m_i, double l_i) {
  return mu + m_i * l_i * omega.squaredNorm() * q + m_i * q * q.dot(a);
}

void payload_accelerations(const SystemState& state, const Vec3& F_d,
                           const Vec3& M_d, const std::vector<Vec3>& mu_d,
                           const DisturbanceSample& d, const SystemParams& p,
                           Vec3* v_dot, Vec3* Omega_dot) {
  const int n = p.n;
  require(static_cast<int>(state.cables.size()) == n &&
              static_cast<int>(mu_d.size()) == n &&
              static_cast<int>(d.force_quad.size()) == n,
          "payload_accelerations: array sizes inconsistent with n");
  const Mat3 J0_inv =
      spd_inverse(p.J0, "payload_accelerations: singular payload inertia");

  // Actual tensions and parallel disturbance components along each cable.
  std::vector<Vec3> mu(n);
  Vec3 par_sum = Vec3::Zero();
  Vec3 moment_par_sum = Vec3::Zero();
  for (int i = 0; i < n; ++i) {
    const Vec3& q = state.cables[i].q;
    mu[i] = project_tension(mu_d[i], q);
    const Vec3 delta_par = project_tension(d.force_quad[i], q);
    par_sum += delta_par;
    moment_par_sum +=
        hat(p.rho[i]) * (state.payload.R.transpose() * delta_par);
  }

  Vec3 Y_x, Y_R;
  cable_deviation_terms(mu, mu_d, state.payload.R, p.rho, p.m0, p.J0, &Y_x,
                        &Y_R);

  *v_dot = (F_d + d.force_payload + par_sum) / p.m0 - p.g * Vec3::UnitZ() +
           Y_x + d.phi_x_extra;

  // The gyroscopic term is explicit here; phi_R_extra carries only additional
  // time-varying content.
  const Vec3& Omega0 = state.payload.Omega;
  *Omega_dot = J0_inv * (M_d + d.moment_payload + moment_par_sum) + Y_R -
               J0_inv * (Omega0.cross(p.J0 * Omega0)) + d.phi_R_extra;
}

StateDerivative system_rhs(const SystemState& state,
                           const std::vector<QuadrotorForceCommand>& u,
                           const std::vector<Vec3>& quad_moments,
                           const Vec3& F_d, const Vec3& M_d,
                           const std::vector<Vec3>& mu_d,
                           const DisturbanceSample& d,
                           const SystemParams& p) {
  const int n = p.n;
  require(static_cast<int>(state.cables.size()) == n &&
              static_cast<int>(state.quads.size()) == n &&
              static_cast<int>(u.size()) == n &&
              static_cast<int>(quad_moments.size()) == n &&
              static_cast<int>(mu_d.size()) == n &&
              static_cast<int>(d.force_quad.size()) == n &&
              static_cast<int>(d.moment_quad.size()) == n,
          "system_rhs: array sizes inconsistent with n");

  StateDerivative out;
  out.cables.resize(n);
  out.quads.resize(n);

  out.x_dot = state.payload.v;
  payload_accelerations(state, F_d, M_d, mu_d, d, p, &out.v_dot,
                        &out.Omega_dot);
  const Vec3& Omega0 = state.payload.Omega;
  out.R_dot = state.payload.R * hat(Omega0);

  std::vector<Vec3> delta_perp(n);
  for (int i = 0; i < n; ++i) {
    const Vec3& q = state.cables[i].q;
    delta_perp[i] = d.force_quad[i] - project_tension(d.force_quad[i], q);
  }

  // Cable rates need the payload accelerations computed above.
  for (int i = 0; i < n; ++i) {
    const Vec3& q = state.cables[i].q;
    const Vec3& omega = state.cables[i].omega;
    const Vec3 a_i = connection_acceleration(out.v_dot, state.payload.R,
                                             Omega0, out.Omega_dot, p.rho[i],
                                             p.g);
    out.cables[i].q_dot = omega.cross(q);
    out.cables[i].omega_dot =
        hat(q) * a_i / p.l_i[i] -
        hat(q) * (u[i].u_perp + delta_perp[i]) / (p.m_i[i] * p.l_i[i]);
  }

  // Quadrotor attitude dynamics.
  for (int i = 0; i < n; ++i) {
    const Mat3 Ji_inv =
        spd_inverse(p.J_i[i], "system_rhs: singular quadrotor inertia");
    const Vec3& Om = state.quads[i].Omega;
    out.quads[i].R_dot = state.quads[i].R * hat(Om);
    out.quads[i].Omega_dot =
        Ji_inv * (quad_moments[i] - Om.cross(p.J_i[i] * Om) + d.moment_quad[i]);
  }

  const bool finite =
      all_finite(out.v_dot) && all_finite(out.Omega_dot) &&
      [&] {
        for (int i = 0; i < n; ++i) {
          if (!all_finite(out.cables[i].omega_dot) ||
              !all_finite(out.quads[i].Omega_dot))
            return false;
        }
        return true;
      }();
  if (!finite) throw std::runtime_error("system_rhs: non-finite derivative");
  return out;
}

Vec3 reconstruct_quadrotor_position(const Vec3& x0, const Mat3& R0,
                                    const Vec3& rho, const Vec3& q, double l) {
  return x0 + R0 * rho - l * q;
}

}  // namespace multilift
