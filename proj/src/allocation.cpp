#include "multilift/allocation.hpp"

#include <stdexcept>

#include "multilift/so3.hpp"

namespace multilift {

TensionPlanner::TensionPlanner(std::vector<Vec3> rho,
                               double singular_value_cutoff)
    : rho_(std::move(rho)) {
  const int n = static_cast<int>(rho_.size());
  if (n < 1) throw std::invalid_argument("TensionPlanner: need n >= 1");
  A_.resize(6, 3 * n);
  for (int i = 0; i < n; ++i) {
    A_.block<3, 3>(0, 3 * i) = Mat3::Identity();
    A_.block<3, 3>(3, 3 * i) = hat(rho_[i]);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      A_, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = singular_value_cutoff * sv(0);
  Eigen::VectorXd inv_sv = Eigen::VectorXd::Zero(sv.size());
  rank_ = 0;
  for (int k = 0; k < sv.size(); ++k) {
    if (sv(k) > cutoff) {
      inv_sv(k) = 1.0 / sv(k);
      ++rank_;
    }
  }
  pinv_ = svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().transpose();
}

TensionPlan TensionPlanner::plan(const Vec3& F_d, const Vec3& M_d,
                                 const Mat3& R0) const {
  const int n = static_cast<int>(rho_.size());
  Eigen::Matrix<double, 6, 1> b;
  b.head<3>() = R0.transpose() * F_d;
  b.tail<3>() = M_d;
  const Eigen::VectorXd y = pinv_ * b;
  const double residual = (A_ * y - b).norm();
  if (residual > 1e-9 * std::max(1.0, b.norm())) {
    throw std::runtime_error(
        "TensionPlanner: wrench infeasible for the attachment geometry");
  }
  TensionPlan plan;
  plan.mu_d.resize(n);
  for (int i = 0; i < n; ++i) plan.mu_d[i] = R0 * y.segment<3>(3 * i);
  return plan;
}

TensionPlan plan_tensions(const Vec3& F_d, const Vec3& M_d, const Mat3& R0,
                          const std::vector<Vec3>& rho) {
  return TensionPlanner(rho).plan(F_d, M_d, R0);
}

Vec3 desired_cable_direction(const Vec3& mu_d, double tension_floor) {
  const double norm = mu_d.norm();
  if (norm <= tension_floor) {
    throw std::runtime_error("desired_cable_direction: tension below floor");
  }
  return -mu_d / norm;
}

CableErrors cable_errors(const Vec3& q, const Vec3& omega, const Vec3& q_d,
                         const Vec3& omega_d) {
  CableErrors e;
  e.e_q = q_d.cross(q);
  const Mat3 q_hat = hat(q);
  e.e_omega = omega + q_hat * q_hat * omega_d;
  return e;
}

Vec3 normal_control(const Vec3& q, const Vec3& q_dot, const CableErrors& e,
                    const Vec3& omega_d, const Vec3& omegadot_d, const Vec3& a,
                    const Vec3& delta_xi_hat, double m_i, double l_i,
                    double k_q, double k_omega) {
  const Mat3 q_hat = hat(q);
  const Mat3 q_hat2 = q_hat * q_hat;
  const Vec3 bracket = -k_q * e.e_q - k_omega * e.e_omega -
                       q.dot(omega_d) * q_dot - q_hat2 * omegadot_d;
  const Vec3 delta_perp = -q_hat2 * delta_xi_hat;
  return m_i * l_i * (q_hat * bracket) - m_i * (q_hat2 * a) - delta_perp;
}

QuadrotorForceCommand compose_quadrotor_force(const Vec3& u_par,
                                              const Vec3& u_perp,
                                              const Vec3& q) {
  const double scale = std::max(1.0, u_par.norm() + u_perp.norm());
  if ((u_par - q * q.dot(u_par)).norm() > 1e-9 * scale) {
    throw std::invalid_argument(
        "compose_quadrotor_force: u_par not parallel to cable");
  }
  if (std::abs(u_perp.dot(q)) > 1e-9 * scale) {
    throw std::invalid_argument(
        "compose_quadrotor_force: u_perp not orthogonal to cable");
  }
  QuadrotorForceCommand cmd;
  cmd.u_par = u_par;
  cmd.u_perp = u_perp;
  cmd.u = u_par + u_perp;
  return cmd;
}

Vec3 saturate_norm(const Vec3& v, double limit) {
  const double norm = v.norm();
  if (norm <= limit) return v;
  return v * (limit / norm);
}

DirectionRateEstimator::Rates DirectionRateEstimator::push(const Vec3& q_d,
                                                           double h) {
  Rates r;
  if (prev_q_) {
    const Vec3 q_dot = (q_d - *prev_q_) / h;
    r.omega_d = saturate_norm(q_d.cross(q_dot), rate_limit_);
    if (prev_omega_) {
      r.omegadot_d = saturate_norm((r.omega_d - *prev_omega_) / h,
                                   accel_limit_);
    }
    prev_omega_ = r.omega_d;
  }
  prev_q_ = q_d;
  return r;
}

void DirectionRateEstimator::reset() {
  prev_q_.reset();
  prev_omega_.reset();
}

}  // namespace multilift
