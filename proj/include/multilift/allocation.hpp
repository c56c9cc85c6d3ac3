#pragma once

#include <optional>
#include <vector>

#include "multilift/plant.hpp"
#include "multilift/types.hpp"

namespace multilift {

struct TensionPlan {
  std::vector<Vec3> mu_d;  // desired cable tensions [N]
};

// Minimum-norm tension allocation. The 6 x 3n constraint matrix
// [I ... I; hat(rho_1) ... hat(rho_n)] depends only on the attachment
// geometry, so its pseudoinverse is computed once.
class TensionPlanner {
 public:
  explicit TensionPlanner(std::vector<Vec3> rho,
                          double singular_value_cutoff = 1e-10);

  // mu_d stacked = blkdiag(R0..R0) pinv(A) (R0^T F_d; M_d).
  // Throws std::runtime_error if the wrench is outside the range of a
  // rank-deficient constraint map.
  TensionPlan plan(const Vec3& F_d, const Vec3& M_d, const Mat3& R0) const;

  int rank() const { return rank_; }

 private:
  std::vector<Vec3> rho_;
  Eigen::MatrixXd pinv_;  // 3n x 6
  Eigen::MatrixXd A_;     // 6 x 3n
  int rank_ = 0;
};

// One-shot convenience wrapper around TensionPlanner.
TensionPlan plan_tensions(const Vec3& F_d, const Vec3& M_d, const Mat3& R0,
                          const std::vector<Vec3>& rho);

// q_d = -mu_d / ||mu_d||. Throws below the tension floor; the caller is
// expected to hold the previous direction in that case.
Vec3 desired_cable_direction(const Vec3& mu_d, double tension_floor = 1e-6);

struct CableErrors {
  Vec3 e_q = Vec3::Zero();      // q_d x q
  Vec3 e_omega = Vec3::Zero();  // omega + hat(q)^2 omega_d
};

CableErrors cable_errors(const Vec3& q, const Vec3& omega, const Vec3& q_d,
                         const Vec3& omega_d);

// Normal (cable-orthogonal) control force, Vec3 orthogonal to q by
// construction:
// u_perp = m l hat(q){-k_q e_q - k_w e_w - (q.omega_d) qdot - hat(q)^2 omegadot_d}
//          - m hat(q)^2 a - delta_perp,  delta_perp = -hat(q)^2 delta_hat.
Vec3 normal_control(const Vec3& q, const Vec3& q_dot, const CableErrors& e,
                    const Vec3& omega_d, const Vec3& omegadot_d, const Vec3& a,
                    const Vec3& delta_xi_hat, double m_i, double l_i,
                    double k_q, double k_omega);

// Sum of validated components; throws if u_par is not parallel to q or
// u_perp not orthogonal to q (tolerance 1e-9 relative).
QuadrotorForceCommand compose_quadrotor_force(const Vec3& u_par,
                                              const Vec3& u_perp,
                                              const Vec3& q);

// Backward-difference estimator for desired cable rates. Returns zeros until
// enough samples accumulated (one for omega_d, two for omegadot_d). The
// outputs are norm-saturated: a discrete direction command can jump between
// steps (tension reversals), and dividing such a jump by h or h^2 would
// otherwise inject unbounded feedforward into the cable controller.
class DirectionRateEstimator {
 public:
  struct Rates {
    Vec3 omega_d = Vec3::Zero();
    Vec3 omegadot_d = Vec3::Zero();
  };

  explicit DirectionRateEstimator(double rate_limit = 50.0,
                                  double accel_limit = 500.0)
      : rate_limit_(rate_limit), accel_limit_(accel_limit) {}

  Rates push(const Vec3& q_d, double h);
  void reset();

 private:
  double rate_limit_;
  double accel_limit_;
  std::optional<Vec3> prev_q_;
  std::optional<Vec3> prev_omega_;
};

// Rescales v onto the ball of radius `limit` (no-op inside it).
Vec3 saturate_norm(const Vec3& v, double limit);

}  // namespace multilift
