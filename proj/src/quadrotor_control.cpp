#include "multilift/quadrotor_control.hpp"

#include <stdexcept>

#include "multilift/allocation.hpp"
#include "multilift/so3.hpp"

namespace multilift {

Mat3 desired_attitude(const Vec3& u, const Vec3& b1d, double thrust_floor,
                      double alignment_floor) {
  const double u_norm = u.norm();
  if (u_norm <= thrust_floor) {
    throw std::runtime_error("desired_attitude: thrust below floor");
  }
  const Vec3 b3 = u / u_norm;
  const Mat3 b3_hat = hat(b3);
  const Vec3 b2_raw = b3_hat * b1d;
  if (b2_raw.norm() <= alignment_floor) {
    throw std::runtime_error(
        "desired_attitude: facing direction degenerate with thrust axis");
  }
  const Vec3 b1_raw = -b3_hat * (b3_hat * b1d);
  Mat3 R;
  R.col(0) = b1_raw / b1_raw.norm();
  R.col(1) = b2_raw / b2_raw.norm();
  R.col(2) = b3;
  return R;
}

RotorCommand thrust_moment(const Vec3& u, const QuadrotorState& state,
                           const AttitudeCommand& cmd, const Mat3& J_i,
                           double k_Ri, double k_Omegai) {
  const Mat3& R = state.R;
  const Vec3& Omega = state.Omega;
  const Vec3 e_R = attitude_error(R, cmd.R_c);
  const Vec3 e_Omega =
      angular_velocity_error(Omega, R, cmd.R_c, cmd.Omega_c);
  const Mat3 RtRc = R.transpose() * cmd.R_c;

  RotorCommand out;
  out.f = u.dot(R * Vec3::UnitZ());
  out.M = -k_Ri * e_R - k_Omegai * e_Omega + Omega.cross(J_i * Omega) -
          J_i * (hat(Omega) * (RtRc * cmd.Omega_c) - RtRc * cmd.Omegadot_c);
  return out;
}

AttitudeRateEstimator::Rates AttitudeRateEstimator::push(const Mat3& R_c,
                                                         double h) {
  Rates r;
  if (prev_R_) {
    const Mat3 R_dot = (R_c - *prev_R_) / h;
    r.Omega_c = saturate_norm(body_rate_from_rotation(R_c, R_dot),
                              rate_limit_);
    if (prev_Omega_) {
      r.Omegadot_c = saturate_norm((r.Omega_c - *prev_Omega_) / h,
                                   accel_limit_);
    }
    prev_Omega_ = r.Omega_c;
  }
  prev_R_ = R_c;
  return r;
}

void AttitudeRateEstimator::reset() {
  prev_R_.reset();
  prev_Omega_.reset();
}

}  // namespace multilift
