#pragma once

#include <optional>

#include "multilift/plant.hpp"
#include "multilift/types.hpp"

namespace multilift {

struct AttitudeCommand {
  Mat3 R_c = Mat3::Identity();
  Vec3 Omega_c = Vec3::Zero();
  Vec3 Omegadot_c = Vec3::Zero();
  Vec3 b1d = Vec3::UnitX();
};

struct RotorCommand {
  double f = 0.0;          // thrust [N]
  Vec3 M = Vec3::Zero();   // moment [N m]
};

// Desired attitude with third column u/||u|| and first column as close to
// b1d as the thrust direction allows:
// R_c = [-hat(b3)^2 b1d / ||.||, hat(b3) b1d / ||.||, b3].
// Throws below the thrust floor or when b1d is parallel to the thrust axis.
Mat3 desired_attitude(const Vec3& u, const Vec3& b1d,
                      double thrust_floor = 1e-6,
                      double alignment_floor = 1e-6);

// f = u . (R e3),
// M = -k_R e_R - k_Omega e_Omega + Omega x J Omega
//     - J (hat(Omega) R^T R_c Omega_c - R^T R_c Omegadot_c).
RotorCommand thrust_moment(const Vec3& u, const QuadrotorState& state,
                           const AttitudeCommand& cmd, const Mat3& J_i,
                           double k_Ri, double k_Omegai);

// Backward-difference estimator for commanded attitude rates; zeros while
// warming up. Norm-saturated for the same reason as the cable-rate
// estimator: a commanded attitude can jump between steps (thrust direction
// reversal), and jump/h^2 would feed unbounded moments forward.
class AttitudeRateEstimator {
 public:
  struct Rates {
    Vec3 Omega_c = Vec3::Zero();
    Vec3 Omegadot_c = Vec3::Zero();
  };

  explicit AttitudeRateEstimator(double rate_limit = 50.0,
                                 double accel_limit = 500.0)
      : rate_limit_(rate_limit), accel_limit_(accel_limit) {}

  Rates push(const Mat3& R_c, double h);
  void reset();

 private:
  double rate_limit_;
  double accel_limit_;
  std::optional<Mat3> prev_R_;
  std::optional<Vec3> prev_Omega_;
};

}  // namespace multilift
