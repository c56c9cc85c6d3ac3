#include "multilift/so3.hpp"

#include <stdexcept>

namespace multilift {

Mat3 hat(const Vec3& v) {
  Mat3 S;
  S << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
      -v.y(), v.x(), 0.0;
  return S;
}

Vec3 vee(const Mat3& S, double skew_tol) {
  if ((S + S.transpose()).norm() > skew_tol) {
    throw std::invalid_argument("vee: input matrix is not skew-symmetric");
  }
  const Mat3 A = 0.5 * (S - S.transpose());
  return Vec3(A(2, 1), A(0, 2), A(1, 0));
}

Vec3 attitude_error(const Mat3& R, const Mat3& R_d) {
  const Mat3 S = R_d.transpose() * R - R.transpose() * R_d;
  return 0.5 * Vec3(S(2, 1), S(0, 2), S(1, 0));
}

Vec3 angular_velocity_error(const Vec3& Omega, const Mat3& R, const Mat3& R_d,
                            const Vec3& Omega_d) {
  return Omega - R.transpose() * R_d * Omega_d;
}

double psi_rotation(const Mat3& R, const Mat3& R_d) {
  return 0.5 * (Mat3::Identity() - R_d.transpose() * R).trace();
}

double psi_direction(const Vec3& q, const Vec3& q_d) {
  return 1.0 - q.dot(q_d);
}

Mat3 transport_matrix(const Mat3& R, const Mat3& R_d) {
  const Mat3 RtRd = R.transpose() * R_d;
  return 0.5 * (RtRd.trace() * Mat3::Identity() - RtRd);
}

Mat3 reorthonormalize(const Mat3& M) {
  Eigen::JacobiSVD<Mat3> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 R = svd.matrixU() * svd.matrixV().transpose();
  if (R.determinant() <= 0.0) {
    throw std::invalid_argument(
        "reorthonormalize: polar factor has non-positive determinant");
  }
  return R;
}

Vec3 body_rate_from_rotation(const Mat3& R, const Mat3& R_dot) {
  const Mat3 S = R.transpose() * R_dot;
  const Mat3 A = 0.5 * (S - S.transpose());
  return Vec3(A(2, 1), A(0, 2), A(1, 0));
}

bool is_rotation(const Mat3& R, double tol) {
  return (R.transpose() * R - Mat3::Identity()).norm() <= tol &&
         std::abs(R.determinant() - 1.0) <= tol;
}

bool is_unit(const Vec3& v, double tol) {
  return std::abs(v.norm() - 1.0) <= tol;
}

}  // namespace multilift
