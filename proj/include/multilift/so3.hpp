#pragma once

#include "multilift/types.hpp"

namespace multilift {

// Skew-symmetric map: hat(v) * w == v x w for all w.
Mat3 hat(const Vec3& v);

// Inverse of hat. Input that is non-skew beyond `skew_tol` (Frobenius norm of
// S + S^T) is rejected; smaller deviations are skew-symmetrized first so the
// map stays usable on integrator output.
Vec3 vee(const Mat3& S, double skew_tol = 1e-9);

// e_R = 1/2 (R_d^T R - R^T R_d)^vee. Norm is |sin(angle)| <= 1.
Vec3 attitude_error(const Mat3& R, const Mat3& R_d);

// e_Omega = Omega - R^T R_d Omega_d (body-frame rate mismatch).
Vec3 angular_velocity_error(const Vec3& Omega, const Mat3& R, const Mat3& R_d,
                            const Vec3& Omega_d);

// Attitude configuration error Psi = 1/2 tr[I - R_d^T R], in [0, 2].
double psi_rotation(const Mat3& R, const Mat3& R_d);

// Direction configuration error Psi = 1 - q . q_d, in [0, 2].
double psi_direction(const Vec3& q, const Vec3& q_d);

// H = 1/2 (tr[R^T R_d] I - R^T R_d); maps e_Omega to d/dt e_R. ||H||_2 <= 1.
Mat3 transport_matrix(const Mat3& R, const Mat3& R_d);

// Nearest rotation to M (polar factor via SVD). Throws if the projection has
// non-positive determinant, i.e. M is not close to SO(3).
Mat3 reorthonormalize(const Mat3& M);

// omega = (R^T Rdot)^vee after skew-symmetrizing the product.
Vec3 body_rate_from_rotation(const Mat3& R, const Mat3& R_dot);

bool is_rotation(const Mat3& R, double tol = 1e-9);
bool is_unit(const Vec3& v, double tol = 1e-9);

}  // namespace multilift
