#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "multilift/so3.hpp"
#include "test_helpers.hpp"

using namespace multilift;
using namespace multilift::testing;

TEST_CASE("hat matches the cross product") {
  Mat3 expected;
  expected << 0, -3, 2,
              3, 0, -1,
              -2, 1, 0;
  CHECK((hat(Vec3(1, 2, 3)) - expected).norm() == doctest::Approx(0.0));

  CHECK((hat(Vec3::UnitX()) * Vec3::UnitY() - Vec3::UnitZ()).norm() ==
        doctest::Approx(0.0));

  const Vec3 v(0.3, -1.2, 2.5);
  CHECK((hat(v) * v).norm() == doctest::Approx(0.0));

  std::mt19937 rng(42);
  for (int k = 0; k < 100; ++k) {
    const Vec3 a = random_vec3(rng, 5.0);
    const Vec3 b = random_vec3(rng, 5.0);
    CHECK((hat(a) * b - a.cross(b)).norm() < 1e-12);
    CHECK((hat(a).transpose() + hat(a)).norm() == 0.0);
  }
}

TEST_CASE("vee inverts hat and rejects non-skew input") {
  CHECK((vee(hat(Vec3(1, 2, 3))) - Vec3(1, 2, 3)).norm() == 0.0);
  CHECK(vee(Mat3::Zero()).norm() == 0.0);

  Mat3 S;
  S << 0, -1, 0,
       1, 0, 0,
       0, 0, 0;
  CHECK((vee(S) - Vec3(0, 0, 1)).norm() == 0.0);

  CHECK_THROWS_AS(vee(Mat3::Identity()), std::invalid_argument);

  // Slightly non-skew input is skew-symmetrized, not rejected.
  Mat3 noisy = hat(Vec3(0.5, -0.25, 1.0));
  noisy(0, 1) += 1e-13;
  CHECK((vee(noisy) - Vec3(0.5, -0.25, 1.0)).norm() < 1e-12);

  std::mt19937 rng(7);
  for (int k = 0; k < 100; ++k) {
    const Vec3 v = random_vec3(rng, 10.0);
    CHECK((vee(hat(v)) - v).norm() == 0.0);
  }
}

TEST_CASE("attitude_error on and off identity") {
  CHECK(attitude_error(Mat3::Identity(), Mat3::Identity()).norm() == 0.0);

  // Exact evaluation of 1/2 (R_d^T R - R^T R_d)^vee for R = rotz(pi/2).
  CHECK((attitude_error(rotz(M_PI / 2), Mat3::Identity()) - Vec3(0, 0, 1))
            .norm() < 1e-15);

  // Single-axis offset: ||e_R|| = |sin(theta)|.
  std::mt19937 rng(3);
  const Mat3 R_d = random_rotation(rng);
  const Mat3 R = R_d * rotz(M_PI / 6);
  CHECK(attitude_error(R, R_d).norm() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("angular_velocity_error examples") {
  const Vec3 Om(0, 0, 1);
  CHECK(angular_velocity_error(Om, rotz(0.7), rotz(0.7), Om).norm() < 1e-15);
  CHECK((angular_velocity_error(Vec3(0, 0, 2), Mat3::Identity(),
                                Mat3::Identity(), Vec3(0, 0, 1)) -
         Vec3(0, 0, 1))
            .norm() < 1e-15);
  // R = rotz(pi/2), R_d = I: -R^T Omega_d with Omega_d = e1 gives (0, 1, 0).
  CHECK((angular_velocity_error(Vec3::Zero(), rotz(M_PI / 2), Mat3::Identity(),
                                Vec3(1, 0, 0)) -
         Vec3(0, 1, 0))
            .norm() < 1e-15);
}

TEST_CASE("configuration error scalars") {
  CHECK(psi_rotation(Mat3::Identity(), Mat3::Identity()) == 0.0);
  CHECK(psi_rotation(rotz(M_PI), Mat3::Identity()) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(psi_rotation(rotz(M_PI / 2), Mat3::Identity()) ==
        doctest::Approx(1.0).epsilon(1e-12));

  const Vec3 down(0, 0, -1);
  CHECK(psi_direction(down, down) == 0.0);
  CHECK(psi_direction(down, -down) == 2.0);
  CHECK(psi_direction(down, Vec3(1, 0, 0)) == 1.0);
}

TEST_CASE("transport matrix values and norm bound") {
  CHECK((transport_matrix(rotz(0.4), rotz(0.4)) - Mat3::Identity()).norm() <
        1e-14);

  // R = rotz(pi): tr[R^T R_d] = -1 and H = diag(0, 0, -1).
  const Mat3 H = transport_matrix(rotz(M_PI), Mat3::Identity());
  Mat3 expected = Vec3(0, 0, -1).asDiagonal();
  CHECK((H - expected).norm() < 1e-12);

  std::mt19937 rng(11);
  for (int k = 0; k < 10000; ++k) {
    const Mat3 A = random_rotation(rng);
    const Mat3 B = random_rotation(rng);
    const Mat3 Hk = transport_matrix(A, B);
    CHECK(Hk.jacobiSvd().singularValues()(0) <= 1.0 + 1e-12);
  }
}

TEST_CASE("reorthonormalize projects to the nearest rotation") {
  std::mt19937 rng(5);
  const Mat3 R = random_rotation(rng);
  CHECK((reorthonormalize(R) - R).norm() < 1e-12);

  const Mat3 M = Mat3::Identity() + 1e-4 * hat(Vec3(1, 1, 1));
  const Mat3 P = reorthonormalize(M);
  CHECK((P.transpose() * P - Mat3::Identity()).norm() < 1e-12);
  CHECK(P.determinant() == doctest::Approx(1.0).epsilon(1e-12));

  Mat3 mirrored = Mat3::Identity();
  mirrored(2, 2) = -1.0;
  CHECK_THROWS_AS(reorthonormalize(mirrored), std::invalid_argument);

  // Polar-factor oracle: the projection is closer than any nearby rotation.
  for (int k = 0; k < 50; ++k) {
    const Mat3 base = random_rotation(rng);
    const Mat3 noisy = base + 0.01 * random_rotation(rng);
    const Mat3 nearest = reorthonormalize(noisy);
    const double dist = (noisy - nearest).norm();
    for (int j = 0; j < 20; ++j) {
      const Mat3 other = nearest * rotz(0.05 * (j + 1));
      CHECK(dist <= (noisy - other).norm() + 1e-12);
    }
  }
}

TEST_CASE("body_rate_from_rotation recovers the generator") {
  CHECK((body_rate_from_rotation(Mat3::Identity(), hat(Vec3(0, 0, 0.5))) -
         Vec3(0, 0, 0.5))
            .norm() < 1e-15);
  CHECK(body_rate_from_rotation(rotz(1.0), Mat3::Zero()).norm() == 0.0);

  const Mat3 R = rotz(0.3);
  const Vec3 w(0.1, -0.2, 0.4);
  CHECK((body_rate_from_rotation(R, R * hat(w)) - w).norm() < 1e-14);
}

TEST_CASE("norm identities link e_R, e_q to the Psi scalars") {
  std::mt19937 rng(17);
  for (int k = 0; k < 10000; ++k) {
    const Mat3 R = random_rotation(rng);
    const Mat3 R_d = random_rotation(rng);
    const double psi = psi_rotation(R, R_d);
    const double n2 = attitude_error(R, R_d).squaredNorm();
    CHECK(n2 == doctest::Approx(psi * (2.0 - psi)).epsilon(1e-9));

    const Vec3 q = random_unit(rng);
    const Vec3 q_d = random_unit(rng);
    const double psi_q = psi_direction(q, q_d);
    CHECK(q_d.cross(q).squaredNorm() ==
          doctest::Approx(psi_q * (2.0 - psi_q)).epsilon(1e-9));
  }
}

TEST_CASE("quadratic bounds on Psi_R hold below psi = 0.9") {
  std::mt19937 rng(23);
  const double psi_cap = 0.9;
  int checked = 0;
  while (checked < 2000) {
    const Mat3 R = random_rotation(rng);
    const Mat3 R_d = random_rotation(rng);
    const double psi = psi_rotation(R, R_d);
    if (psi <= 0.0 || psi >= psi_cap) continue;
    const double n2 = attitude_error(R, R_d).squaredNorm();
    CHECK(0.5 * n2 <= psi + 1e-12);
    CHECK(psi <= n2 / (2.0 - psi_cap) + 1e-12);
    ++checked;
  }
}

TEST_CASE("transport matrix drives the attitude error derivative") {
  // d/dt e_R = H e_Omega for R(t) = R exp(t hat(Omega)), checked by central
  // differences with a second-order expansion of the exponential.
  const Mat3 R_d = rotx(0.3);
  const Vec3 Omega(0.4, -0.2, 0.7);
  const Mat3 R = roty(0.6) * rotz(-0.4);
  const double h = 1e-6;
  const Mat3 W = hat(Omega);
  const Mat3 step_plus = Mat3::Identity() + h * W + 0.5 * h * h * W * W;
  const Mat3 step_minus = Mat3::Identity() - h * W + 0.5 * h * h * W * W;
  const Vec3 de_num = (attitude_error(R * step_plus, R_d) -
                       attitude_error(R * step_minus, R_d)) /
                      (2 * h);
  const Vec3 e_Om = angular_velocity_error(Omega, R, R_d, Vec3::Zero());
  const Vec3 de_pred = transport_matrix(R, R_d) * e_Om;
  CHECK((de_num - de_pred).norm() < 1e-6);
}
