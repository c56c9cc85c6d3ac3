#pragma once

#include <cmath>
#include <random>

#include "multilift/types.hpp"

namespace multilift::testing {

inline Mat3 rotx(double a) {
  Mat3 R;
  R << 1, 0, 0,
       0, std::cos(a), -std::sin(a),
       0, std::sin(a), std::cos(a);
  return R;
}

inline Mat3 roty(double a) {
  Mat3 R;
  R << std::cos(a), 0, std::sin(a),
       0, 1, 0,
       -std::sin(a), 0, std::cos(a);
  return R;
}

inline Mat3 rotz(double a) {
  Mat3 R;
  R << std::cos(a), -std::sin(a), 0,
       std::sin(a), std::cos(a), 0,
       0, 0, 1;
  return R;
}

inline Vec3 random_vec3(std::mt19937& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  return Vec3(dist(rng), dist(rng), dist(rng));
}

inline Vec3 random_unit(std::mt19937& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Vec3 v(dist(rng), dist(rng), dist(rng));
  while (v.norm() < 1e-6) v = Vec3(dist(rng), dist(rng), dist(rng));
  return v.normalized();
}

inline Mat3 random_rotation(std::mt19937& rng) {
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  const Vec3 axis = random_unit(rng);
  const double a = angle(rng);
  // Rodrigues formula.
  Mat3 K;
  K << 0, -axis.z(), axis.y(),
       axis.z(), 0, -axis.x(),
       -axis.y(), axis.x(), 0;
  return Mat3::Identity() + std::sin(a) * K + (1 - std::cos(a)) * K * K;
}

}  // namespace multilift::testing
