#include "multilift/disturbance.hpp"

#include <cmath>

namespace multilift {

Vec3 disturbance_group_b_force(double t) {
  return Vec3(15.0 * std::sin(std::sin(0.02 * t) * t) + std::cos(0.5 * t),
              15.0 * std::sin(std::cos(0.04 * t + M_PI) * t) +
                  5.0 * std::cos(0.5 * t),
              -25.0 * std::sin(1.5 * t) + std::cos(0.5 * t));
}

Vec3 disturbance_group_c_moment(double t, double onset) {
  if (t < onset) return Vec3::Zero();
  return Vec3(10.0 * std::sin(t - onset), 0.0, 0.0);
}

DisturbanceSample sample_disturbance(double t, const DisturbanceSpec& spec,
                                     int n) {
  DisturbanceSample d = DisturbanceSample::zero(n);
  if (spec.payload_force) {
    d.force_payload = disturbance_group_b_force(t);
  }
  if (spec.payload_moment) {
    d.moment_payload = disturbance_group_c_moment(t, spec.payload_moment_onset);
  }
  if (spec.quad_disturbances) {
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < 3; ++k) {
        const double wf = 1.1 + 0.4 * i + 0.13 * k;
        const double wm = 1.7 + 0.3 * i + 0.21 * k;
        const double phase = 0.5 * i + 0.2 * k;
        d.force_quad[i](k) = spec.quad_force_amp * std::sin(wf * t + phase);
        d.moment_quad[i](k) = spec.quad_moment_amp * std::sin(wm * t + phase);
      }
    }
  }
  return d;
}

}  // namespace multilift
