#pragma once

#include "multilift/plant.hpp"
#include "multilift/types.hpp"

namespace multilift {

struct DisturbanceSpec {
  bool payload_force = false;   // group-B style force on the payload
  bool payload_moment = false;  // group-C style moment, onset at t = 5 s
  double payload_moment_onset = 5.0;
  bool quad_disturbances = false;
  double quad_force_amp = 0.5;    // [N]
  double quad_moment_amp = 0.05;  // [N m]
};

// (15 sin(sin(0.02 t) t) + cos(0.5 t),
//  15 sin(cos(0.04 t + pi) t) + 5 cos(0.5 t),
//  -25 sin(1.5 t) + cos(0.5 t)) [N]
Vec3 disturbance_group_b_force(double t);

// Zero before onset, then (10 sin(t - onset), 0, 0) [N m].
Vec3 disturbance_group_c_moment(double t, double onset = 5.0);

// Full sample for n quadrotors. Quadrotor-level disturbances are small
// sinusoids at distinct frequencies per vehicle and axis.
DisturbanceSample sample_disturbance(double t, const DisturbanceSpec& spec,
                                     int n);

}  // namespace multilift
