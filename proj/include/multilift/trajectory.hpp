#pragma once

#include "multilift/payload_control.hpp"
#include "multilift/types.hpp"

namespace multilift {

enum class TrajectoryKind {
  hover,           // constant position
  circle,          // planar circle at fixed altitude
  helix,           // circle with linear climb
  tilted_circle,   // circle with sinusoidal altitude locked to the heading
  smoothed_square, // circle with smoothed square-wave altitude
};

struct TrajectorySpec {
  TrajectoryKind kind = TrajectoryKind::circle;
  // Shared circle geometry: x(t) = center + radius (cos(wt) - 1, sin(wt), 0).
  Vec3 start = Vec3(0.0, 0.0, 1.0);
  double radius = 4.0;
  double angular_rate = M_PI / 5.0;
  // Altitude shaping (helix climb rate / oscillation amplitude & rate).
  double climb_rate = 0.1;
  double altitude_amplitude = 1.0;
  double altitude_rate = M_PI / 5.0;
  double square_sharpness = 4.0;
};

struct TrajectorySample {
  Vec3 x = Vec3::Zero();
  Vec3 v = Vec3::Zero();
  Vec3 a = Vec3::Zero();
  Vec3 j = Vec3::Zero();
};

// Analytic position and derivatives; throws on an unknown kind.
TrajectorySample reference_trajectory(double t, const TrajectorySpec& spec);

enum class AttitudeMode {
  facing,  // first body axis along the horizontal direction of motion
  fixed,   // constant attitude, zero rates
};

struct AttitudeSpec {
  AttitudeMode mode = AttitudeMode::facing;
  Mat3 fixed_R = Mat3::Identity();
};

// R_d, Omega_d, Omegadot_d for the payload. Facing mode builds
// [v_hor/||v_hor||, e3 x v / ||e3 x v||, e3] from the horizontal velocity and
// differentiates the heading analytically; it throws when the reference is
// (horizontally) stationary.
void reference_attitude(const TrajectorySample& traj, const AttitudeSpec& spec,
                        Mat3* R_d, Vec3* Omega_d, Vec3* Omegadot_d);

ReferenceSample make_reference(double t, const TrajectorySpec& traj_spec,
                               const AttitudeSpec& att_spec);

}  // namespace multilift
