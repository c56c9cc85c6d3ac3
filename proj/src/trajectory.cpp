#include "multilift/trajectory.hpp"

#include <cmath>
#include <stdexcept>

namespace multilift {

TrajectorySample reference_trajectory(double t, const TrajectorySpec& spec) {
  TrajectorySample s;
  const double w = spec.angular_rate;
  const double r = spec.radius;
  const double c = std::cos(w * t);
  const double sn = std::sin(w * t);

  switch (spec.kind) {
    case TrajectoryKind::hover:
      s.x = spec.start;
      return s;
    case TrajectoryKind::circle:
    case TrajectoryKind::helix:
    case TrajectoryKind::tilted_circle:
    case TrajectoryKind::smoothed_square:
      break;
    default:
      throw std::invalid_argument("reference_trajectory: unknown kind");
  }

  // Shared horizontal circle through the start point.
  s.x = spec.start + r * Vec3(c - 1.0, sn, 0.0);
  s.v = r * w * Vec3(-sn, c, 0.0);
  s.a = r * w * w * Vec3(-c, -sn, 0.0);
  s.j = r * w * w * w * Vec3(sn, -c, 0.0);

  if (spec.kind == TrajectoryKind::helix) {
    s.x.z() += spec.climb_rate * t;
    s.v.z() += spec.climb_rate;
  } else if (spec.kind == TrajectoryKind::tilted_circle) {
    const double wa = spec.altitude_rate;
    const double A = spec.altitude_amplitude;
    s.x.z() += A * std::sin(wa * t);
    s.v.z() += A * wa * std::cos(wa * t);
    s.a.z() += -A * wa * wa * std::sin(wa * t);
    s.j.z() += -A * wa * wa * wa * std::cos(wa * t);
  } else if (spec.kind == TrajectoryKind::smoothed_square) {
    const double wa = spec.altitude_rate;
    const double A = spec.altitude_amplitude;
    const double k = spec.square_sharpness;
    const double u = k * std::sin(wa * t);
    const double ud = k * wa * std::cos(wa * t);
    const double udd = -k * wa * wa * std::sin(wa * t);
    const double uddd = -k * wa * wa * wa * std::cos(wa * t);
    const double th = std::tanh(u);
    const double sech2 = 1.0 - th * th;
    s.x.z() += A * th;
    s.v.z() += A * sech2 * ud;
    s.a.z() += A * (-2.0 * sech2 * th * ud * ud + sech2 * udd);
    s.j.z() += A * (-2.0 * sech2 * (sech2 - 2.0 * th * th) * ud * ud * ud -
                    6.0 * sech2 * th * ud * udd + sech2 * uddd);
  }
  return s;
}

void reference_attitude(const TrajectorySample& traj, const AttitudeSpec& spec,
                        Mat3* R_d, Vec3* Omega_d, Vec3* Omegadot_d) {
  if (spec.mode == AttitudeMode::fixed) {
    *R_d = spec.fixed_R;
    *Omega_d = Vec3::Zero();
    *Omegadot_d = Vec3::Zero();
    return;
  }
  const double vx = traj.v.x(), vy = traj.v.y();
  const double s2 = vx * vx + vy * vy;
  if (s2 <= 1e-18) {
    throw std::runtime_error(
        "reference_attitude: stationary reference in facing mode");
  }
  const double s = std::sqrt(s2);
  Mat3 R;
  R.col(0) = Vec3(vx / s, vy / s, 0.0);
  R.col(1) = Vec3(-vy / s, vx / s, 0.0);
  R.col(2) = Vec3::UnitZ();
  *R_d = R;

  // Heading rate/acceleration from the horizontal velocity and its
  // derivatives (R_d is a pure yaw, so both rates live on the body z axis).
  const double ax = traj.a.x(), ay = traj.a.y();
  const double cross_va = vx * ay - vy * ax;
  const double cross_vj = vx * traj.j.y() - vy * traj.j.x();
  const double s2_dot = 2.0 * (vx * ax + vy * ay);
  const double alpha_dot = cross_va / s2;
  const double alpha_ddot = (cross_vj * s2 - cross_va * s2_dot) / (s2 * s2);
  *Omega_d = Vec3(0.0, 0.0, alpha_dot);
  *Omegadot_d = Vec3(0.0, 0.0, alpha_ddot);
}

ReferenceSample make_reference(double t, const TrajectorySpec& traj_spec,
                               const AttitudeSpec& att_spec) {
  const TrajectorySample traj = reference_trajectory(t, traj_spec);
  ReferenceSample ref;
  ref.x_d = traj.x;
  ref.v_d = traj.v;
  ref.a_d = traj.a;
  reference_attitude(traj, att_spec, &ref.R_d, &ref.Omega_d, &ref.Omegadot_d);
  return ref;
}

}  // namespace multilift
