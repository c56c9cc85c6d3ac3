#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace multilift {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

inline bool all_finite(const Vec3& v) { return v.allFinite(); }
inline bool all_finite(const Mat3& m) { return m.allFinite(); }

inline Vec3 e3_axis() { return Vec3::UnitZ(); }

}  // namespace multilift
