#pragma once

#include <Eigen/Dense>

namespace einstein4 {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Symmetric positive-definite inverse square root (the unique SPD root).
Mat4 spd_inverse_sqrt(const Mat4& g);

inline double sq(double x) { return x * x; }

}  // namespace einstein4
