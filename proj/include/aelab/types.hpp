#pragma once

#include <complex>
#include <Eigen/Core>

namespace aelab {

using Cplx = std::complex<double>;
using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using CVec2 = Eigen::Vector2cd;
using CMat2 = Eigen::Matrix2cd;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = 3.14159265358979323846;

inline constexpr Cplx kI{0.0, 1.0};

/// Bilinear (non-conjugating) dot product a·b = a1*b1 + a2*b2.
/// Eigen's dot() conjugates its first argument, which is never what the
/// corner-identity algebra wants.
inline Cplx bdot(const CVec2& a, const CVec2& b) { return a(0) * b(0) + a(1) * b(1); }
inline Cplx bdot(const CVec2& a, const Vec2& b) { return a(0) * b(0) + a(1) * b(1); }
inline Cplx bdot(const Vec2& a, const CVec2& b) { return a(0) * b(0) + a(1) * b(1); }
inline double bdot(const Vec2& a, const Vec2& b) { return a(0) * b(0) + a(1) * b(1); }

/// Counter-clockwise rotation by pi/2.
inline Vec2 perp(const Vec2& v) { return Vec2(-v(1), v(0)); }
inline CVec2 perp(const CVec2& v) { return CVec2(-v(1), v(0)); }

}  // namespace aelab
