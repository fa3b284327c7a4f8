#pragma once

#include <array>
#include <functional>
#include <string>

#include "einstein4/curvature.hpp"
#include "einstein4/linalg.hpp"

namespace einstein4 {

using MetricFn = std::function<Mat4(const Vec4&)>;
using ScalarFn = std::function<double(const Vec4&)>;

// A single coordinate chart with a closed-form metric-component function.
// Box charts integrate over the coordinate box; RadialR4 charts cover all of
// R^4 and integrate in 4-dimensional spherical coordinates with the radial
// substitution rho = t/(1-t).
enum class ChartKind { Box, RadialR4 };

struct Chart {
  std::string name;
  ChartKind kind = ChartKind::Box;
  std::array<double, 4> lo{{0, 0, 0, 0}};
  std::array<double, 4> hi{{1, 1, 1, 1}};
  MetricFn metric;
  Vec4 base_point = Vec4::Zero();     // representative interior point
  std::string excluded_locus;         // measure-zero set the chart misses
};

/// Metric at x, validated symmetric positive-definite (Cholesky succeeds).
Mat4 metric_at(const Chart& chart, const Vec4& x);

/// Throws if a box-chart point is closer than `margin` to the boundary.
void require_interior(const Chart& chart, const Vec4& x, double margin);

struct Christoffel {
  std::array<Mat4, 4> gamma;  // gamma[a](b,c) = Gamma^a_{bc}
};

/// Christoffel symbols by Richardson-extrapolated central differences of the
/// metric components.
Christoffel christoffel_at(const Chart& chart, const Vec4& x, double step);

struct RiemannTensor {
  // Fully covariant components in the coordinate frame.
  std::array<std::array<Mat4, 4>, 4> r;  // r[a][b](c,d) = R_{abcd}
  double operator()(int a, int b, int c, int d) const { return r[a][b](c, d); }
};

RiemannTensor riemann_at(const Chart& chart, const Vec4& x, double step);

/// Ricci tensor and scalar curvature in an orthonormal frame at x.
Mat4 ricci_at(const Chart& chart, const Vec4& x, double step);

/// Curvature operator on Lambda^2 in the adapted basis of the orthonormal
/// frame obtained from the coordinate frame by the SPD inverse square root of
/// the metric Gram matrix (orientation preserving). Internally the metric is
/// pulled back through that frame before differencing, so the stencil works
/// on an O(1)-conditioned metric and `step` is measured in orthonormal-frame
/// units; this keeps far-field points of radial charts accurate.
CurvatureOperator curvature_operator_at(const Chart& chart, const Vec4& x, double step = 1e-3);

/// Chart with metric multiplied by u^2 (rejects u <= 0 wherever evaluated).
Chart conformal_rescale(const Chart& chart, const ScalarFn& u);

/// Positive Laplace-Beltrami operator applied to u at x: -g^{ab}(d_a d_b u -
/// Gamma^c_{ab} d_c u), with plain (second-order) central differences for u.
double laplacian_at(const Chart& chart, const ScalarFn& u, const Vec4& x, double step);

/// The curvature function s - 2 sqrt(6) |W+| at x.
double frak_s_at(const Chart& chart, const Vec4& x, double step = 1e-3);

/// Residual of the conformal transformation law for frak S: with ghat = u^2 g,
///   frakS_ghat * u^3 - [6 Laplacian_g u + frakS_g * u]
/// at x. Vanishes as O(step^2).
double conformal_law_residual(const Chart& chart, const ScalarFn& u, const Vec4& x, double step);

}  // namespace einstein4
