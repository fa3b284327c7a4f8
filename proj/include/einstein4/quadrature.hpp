#pragma once

#include <array>
#include <functional>
#include <vector>

#include "einstein4/chart.hpp"

namespace einstein4 {

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration; cached).
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int order);

enum class Scheme {
  ProductGauss,  // full product quadrature over the chart parameters
  Homogeneous,   // pointwise value at the base point times the volume
};

struct QuadratureSpec {
  Scheme scheme = Scheme::ProductGauss;
  // Per-axis orders. For RadialR4 charts the axes are (t, theta1, theta2, phi).
  std::array<int, 4> orders = {16, 12, 12, 12};
  double margin = 0.0;  // relative shrink of each box axis, keeps off the deficiency
  double fd_step = 1e-3;

  static QuadratureSpec defaults() { return {}; }
  static QuadratureSpec curvature_defaults() {
    QuadratureSpec s;
    s.orders = {16, 10, 10, 10};
    return s;
  }
  void validate() const;
};

/// Integral of f against the Riemannian measure sqrt(det g) d^4x over the
/// chart. Deterministic node order with compensated (Kahan) accumulation.
/// Throws if f is non-finite at a node (reporting the node), or on an invalid
/// spec.
double integrate(const Chart& chart, const std::function<double(const Vec4&)>& f,
                 const QuadratureSpec& spec);

/// Several integrands in one sweep (one curvature evaluation per node serves
/// all of them). Component k of the result integrates component k of f.
std::vector<double> integrate_many(const Chart& chart, int components,
                                   const std::function<std::vector<double>(const Vec4&)>& f,
                                   const QuadratureSpec& spec);

double chart_volume(const Chart& chart, const QuadratureSpec& spec);

}  // namespace einstein4
