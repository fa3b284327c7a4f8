#pragma once

#include <cmath>

#include "einstein4/curvature.hpp"
#include "einstein4/rng.hpp"

namespace einstein4 {

inline Mat3 random_general3(Rng& rng, double scale = 1.0) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = scale * rng.normal();
  return m;
}

inline CurvatureDecomposition random_decomposition(Rng& rng, double scale = 1.0) {
  CurvatureDecomposition d;
  d.w_plus = TraceFree3(rng.trace_free_symmetric3(scale));
  d.w_minus = TraceFree3(rng.trace_free_symmetric3(scale));
  d.mixed = random_general3(rng, scale);
  d.scalar = scale * 10.0 * (rng.uniform() - 0.3);
  return d;
}

/// Valid operator (symmetric, equal block traces) with generic blocks.
inline CurvatureOperator random_curvature_operator(Rng& rng, double scale = 1.0) {
  return reconstruct(random_decomposition(rng, scale));
}

/// Einstein-type decomposition whose minimal sectional curvature is >= 0:
/// the scalar part is drawn at or above the borderline value -6(l+ + l-).
inline CurvatureDecomposition random_einstein_nonneg(Rng& rng, double scale = 1.0) {
  CurvatureDecomposition d;
  d.w_plus = TraceFree3(rng.trace_free_symmetric3(scale));
  d.w_minus = TraceFree3(rng.trace_free_symmetric3(scale));
  d.mixed = Mat3::Zero();
  const double s_min = -6.0 * (d.w_plus.lambda_min() + d.w_minus.lambda_min());
  d.scalar = s_min + rng.uniform(0.0, 2.0) * (1.0 + s_min);
  return d;
}

/// Einstein-type decomposition violating s/sqrt(6) >= |W+| + |W-|.
inline CurvatureDecomposition random_weyl_violator(Rng& rng, double scale = 1.0) {
  CurvatureDecomposition d;
  double sum = 0.0;
  do {
    d.w_plus = TraceFree3(rng.trace_free_symmetric3(scale));
    d.w_minus = TraceFree3(rng.trace_free_symmetric3(scale));
    sum = d.w_plus.frobenius() + d.w_minus.frobenius();
  } while (sum < 1e-6 * scale);
  d.mixed = Mat3::Zero();
  d.scalar = std::sqrt(6.0) * sum * rng.uniform(-0.5, 0.999);
  return d;
}

}  // namespace einstein4
