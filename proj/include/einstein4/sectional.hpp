#pragma once

#include <cstdint>

#include "einstein4/curvature.hpp"

namespace einstein4 {

/// <phi, R phi> for a unit simple bivector phi; this is the sectional
/// curvature of the plane dual to phi. Rejects non-simple or non-unit input.
double sectional_curvature(const CurvatureOperator& r, const Bivector6& phi);

struct MinSectionalOptions {
  int random_starts = 8;
  int max_iterations = 200;
  double tol = 1e-13;
  std::uint64_t seed = 0x5EC71074ull;
};

struct MinSectionalResult {
  double value = 0.0;
  Vec3 u = Vec3::Zero();  // phi = (u (+) v)/sqrt(2), |u| = |v| = 1
  Vec3 v = Vec3::Zero();
  bool certified = false;  // alternation converged and the KKT residual is small
  int iterations = 0;

  Bivector6 argmin() const { return Bivector6(u / std::sqrt(2.0), v / std::sqrt(2.0)); }
};

// Minimizes (1/2)<u,Au> + (1/2)<v,Cv> + <u,Bv> over unit u, v in R^3, i.e.
// the sectional curvature over all 2-planes. Alternating exact sphere-
// constrained solves from multi-start, refined by projected gradient. Among
// equal minima returns the lexicographically smallest (u, v) after sign
// normalization.
MinSectionalResult min_sectional(const CurvatureOperator& r,
                                 const MinSectionalOptions& opts = {});

/// Einstein shortcut: s/12 + (lambda+ + lambda-)/2 with lambda+- the smallest
/// eigenvalues of W+-. Rejects non-Einstein input.
double min_sectional_einstein(const CurvatureDecomposition& d);

}  // namespace einstein4
