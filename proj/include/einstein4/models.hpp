#pragma once

#include <optional>
#include <string>
#include <vector>

#include "einstein4/chart.hpp"

namespace einstein4 {

/// Closed-form reference data for a model manifold, used as test oracles and
/// in CLI reports.
struct ReferenceData {
  double euler_char = 0.0;
  double signature = 0.0;
  double volume = 0.0;
  double scalar_curv = 0.0;        // s
  double einstein_constant = 0.0;  // lambda in r = lambda g (if Einstein)
  bool einstein = false;
  bool flat = false;
  Vec3 w_plus_spectrum = Vec3::Zero();   // ascending
  Vec3 w_minus_spectrum = Vec3::Zero();  // ascending
  double k_min = 0.0;  // sectional curvature range
  double k_max = 0.0;
};

struct ModelManifold {
  std::string name;
  Chart chart;
  ReferenceData ref;
  bool homogeneous = true;  // invariant integrands are constant on the model
};

/// Round 4-sphere of the given radius, in a stereographic (conformally flat)
/// chart covering all but one point.
ModelManifold round_sphere(double radius);

/// Complex projective plane with the Fubini-Study metric normalized to
/// sectional curvatures in [1,4] and total volume pi^2/2, in the affine chart
/// (misses a measure-zero line). The Kaehler form is self-dual with the
/// chart's orientation.
ModelManifold fubini_study();

/// Product of round 2-spheres of radii a and b, in product spherical angles.
/// Einstein iff a == b.
ModelManifold product_spheres(double a, double b);

/// Flat square 4-torus with the given side, in the identity chart.
ModelManifold flat_torus(double side);

/// The four standard models at unit parameters.
std::vector<ModelManifold> catalog();

/// Lookup by CLI name: s4 | cp2 | s2xs2 | t4.
ModelManifold model_by_name(const std::string& name, double param_a = 1.0, double param_b = 1.0);

/// The model with its metric multiplied by u^2. Reference curvature data no
/// longer applies except for the topological invariants.
ModelManifold conformal_model(const ModelManifold& m, const ScalarFn& u);

}  // namespace einstein4
