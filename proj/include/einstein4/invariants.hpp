#pragma once

#include <string>

#include "einstein4/models.hpp"
#include "einstein4/quadrature.hpp"

namespace einstein4 {

// All curvature integrals gathered in one quadrature sweep (one decomposition
// per node serves every integrand).
struct CurvatureIntegrals {
  double volume = 0.0;
  double w_plus_sq = 0.0;       // int |W+|^2 dmu
  double w_minus_sq = 0.0;      // int |W-|^2 dmu
  double s_sq_over_24 = 0.0;    // int s^2/24 dmu
  double r0_sq_over_2 = 0.0;    // int |r0|^2/2 dmu
  double s_total = 0.0;         // int s dmu
};

CurvatureIntegrals curvature_integrals(const ModelManifold& m, const QuadratureSpec& spec);

double euler_characteristic(const ModelManifold& m,
                            const QuadratureSpec& spec = QuadratureSpec::curvature_defaults());
double signature(const ModelManifold& m,
                 const QuadratureSpec& spec = QuadratureSpec::curvature_defaults());

/// Total scalar curvature normalized by sqrt(volume) (the n = 4 case of the
/// normalized Einstein-Hilbert functional).
double total_scalar_functional(const ModelManifold& m,
                               const QuadratureSpec& spec = QuadratureSpec::curvature_defaults());

// chi < (5/8pi^2) int s^2/24 dmu, strict for non-flat Einstein metrics of
// non-negative sectional curvature.
struct EulerBoundCheck {
  bool applicable = false;  // Einstein and not flat
  double chi = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - chi, positive when strictly satisfied
  bool strict = false;
};
EulerBoundCheck euler_bound_check(const ModelManifold& m,
                                  const QuadratureSpec& spec = QuadratureSpec::curvature_defaults());

// The L^2 gap for W+ of Einstein metrics with s > 0:
//   int |W+|^2 >= int s^2/24, equality iff W+ is parallel;
// and, with W- nonzero, (2 chi - 3 tau)/3 >= (1/4pi^2) int s^2/24.
struct GapCheck {
  bool reversed_orientation = false;
  double int_w_plus_sq = 0.0;
  double int_w_minus_sq = 0.0;
  double int_s_sq_over_24 = 0.0;
  bool gap_applies = false;  // s > 0 and W+ not identically zero
  bool gap_ok = false;
  bool gap_equality = false;  // certifies parallel W+
  std::string excluded_reason;
  double corollary_lhs = 0.0;  // (2 chi - 3 tau)/3
  double corollary_rhs = 0.0;  // (1/4pi^2) int s^2/24
  bool corollary_applies = false;  // W- not identically zero
  bool corollary_ok = false;
  bool corollary_equality = false;
};
GapCheck weyl_gap_check(const ModelManifold& m, bool reverse_orientation,
                        const QuadratureSpec& spec = QuadratureSpec::curvature_defaults());

// Rescale so r = 3g and compare the recomputed volume against the round
// 4-sphere: Bishop's bound.
struct BishopCheck {
  bool applicable = false;  // Einstein with lambda > 0
  double rescaled_volume = 0.0;
  double sphere_volume = 0.0;  // 8 pi^2 / 3
  double margin = 0.0;         // sphere - rescaled
  bool ok = false;
};
BishopCheck bishop_volume_check(const ModelManifold& m,
                                const QuadratureSpec& spec = QuadratureSpec::defaults());

// The numeric windows that pin down the standard metrics as isolated critical
// values of the normalized total-scalar-curvature functional.
struct FunctionalWindows {
  double s_fubini_study = 0.0;   // 12 pi sqrt(2)
  double s_round_sphere = 0.0;   // 8 pi sqrt(6)
  double cp2_upper = 0.0;        // 4 pi sqrt(6) = s_fubini_study / sqrt(3)
  double s4_lower = 0.0;         // 8 pi sqrt(6/5)
  double s4_upper = 0.0;         // 8 pi sqrt(2)
  double identity_residual = 0.0;  // |s_fs/sqrt(3) - cp2_upper|
  bool round_outside_window = false;
};
FunctionalWindows functional_windows_report();

struct InvariantReport {
  std::string model;
  double volume = 0.0;
  double euler_char = 0.0;
  double signature = 0.0;
  double functional = 0.0;
  CurvatureIntegrals integrals;
  EulerBoundCheck euler_bound;
  GapCheck gap;
  GapCheck gap_reversed;
  BishopCheck bishop;
};
InvariantReport invariant_report(const ModelManifold& m,
                                 const QuadratureSpec& spec = QuadratureSpec::curvature_defaults());

}  // namespace einstein4
