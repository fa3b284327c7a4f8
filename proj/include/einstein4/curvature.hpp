#pragma once

#include "einstein4/bivector.hpp"
#include "einstein4/linalg.hpp"
#include "einstein4/sym3.hpp"

namespace einstein4 {

// Symmetric operator on Lambda^2 in the adapted basis, block form
//   [ W+ + s/12   r0      ]
//   [ r0^t        W- + s/12 ]
// Entries carry curvature units (length^-2). Construction rejects
// non-symmetric input and unequal diagonal-block traces (each must be s/4);
// what is stored is exactly symmetric.
class CurvatureOperator {
 public:
  CurvatureOperator() : m_(Mat6::Zero()) {}
  explicit CurvatureOperator(const Mat6& m, double sym_tol = 1e-9, double trace_tol = 1e-9);

  static CurvatureOperator identity() { return CurvatureOperator(Mat6::Identity()); }

  const Mat6& matrix() const { return m_; }
  Mat3 block_pp() const { return m_.topLeftCorner<3, 3>(); }
  Mat3 block_pm() const { return m_.topRightCorner<3, 3>(); }
  Mat3 block_mm() const { return m_.bottomRightCorner<3, 3>(); }

  Bivector6 apply(const Bivector6& phi) const { return Bivector6(m_ * phi.coords()); }

 private:
  Mat6 m_;
};

// The primitive pieces: trace-free Weyl halves, the trace-free Ricci block,
// and the scalar curvature. Norm conventions (endomorphism Frobenius norms,
// |r0|^2 = 4 Frob^2(mixed)) are calibrated so the Gauss-Bonnet and signature
// integrands reproduce the known (chi, tau) of the model spaces.
struct CurvatureDecomposition {
  TraceFree3 w_plus;
  TraceFree3 w_minus;
  Mat3 mixed = Mat3::Zero();
  double scalar = 0.0;

  bool is_einstein(double tol = 1e-9) const {
    return mixed.norm() <= tol * std::max(1.0, std::abs(scalar) + w_plus.frobenius() +
                                                   w_minus.frobenius());
  }
  double w_plus_norm_sq() const { return w_plus.frobenius_sq(); }
  double w_minus_norm_sq() const { return w_minus.frobenius_sq(); }
  double r0_norm_sq() const { return 4.0 * mixed.squaredNorm(); }
};

CurvatureDecomposition decompose(const CurvatureOperator& r);
CurvatureOperator reconstruct(const CurvatureDecomposition& d);

/// Swap the roles of Lambda^+ and Lambda^- (reversing the orientation).
CurvatureDecomposition reverse_orientation(const CurvatureDecomposition& d);

/// Chern-Gauss-Bonnet integrand (1/8pi^2)[|W+|^2 + |W-|^2 + s^2/24 - |r0|^2/2].
double gauss_bonnet_integrand(const CurvatureDecomposition& d);

/// Hirzebruch signature integrand (1/12pi^2)[|W+|^2 - |W-|^2].
double signature_integrand(const CurvatureDecomposition& d);

// Pointwise bound s/sqrt(6) >= |W+| + |W-|, which holds for Einstein
// operators of non-negative sectional curvature. Rejects non-Einstein input.
struct WeylSumBoundReport {
  double lhs = 0.0;     // s / sqrt(6)
  double rhs = 0.0;     // |W+| + |W-|
  double margin = 0.0;  // lhs - rhs
  bool ok = false;
};
WeylSumBoundReport weyl_sum_bound_check(const CurvatureDecomposition& d, double tol = 1e-10);

// For Einstein metrics with parallel W+ the Weitzenboeck identity for
// harmonic W+ reduces to (s/2)|W+|^2 = 18 det W+.
struct WeitzenbockReport {
  double lhs = 0.0;  // (s/2) |W+|^2
  double rhs = 0.0;  // 18 det W+
  double residual = 0.0;  // relative
};
WeitzenbockReport weitzenbock_parallel_check(const CurvatureDecomposition& d);

}  // namespace einstein4
