#pragma once

#include "einstein4/linalg.hpp"

namespace einstein4 {

struct Sym3Eigen {
  Vec3 values;   // ascending
  Mat3 vectors;  // columns, matching values
  bool used_jacobi_fallback = false;
};

/// Eigenvalues of a symmetric 3x3 matrix, ascending. Closed-form
/// trigonometric solve of the characteristic cubic; falls back to Jacobi
/// iteration when the (normalized) discriminant is within 1e-13 of zero,
/// i.e. near a repeated root, where the analytic branch loses accuracy.
Vec3 sym3_eigenvalues(const Mat3& a);

/// Eigenvalues and eigenvectors. Vectors come from the cross-product rows
/// of (A - lambda I) on the analytic branch, from Jacobi otherwise.
Sym3Eigen sym3_eigen(const Mat3& a);

/// Symmetric trace-free 3x3 matrix (a Weyl half, W+ or W-). Construction
/// validates symmetry and trace within tolerance, then stores the exactly
/// symmetrized, exactly trace-free part.
class TraceFree3 {
 public:
  TraceFree3() : m_(Mat3::Zero()) {}
  explicit TraceFree3(const Mat3& m, double tol = 1e-12);

  static TraceFree3 from_diag(double a, double b, double c);  // requires a+b+c ~ 0

  const Mat3& matrix() const { return m_; }
  Vec3 eigenvalues() const { return sym3_eigenvalues(m_); }
  double frobenius_sq() const { return m_.squaredNorm(); }
  double frobenius() const { return m_.norm(); }
  double det() const { return m_.determinant(); }
  double lambda_min() const { return eigenvalues()[0]; }

 private:
  Mat3 m_;
};

// |lambda_min| >= ||M||_F / sqrt(6) for symmetric trace-free M, with equality
// exactly on the orbit of diag(-a,-a,2a), a >= 0. `cross_term` is the
// intermediate 2[lambda^2 - mu*nu], which must equal ||M||_F^2.
struct EigenBoundReport {
  double lambda_min = 0.0;
  double frobenius = 0.0;
  double ratio = 1.0;       // |lambda_min| * sqrt(6) / ||M||_F, 1 when saturated
  double cross_term = 0.0;  // 2 [lambda^2 - mu nu]
  bool saturated = false;   // doubly degenerate lowest eigenvalue (or M = 0)
  bool ok = false;
};
EigenBoundReport eigen_lower_bound_report(const TraceFree3& m);

// 3*sqrt(6)*det(M) <= ||M||_F^3, sharp on the same orbit as above.
struct DetBoundReport {
  double lhs = 0.0;  // 3 sqrt(6) det
  double rhs = 0.0;  // ||M||^3
  bool ok = false;
  bool saturated = false;  // two lowest eigenvalues coincide and are <= 0
};
DetBoundReport det_bound_check(const TraceFree3& m);

}  // namespace einstein4
