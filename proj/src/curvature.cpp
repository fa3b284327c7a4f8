#include "einstein4/curvature.hpp"

#include <cmath>
#include <stdexcept>

namespace einstein4 {

CurvatureOperator::CurvatureOperator(const Mat6& m, double sym_tol, double trace_tol) {
  const double scale = std::max(1.0, m.norm());
  if ((m - m.transpose()).norm() > sym_tol * scale) {
    throw std::invalid_argument("CurvatureOperator: matrix is not symmetric");
  }
  const double tr_pp = m.topLeftCorner<3, 3>().trace();
  const double tr_mm = m.bottomRightCorner<3, 3>().trace();
  if (std::abs(tr_pp - tr_mm) > trace_tol * scale) {
    throw std::invalid_argument(
        "CurvatureOperator: diagonal blocks have unequal traces (not an algebraic "
        "curvature operator)");
  }
  m_ = 0.5 * (m + m.transpose());
}

CurvatureDecomposition decompose(const CurvatureOperator& r) {
  CurvatureDecomposition d;
  const Mat3 a = r.block_pp();
  const Mat3 c = r.block_mm();
  d.scalar = 2.0 * (a.trace() + c.trace());
  const Mat3 id_part = (d.scalar / 12.0) * Mat3::Identity();
  // The block traces were validated at construction; TraceFree3 removes the
  // residual exactly.
  d.w_plus = TraceFree3(a - id_part, 1e-6);
  d.w_minus = TraceFree3(c - id_part, 1e-6);
  d.mixed = r.block_pm();
  return d;
}

CurvatureOperator reconstruct(const CurvatureDecomposition& d) {
  Mat6 m;
  const Mat3 id_part = (d.scalar / 12.0) * Mat3::Identity();
  m.topLeftCorner<3, 3>() = d.w_plus.matrix() + id_part;
  m.bottomRightCorner<3, 3>() = d.w_minus.matrix() + id_part;
  m.topRightCorner<3, 3>() = d.mixed;
  m.bottomLeftCorner<3, 3>() = d.mixed.transpose();
  return CurvatureOperator(m);
}

CurvatureDecomposition reverse_orientation(const CurvatureDecomposition& d) {
  // Under e3 -> -e3 the basis maps (f1+,f2+,f3+) -> (f1-,f2-,-f3-) and vice
  // versa; conjugate the blocks by d3 = diag(1,1,-1) while swapping them.
  Mat3 d3 = Mat3::Identity();
  d3(2, 2) = -1.0;
  CurvatureDecomposition out;
  out.scalar = d.scalar;
  out.w_plus = TraceFree3(d3 * d.w_minus.matrix() * d3);
  out.w_minus = TraceFree3(d3 * d.w_plus.matrix() * d3);
  out.mixed = d3 * d.mixed.transpose() * d3;
  return out;
}

double gauss_bonnet_integrand(const CurvatureDecomposition& d) {
  return (d.w_plus_norm_sq() + d.w_minus_norm_sq() + sq(d.scalar) / 24.0 -
          d.r0_norm_sq() / 2.0) /
         (8.0 * M_PI * M_PI);
}

double signature_integrand(const CurvatureDecomposition& d) {
  return (d.w_plus_norm_sq() - d.w_minus_norm_sq()) / (12.0 * M_PI * M_PI);
}

WeylSumBoundReport weyl_sum_bound_check(const CurvatureDecomposition& d, double tol) {
  if (!d.is_einstein(1e-9)) {
    throw std::invalid_argument("weyl_sum_bound_check: operator is not Einstein");
  }
  WeylSumBoundReport rep;
  rep.lhs = d.scalar / std::sqrt(6.0);
  rep.rhs = d.w_plus.frobenius() + d.w_minus.frobenius();
  rep.margin = rep.lhs - rep.rhs;
  rep.ok = rep.margin >= -tol * std::max(1.0, std::abs(rep.lhs) + rep.rhs);
  return rep;
}

WeitzenbockReport weitzenbock_parallel_check(const CurvatureDecomposition& d) {
  WeitzenbockReport rep;
  rep.lhs = 0.5 * d.scalar * d.w_plus_norm_sq();
  rep.rhs = 18.0 * d.w_plus.det();
  rep.residual = std::abs(rep.lhs - rep.rhs) / std::max(1.0, std::abs(rep.lhs));
  return rep;
}

}  // namespace einstein4
