#include "einstein4/sym3.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace einstein4 {

namespace {

constexpr double kDiscriminantCutoff = 1e-13;

struct TrigResult {
  Vec3 values;
  bool degenerate;  // discriminant too close to zero for the analytic branch
};

TrigResult trig_eigenvalues(const Mat3& a) {
  const double q = a.trace() / 3.0;
  Mat3 b = a;
  b.diagonal().array() -= q;
  const double p2 = b.squaredNorm() / 6.0;
  const double scale = std::max(1.0, a.squaredNorm());

  TrigResult out;
  if (p2 <= kDiscriminantCutoff * scale) {
    // Nearly a multiple of the identity.
    out.values = Vec3::Constant(q);
    out.degenerate = true;
    return out;
  }
  const double p = std::sqrt(p2);
  const double r = std::clamp((b / p).determinant() / 2.0, -1.0, 1.0);
  // (1 - r^2) ~ normalized cubic discriminant; zero iff repeated root.
  out.degenerate = (1.0 - r * r) <= kDiscriminantCutoff;

  const double phi = std::acos(r) / 3.0;
  const double e_max = q + 2.0 * p * std::cos(phi);
  const double e_min = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
  out.values = Vec3(e_min, 3.0 * q - e_max - e_min, e_max);
  return out;
}

Sym3Eigen jacobi_eigen(const Mat3& a) {
  Mat3 d = a;
  Mat3 v = Mat3::Identity();
  const double scale = std::max(1.0, a.norm());
  for (int sweep = 0; sweep < 64; ++sweep) {
    const double off = sq(d(0, 1)) + sq(d(0, 2)) + sq(d(1, 2));
    if (off <= sq(1e-16 * scale)) break;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (std::abs(d(p, q)) <= 1e-300) continue;
        const double theta = (d(q, q) - d(p, p)) / (2.0 * d(p, q));
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        Mat3 rot = Mat3::Identity();
        rot(p, p) = rot(q, q) = c;
        rot(p, q) = s;
        rot(q, p) = -s;
        d = rot.transpose() * d * rot;
        d(p, q) = d(q, p) = 0.0;
        v = v * rot;
      }
    }
  }
  // Sort ascending.
  std::array<int, 3> order = {0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int i, int j) { return d(i, i) < d(j, j); });
  Sym3Eigen out;
  for (int k = 0; k < 3; ++k) {
    out.values[k] = d(order[k], order[k]);
    out.vectors.col(k) = v.col(order[k]);
  }
  out.used_jacobi_fallback = true;
  return out;
}

// Eigenvector of `a` for eigenvalue `lambda` via the cross product of the two
// most independent rows of (a - lambda I). Returns false if conditioning is poor.
bool eigenvector_for(const Mat3& a, double lambda, double scale, Vec3* out) {
  Mat3 m = a;
  m.diagonal().array() -= lambda;
  Vec3 best = Vec3::Zero();
  double best_norm = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Vec3 c = m.row(i).cross(m.row((i + 1) % 3));
    if (c.norm() > best_norm) {
      best_norm = c.norm();
      best = c;
    }
  }
  if (best_norm <= 1e-10 * sq(scale)) return false;
  *out = best / best_norm;
  return true;
}

}  // namespace

Vec3 sym3_eigenvalues(const Mat3& a) {
  const TrigResult t = trig_eigenvalues(a);
  if (!t.degenerate) return t.values;
  return jacobi_eigen(a).values;
}

Sym3Eigen sym3_eigen(const Mat3& a) {
  const TrigResult t = trig_eigenvalues(a);
  if (t.degenerate) return jacobi_eigen(a);

  Sym3Eigen out;
  out.values = t.values;
  const double scale = std::max(1.0, a.norm());
  Vec3 v_min, v_max;
  if (!eigenvector_for(a, t.values[0], scale, &v_min) ||
      !eigenvector_for(a, t.values[2], scale, &v_max)) {
    return jacobi_eigen(a);
  }
  out.vectors.col(0) = v_min;
  out.vectors.col(2) = v_max;
  out.vectors.col(1) = v_max.cross(v_min).normalized();
  return out;
}

TraceFree3::TraceFree3(const Mat3& m, double tol) {
  const double scale = std::max(1.0, m.norm());
  if ((m - m.transpose()).norm() > tol * scale) {
    throw std::invalid_argument("TraceFree3: matrix is not symmetric");
  }
  if (std::abs(m.trace()) > tol * scale) {
    throw std::invalid_argument("TraceFree3: matrix has nonzero trace");
  }
  m_ = 0.5 * (m + m.transpose());
  const double t = m_.trace() / 3.0;
  m_.diagonal().array() -= t;
}

TraceFree3 TraceFree3::from_diag(double a, double b, double c) {
  Mat3 m = Mat3::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return TraceFree3(m);
}

EigenBoundReport eigen_lower_bound_report(const TraceFree3& m) {
  EigenBoundReport rep;
  rep.frobenius = m.frobenius();
  if (rep.frobenius == 0.0) {
    // Zero matrix: bound trivially holds, reported as saturated by convention.
    rep.lambda_min = 0.0;
    rep.ratio = 1.0;
    rep.cross_term = 0.0;
    rep.saturated = true;
    rep.ok = true;
    return rep;
  }
  const Vec3 ev = m.eigenvalues();
  rep.lambda_min = ev[0];
  rep.cross_term = 2.0 * (sq(ev[0]) - ev[1] * ev[2]);
  rep.ratio = std::abs(ev[0]) * std::sqrt(6.0) / rep.frobenius;
  rep.saturated = std::abs(ev[1] - ev[0]) <= 1e-8 * rep.frobenius;
  rep.ok = std::abs(ev[0]) >= rep.frobenius / std::sqrt(6.0) - 1e-12 * rep.frobenius;
  return rep;
}

DetBoundReport det_bound_check(const TraceFree3& m) {
  DetBoundReport rep;
  rep.lhs = 3.0 * std::sqrt(6.0) * m.det();
  const double f = m.frobenius();
  rep.rhs = f * f * f;
  rep.ok = rep.lhs <= rep.rhs + 1e-10 * std::max(1.0, rep.rhs);
  if (f == 0.0) {
    rep.saturated = true;
    return rep;
  }
  const Vec3 ev = m.eigenvalues();
  rep.saturated = std::abs(ev[1] - ev[0]) <= 1e-8 * f && ev[1] <= 1e-12 * f;
  return rep;
}

}  // namespace einstein4
