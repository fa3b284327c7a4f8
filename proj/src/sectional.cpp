#include "einstein4/sectional.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "einstein4/rng.hpp"

namespace einstein4 {

double sectional_curvature(const CurvatureOperator& r, const Bivector6& phi) {
  if (!phi.is_unit(1e-9)) {
    throw std::invalid_argument("sectional_curvature: bivector is not unit length");
  }
  if (!phi.is_simple(1e-9)) {
    throw std::invalid_argument("sectional_curvature: bivector is not simple");
  }
  return phi.coords().dot(r.matrix() * phi.coords());
}

namespace {

// Global minimizer of q(w) = (1/2) w^t M w + b^t w over the unit sphere,
// via the secular equation in the eigenbasis of M.
Vec3 sphere_quadratic_min(const Sym3Eigen& eig, const Vec3& b) {
  const Vec3& lam = eig.values;
  const Vec3 c = eig.vectors.transpose() * b;
  const double scale = std::max({1.0, std::abs(lam[0]), std::abs(lam[2]), c.norm()});

  auto w_of = [&](double sigma) {
    Vec3 w;
    for (int i = 0; i < 3; ++i) w[i] = -c[i] / (lam[i] - sigma);
    return w;
  };

  // |w(sigma)|^2 is increasing on (-inf, lam_min); find |w| = 1 there.
  const double eps = 1e-13 * scale;
  double hi = lam[0] - eps;
  double w_hi_sq = 0.0;
  for (int i = 0; i < 3; ++i) w_hi_sq += sq(c[i] / (lam[i] - hi));

  Vec3 w;
  if (w_hi_sq >= 1.0) {
    double lo = lam[0] - c.norm() - scale;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (w_of(mid).squaredNorm() < 1.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    w = w_of(0.5 * (lo + hi));
  } else {
    // Hard case: the multiplier sits at lam_min; fill the deficit along the
    // bottom eigendirection, choosing the sign by objective value.
    Vec3 w0 = Vec3::Zero();
    for (int i = 0; i < 3; ++i) {
      if (lam[i] - lam[0] > eps) w0[i] = -c[i] / (lam[i] - lam[0]);
    }
    const double t = std::sqrt(std::max(0.0, 1.0 - w0.squaredNorm()));
    Vec3 wp = w0, wm = w0;
    wp[0] += t;
    wm[0] -= t;
    auto val = [&](const Vec3& x) {
      return 0.5 * x.dot(lam.asDiagonal() * x) + c.dot(x);
    };
    w = val(wp) <= val(wm) ? wp : wm;
  }
  w.normalize();
  return eig.vectors * w;
}

struct Objective {
  Mat3 a, b, c;
  double operator()(const Vec3& u, const Vec3& v) const {
    return 0.5 * u.dot(a * u) + 0.5 * v.dot(c * v) + u.dot(b * v);
  }
};

void normalize_signs(Vec3& u, Vec3& v) {
  // Flip (u, v) -> (-u, -v) so that the first nonzero component of u is > 0.
  for (int i = 0; i < 3; ++i) {
    if (std::abs(u[i]) > 1e-12) {
      if (u[i] < 0.0) {
        u = -u;
        v = -v;
      }
      return;
    }
  }
}

bool lex_less(const Vec3& u1, const Vec3& v1, const Vec3& u2, const Vec3& v2) {
  for (int i = 0; i < 3; ++i) {
    if (u1[i] != u2[i]) return u1[i] < u2[i];
  }
  for (int i = 0; i < 3; ++i) {
    if (v1[i] != v2[i]) return v1[i] < v2[i];
  }
  return false;
}

}  // namespace

MinSectionalResult min_sectional(const CurvatureOperator& r, const MinSectionalOptions& opts) {
  const Objective f{r.block_pp(), r.block_pm(), r.block_mm()};
  const Sym3Eigen eig_a = sym3_eigen(f.a);
  const Sym3Eigen eig_c = sym3_eigen(f.c);
  const double scale = std::max(1.0, r.matrix().norm());

  std::vector<std::pair<Vec3, Vec3>> starts;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Vec3 u = eig_a.vectors.col(i);
      Vec3 v = eig_c.vectors.col(j);
      if (u.dot(f.b * v) > 0.0) v = -v;  // favor the descending cross term
      starts.emplace_back(u, v);
    }
  }
  Rng rng(opts.seed);
  for (int k = 0; k < opts.random_starts; ++k) {
    starts.emplace_back(rng.unit_vec3(), rng.unit_vec3());
  }

  MinSectionalResult best;
  best.value = std::numeric_limits<double>::infinity();

  for (const auto& [u0, v0] : starts) {
    Vec3 u = u0, v = v0;
    double value = f(u, v);
    int it = 0;
    bool converged = false;
    for (; it < opts.max_iterations; ++it) {
      u = sphere_quadratic_min(eig_a, f.b * v);
      v = sphere_quadratic_min(eig_c, f.b.transpose() * u);
      const double next = f(u, v);
      if (value - next <= opts.tol * scale) {
        value = std::min(value, next);
        converged = true;
        break;
      }
      value = next;
    }

    // Projected-gradient polish.
    const double eta = 1.0 / (scale + 1.0);
    for (int pg = 0; pg < 32; ++pg) {
      const Vec3 gu = f.a * u + f.b * v;
      const Vec3 gv = f.c * v + f.b.transpose() * u;
      const Vec3 tu = gu - gu.dot(u) * u;
      const Vec3 tv = gv - gv.dot(v) * v;
      if (tu.norm() + tv.norm() <= 1e-12 * scale) break;
      const Vec3 un = (u - eta * tu).normalized();
      const Vec3 vn = (v - eta * tv).normalized();
      const double next = f(un, vn);
      if (next >= value - 1e-16 * scale) break;
      u = un;
      v = vn;
      value = next;
    }

    // KKT residual: gradients must be radial at a constrained stationary point.
    const Vec3 gu = f.a * u + f.b * v;
    const Vec3 gv = f.c * v + f.b.transpose() * u;
    const double kkt =
        (gu - gu.dot(u) * u).norm() + (gv - gv.dot(v) * v).norm();
    const bool certified = converged && kkt <= 1e-8 * scale;

    normalize_signs(u, v);
    const double tie_tol = 1e-9 * scale;
    if (value < best.value - tie_tol ||
        (value <= best.value + tie_tol && lex_less(u, v, best.u, best.v))) {
      const bool improves = value < best.value - tie_tol;
      best.value = std::min(best.value, value);
      best.u = u;
      best.v = v;
      best.iterations = it;
      if (improves) {
        best.certified = certified;
      } else {
        best.certified = best.certified || certified;
      }
    }
  }
  return best;
}

double min_sectional_einstein(const CurvatureDecomposition& d) {
  if (!d.is_einstein(1e-9)) {
    throw std::invalid_argument("min_sectional_einstein: operator is not Einstein");
  }
  const double lam_p = std::min(0.0, d.w_plus.lambda_min());
  const double lam_m = std::min(0.0, d.w_minus.lambda_min());
  return d.scalar / 12.0 + 0.5 * (lam_p + lam_m);
}

}  // namespace einstein4
