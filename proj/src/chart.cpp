#include "einstein4/chart.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "einstein4/rng.hpp"

namespace einstein4 {

namespace {

Vec4 shifted(const Vec4& x, int axis, double delta) {
  Vec4 y = x;
  y[axis] += delta;
  return y;
}

// Richardson-extrapolated central first derivative: (4 D(h/2) - D(h)) / 3.
Mat4 metric_d1(const MetricFn& g, const Vec4& x, int a, double h) {
  const Mat4 d_h = (g(shifted(x, a, h)) - g(shifted(x, a, -h))) / (2.0 * h);
  const Mat4 d_h2 = (g(shifted(x, a, 0.5 * h)) - g(shifted(x, a, -0.5 * h))) / h;
  return (4.0 * d_h2 - d_h) / 3.0;
}

// Richardson-extrapolated central second derivative d_a d_b of the metric.
Mat4 metric_d2(const MetricFn& g, const Vec4& x, int a, int b, double h) {
  auto stencil = [&](double hh) -> Mat4 {
    if (a == b) {
      return (g(shifted(x, a, hh)) - 2.0 * g(x) + g(shifted(x, a, -hh))) / (hh * hh);
    }
    Vec4 pp = shifted(shifted(x, a, hh), b, hh);
    Vec4 pm = shifted(shifted(x, a, hh), b, -hh);
    Vec4 mp = shifted(shifted(x, a, -hh), b, hh);
    Vec4 mm = shifted(shifted(x, a, -hh), b, -hh);
    return (g(pp) + g(mm) - g(pm) - g(mp)) / (4.0 * hh * hh);
  };
  return (4.0 * stencil(0.5 * h) - stencil(h)) / 3.0;
}

struct MetricJet {
  Mat4 g;
  Mat4 g_inv;
  std::array<Mat4, 4> d1;                  // d1[a](b,c) = d_a g_{bc}
  std::array<std::array<Mat4, 4>, 4> d2;   // d2[a][b](c,d) = d_a d_b g_{cd}
  std::array<Mat4, 4> gamma_first;         // gamma_first[e](b,c) = Gamma_{e,bc}
};

MetricJet metric_jet(const Chart& chart, const Vec4& x, double step, bool need_second) {
  MetricJet jet;
  jet.g = metric_at(chart, x);
  jet.g_inv = jet.g.inverse();
  for (int a = 0; a < 4; ++a) jet.d1[a] = metric_d1(chart.metric, x, a, step);
  if (need_second) {
    for (int a = 0; a < 4; ++a) {
      for (int b = a; b < 4; ++b) {
        jet.d2[a][b] = metric_d2(chart.metric, x, a, b, step);
        jet.d2[b][a] = jet.d2[a][b];
      }
    }
  }
  // First-kind symbols Gamma_{e,bc} = (d_b g_{ec} + d_c g_{eb} - d_e g_{bc})/2.
  for (int e = 0; e < 4; ++e) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        jet.gamma_first[e](b, c) =
            0.5 * (jet.d1[b](e, c) + jet.d1[c](e, b) - jet.d1[e](b, c));
      }
    }
  }
  return jet;
}

RiemannTensor riemann_from_jet(const MetricJet& jet) {
  RiemannTensor rt;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        for (int d = 0; d < 4; ++d) {
          double val = 0.5 * (jet.d2[b][c](a, d) + jet.d2[a][d](b, c) -
                              jet.d2[a][c](b, d) - jet.d2[b][d](a, c));
          for (int e = 0; e < 4; ++e) {
            for (int f = 0; f < 4; ++f) {
              val += jet.g_inv(e, f) * (jet.gamma_first[e](d, a) * jet.gamma_first[f](c, b) -
                                        jet.gamma_first[e](c, a) * jet.gamma_first[f](d, b));
            }
          }
          rt.r[a][b](c, d) = val;
        }
      }
    }
  }
  return rt;
}

// Pull the metric back through the orthonormalizing frame at x: the pulled
// back metric is the identity at the center and varies on the curvature
// scale, so differencing it stays well conditioned even where the chart
// coordinates are degenerate (far field of the radial charts, near the poles
// of angle charts).
struct NormalizedPatch {
  Chart chart;      // metric y -> E^t g(x + E y) E, symmetrized
  Mat4 frame;       // E = g(x)^{-1/2}, also the frame the operator refers to
};

NormalizedPatch normalized_patch(const Chart& chart, const Vec4& x) {
  NormalizedPatch out;
  const Mat4 e = spd_inverse_sqrt(metric_at(chart, x));
  const MetricFn base = chart.metric;
  out.frame = e;
  out.chart.name = chart.name + "_normalized";
  out.chart.kind = ChartKind::RadialR4;  // unbounded y-domain, no box margin
  out.chart.metric = [base, e, x](const Vec4& y) -> Mat4 {
    const Mat4 g = e * base(x + e * y) * e;
    return 0.5 * (g + g.transpose());
  };
  return out;
}

}  // namespace

Mat4 metric_at(const Chart& chart, const Vec4& x) {
  const Mat4 g = chart.metric(x);
  if ((g - g.transpose()).norm() > 1e-12 * std::max(1.0, g.norm())) {
    throw std::invalid_argument("metric_at: metric function returned a non-symmetric matrix");
  }
  Eigen::LLT<Mat4> llt(g);
  if (llt.info() != Eigen::Success) {
    std::ostringstream os;
    os << "metric_at: metric not positive definite at (" << x.transpose() << ")";
    throw std::domain_error(os.str());
  }
  return g;
}

void require_interior(const Chart& chart, const Vec4& x, double margin) {
  if (chart.kind != ChartKind::Box) return;
  for (int a = 0; a < 4; ++a) {
    if (x[a] < chart.lo[a] + margin || x[a] > chart.hi[a] - margin) {
      std::ostringstream os;
      os << "point (" << x.transpose() << ") within margin " << margin
         << " of the boundary of chart " << chart.name;
      throw std::domain_error(os.str());
    }
  }
}

Christoffel christoffel_at(const Chart& chart, const Vec4& x, double step) {
  require_interior(chart, x, 2.0 * step);
  const MetricJet jet = metric_jet(chart, x, step, /*need_second=*/false);
  Christoffel out;
  for (int a = 0; a < 4; ++a) {
    out.gamma[a].setZero();
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        double val = 0.0;
        for (int e = 0; e < 4; ++e) val += jet.g_inv(a, e) * jet.gamma_first[e](b, c);
        out.gamma[a](b, c) = val;
      }
    }
  }
  return out;
}

RiemannTensor riemann_at(const Chart& chart, const Vec4& x, double step) {
  require_interior(chart, x, 2.0 * step);
  return riemann_from_jet(metric_jet(chart, x, step, /*need_second=*/true));
}

Mat4 ricci_at(const Chart& chart, const Vec4& x, double step) {
  const NormalizedPatch patch = normalized_patch(chart, x);
  const MetricJet jet = metric_jet(patch.chart, Vec4::Zero(), step, /*need_second=*/true);
  const RiemannTensor rt = riemann_from_jet(jet);
  const Mat4 e = spd_inverse_sqrt(jet.g);  // residual correction, ~identity
  // Frame components, then Ric_ij = sum_a Rhat_{a i a j}.
  Mat4 ric = Mat4::Zero();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double val = 0.0;
      for (int a = 0; a < 4; ++a) {
        for (int p = 0; p < 4; ++p)
          for (int q = 0; q < 4; ++q)
            for (int r = 0; r < 4; ++r)
              for (int s = 0; s < 4; ++s)
                val += rt(p, q, r, s) * e(p, a) * e(q, i) * e(r, a) * e(s, j);
      }
      ric(i, j) = val;
    }
  }
  return ric;
}

CurvatureOperator curvature_operator_at(const Chart& chart, const Vec4& x, double step) {
  const NormalizedPatch patch = normalized_patch(chart, x);
  const MetricJet jet = metric_jet(patch.chart, Vec4::Zero(), step, /*need_second=*/true);
  const RiemannTensor rt = riemann_from_jet(jet);
  const Mat4 e = spd_inverse_sqrt(jet.g);  // residual correction, ~identity

  // Orthonormal-frame components by four one-index contractions.
  std::array<std::array<Mat4, 4>, 4> t1, t2;
  for (int b = 0; b < 4; ++b)
    for (int c = 0; c < 4; ++c) {
      Mat4 m = Mat4::Zero();  // m(i, d) = sum_a R_{abcd} e(a,i)
      for (int i = 0; i < 4; ++i)
        for (int d = 0; d < 4; ++d) {
          double val = 0.0;
          for (int a = 0; a < 4; ++a) val += rt(a, b, c, d) * e(a, i);
          m(i, d) = val;
        }
      t1[b][c] = m;
    }
  for (int c = 0; c < 4; ++c)
    for (int i = 0; i < 4; ++i) {
      Mat4 m = Mat4::Zero();  // m(j, d) over b-contraction
      for (int j = 0; j < 4; ++j)
        for (int d = 0; d < 4; ++d) {
          double val = 0.0;
          for (int b = 0; b < 4; ++b) val += t1[b][c](i, d) * e(b, j);
          m(j, d) = val;
        }
      t2[c][i] = m;
    }
  std::array<std::array<Mat4, 4>, 4> rhat;  // rhat[i][j](k,l)
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Mat4 m = Mat4::Zero();
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          double val = 0.0;
          for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d) val += t2[c][i](j, d) * e(c, k) * e(d, l);
          m(k, l) = val;
        }
      rhat[i][j] = m;
    }

  // M_IJ = (1/4) Rhat_{ijkl} (B_I)_{ij} (B_J)_{kl}.
  const auto& basis = adapted_basis_components();
  Mat6 m;
  for (int I = 0; I < 6; ++I) {
    for (int J = 0; J < 6; ++J) {
      double val = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          if (basis[I](i, j) == 0.0) continue;
          for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l) {
              if (basis[J](k, l) == 0.0) continue;
              val += rhat[i][j](k, l) * basis[I](i, j) * basis[J](k, l);
            }
        }
      m(I, J) = 0.25 * val;
    }
  }
  // Finite-difference noise: validate with a step-sized tolerance.
  return CurvatureOperator(m, 1e-6, 1e-6);
}

Chart conformal_rescale(const Chart& chart, const ScalarFn& u) {
  Chart out = chart;
  out.name = chart.name + "_rescaled";
  const MetricFn base = chart.metric;
  out.metric = [base, u](const Vec4& x) -> Mat4 {
    const double ux = u(x);
    if (!(ux > 0.0)) {
      std::ostringstream os;
      os << "conformal_rescale: factor not positive at (" << x.transpose() << ")";
      throw std::domain_error(os.str());
    }
    return (ux * ux) * base(x);
  };
  return out;
}

double laplacian_at(const Chart& chart, const ScalarFn& u, const Vec4& x, double step) {
  require_interior(chart, x, 2.0 * step);
  const Christoffel ch = christoffel_at(chart, x, step);
  const Mat4 g_inv = metric_at(chart, x).inverse();

  Vec4 du;
  Mat4 d2u;
  for (int a = 0; a < 4; ++a) {
    du[a] = (u(shifted(x, a, step)) - u(shifted(x, a, -step))) / (2.0 * step);
    d2u(a, a) =
        (u(shifted(x, a, step)) - 2.0 * u(x) + u(shifted(x, a, -step))) / (step * step);
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      const double pp = u(shifted(shifted(x, a, step), b, step));
      const double pm = u(shifted(shifted(x, a, step), b, -step));
      const double mp = u(shifted(shifted(x, a, -step), b, step));
      const double mm = u(shifted(shifted(x, a, -step), b, -step));
      d2u(a, b) = d2u(b, a) = (pp + mm - pm - mp) / (4.0 * step * step);
    }
  }

  double lap = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      double hess = d2u(a, b);
      for (int c = 0; c < 4; ++c) hess -= ch.gamma[c](a, b) * du[c];
      lap += g_inv(a, b) * hess;
    }
  }
  return -lap;  // positive Laplacian d*d
}

double frak_s_at(const Chart& chart, const Vec4& x, double step) {
  const CurvatureDecomposition d = decompose(curvature_operator_at(chart, x, step));
  return d.scalar - 2.0 * std::sqrt(6.0) * d.w_plus.frobenius();
}

double conformal_law_residual(const Chart& chart, const ScalarFn& u, const Vec4& x,
                              double step) {
  const Chart rescaled = conformal_rescale(chart, u);
  const double frak_hat = frak_s_at(rescaled, x, step);
  const double frak = frak_s_at(chart, x, step);
  const double lap_u = laplacian_at(chart, u, x, step);
  const double ux = u(x);
  return frak_hat * ux * ux * ux - (6.0 * lap_u + frak * ux);
}

}  // namespace einstein4
