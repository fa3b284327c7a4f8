#include "einstein4/models.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace einstein4 {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

ModelManifold round_sphere(double radius) {
  require_positive(radius, "round_sphere: radius");
  const double a2 = radius * radius;
  ModelManifold m;
  m.name = "s4";
  m.chart.name = "s4_stereographic";
  m.chart.kind = ChartKind::RadialR4;
  m.chart.excluded_locus = "one point (the pole opposite the chart center)";
  m.chart.base_point = Vec4::Zero();
  m.chart.metric = [a2](const Vec4& x) -> Mat4 {
    const double c = 2.0 * a2 / (a2 + x.squaredNorm());
    return (c * c) * Mat4::Identity();
  };
  m.ref.euler_char = 2.0;
  m.ref.signature = 0.0;
  m.ref.volume = 8.0 * M_PI * M_PI * a2 * a2 / 3.0;
  m.ref.scalar_curv = 12.0 / a2;
  m.ref.einstein_constant = 3.0 / a2;
  m.ref.einstein = true;
  m.ref.k_min = m.ref.k_max = 1.0 / a2;
  return m;
}

ModelManifold fubini_study() {
  ModelManifold m;
  m.name = "cp2";
  m.chart.name = "cp2_affine";
  m.chart.kind = ChartKind::RadialR4;
  m.chart.excluded_locus = "the line at infinity (a 2-sphere)";
  m.chart.base_point = Vec4::Zero();
  // Coordinates (x1, y1, x2, y2) with z_i = x_i + i y_i; the metric is the
  // real part of the hermitian form with Kaehler potential log(1 + |z|^2).
  m.chart.metric = [](const Vec4& x) -> Mat4 {
    using C = std::complex<double>;
    const C z[2] = {C(x[0], x[1]), C(x[2], x[3])};
    const double w = 1.0 + std::norm(z[0]) + std::norm(z[1]);
    // h_{i jbar} = delta_ij / w - conj(z_i) z_j / w^2
    C h[2][2];
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        h[i][j] = (i == j ? 1.0 / w : 0.0) - std::conj(z[i]) * z[j] / (w * w);
      }
    }
    // Complex Jacobian dz^i / du^a for u = (x1, y1, x2, y2).
    const C jac[2][4] = {{1.0, C(0.0, 1.0), 0.0, 0.0}, {0.0, 0.0, 1.0, C(0.0, 1.0)}};
    Mat4 g;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        C acc = 0.0;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) acc += h[i][j] * jac[i][a] * std::conj(jac[j][b]);
        g(a, b) = acc.real();
      }
    }
    return g;
  };
  m.ref.euler_char = 3.0;
  m.ref.signature = 1.0;
  m.ref.volume = M_PI * M_PI / 2.0;
  m.ref.scalar_curv = 24.0;
  m.ref.einstein_constant = 6.0;
  m.ref.einstein = true;
  m.ref.w_plus_spectrum = Vec3(-2.0, -2.0, 4.0);
  m.ref.k_min = 1.0;
  m.ref.k_max = 4.0;
  return m;
}

ModelManifold product_spheres(double a, double b) {
  require_positive(a, "product_spheres: radius a");
  require_positive(b, "product_spheres: radius b");
  ModelManifold m;
  m.name = "s2xs2";
  m.chart.name = "s2xs2_angles";
  m.chart.kind = ChartKind::Box;
  m.chart.lo = {0.0, 0.0, 0.0, 0.0};
  m.chart.hi = {M_PI, 2.0 * M_PI, M_PI, 2.0 * M_PI};
  m.chart.base_point = Vec4(M_PI / 2.0, M_PI, M_PI / 2.0, M_PI);
  m.chart.excluded_locus = "poles and meridians of the two factors";
  m.chart.metric = [a, b](const Vec4& x) -> Mat4 {
    Mat4 g = Mat4::Zero();
    g(0, 0) = a * a;
    g(1, 1) = a * a * sq(std::sin(x[0]));
    g(2, 2) = b * b;
    g(3, 3) = b * b * sq(std::sin(x[2]));
    return g;
  };
  const double k1 = 1.0 / (a * a), k2 = 1.0 / (b * b);
  m.ref.euler_char = 4.0;
  m.ref.signature = 0.0;
  m.ref.volume = 16.0 * M_PI * M_PI * a * a * b * b;
  m.ref.scalar_curv = 2.0 * (k1 + k2);
  m.ref.einstein = std::abs(a - b) <= 1e-12 * std::max(a, b);
  m.ref.einstein_constant = m.ref.einstein ? k1 : 0.0;
  const double w = (k1 + k2) / 6.0;
  m.ref.w_plus_spectrum = Vec3(-w, -w, 2.0 * w);
  m.ref.w_minus_spectrum = Vec3(-w, -w, 2.0 * w);
  m.ref.k_min = 0.0;
  m.ref.k_max = std::max(k1, k2);
  return m;
}

ModelManifold flat_torus(double side) {
  require_positive(side, "flat_torus: side");
  ModelManifold m;
  m.name = "t4";
  m.chart.name = "t4_identity";
  m.chart.kind = ChartKind::Box;
  m.chart.lo = {0.0, 0.0, 0.0, 0.0};
  m.chart.hi = {side, side, side, side};
  m.chart.base_point = Vec4::Constant(side / 2.0);
  m.chart.excluded_locus = "the gluing faces";
  m.chart.metric = [](const Vec4&) -> Mat4 { return Mat4::Identity(); };
  m.ref.volume = side * side * side * side;
  m.ref.einstein = true;
  m.ref.flat = true;
  return m;
}

std::vector<ModelManifold> catalog() {
  return {round_sphere(1.0), fubini_study(), product_spheres(1.0, 1.0), flat_torus(1.0)};
}

ModelManifold model_by_name(const std::string& name, double param_a, double param_b) {
  if (name == "s4") return round_sphere(param_a);
  if (name == "cp2") return fubini_study();
  if (name == "s2xs2") return product_spheres(param_a, param_b);
  if (name == "t4") return flat_torus(param_a);
  throw std::invalid_argument("unknown model '" + name + "' (expected s4|cp2|s2xs2|t4)");
}

ModelManifold conformal_model(const ModelManifold& m, const ScalarFn& u) {
  ModelManifold out = m;
  out.name = m.name + "_rescaled";
  out.chart = conformal_rescale(m.chart, u);
  out.homogeneous = false;
  return out;
}

}  // namespace einstein4
