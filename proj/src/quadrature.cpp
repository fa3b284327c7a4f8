#include "einstein4/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace einstein4 {

namespace {

GaussLegendre compute_gauss_legendre(int n) {
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    gl.weights[i] = w;
    gl.weights[n - 1 - i] = w;
  }
  return gl;
}

class KahanSum {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

double measure_density(const Chart& chart, const Vec4& x) {
  const Mat4 g = metric_at(chart, x);
  return std::sqrt(g.determinant());
}

}  // namespace

const GaussLegendre& gauss_legendre(int order) {
  static std::map<int, GaussLegendre> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
  return it->second;
}

void QuadratureSpec::validate() const {
  for (int o : orders) {
    if (o < 2) throw std::invalid_argument("QuadratureSpec: orders must be >= 2");
  }
  if (margin < 0.0 || margin >= 0.5) {
    throw std::invalid_argument("QuadratureSpec: margin must be in [0, 0.5)");
  }
}

std::vector<double> integrate_many(const Chart& chart, int components,
                                   const std::function<std::vector<double>(const Vec4&)>& f,
                                   const QuadratureSpec& spec) {
  spec.validate();
  if (spec.scheme == Scheme::Homogeneous) {
    QuadratureSpec vol_spec = spec;
    vol_spec.scheme = Scheme::ProductGauss;
    const double vol = chart_volume(chart, vol_spec);
    std::vector<double> out = f(chart.base_point);
    for (double& v : out) v *= vol;
    return out;
  }

  std::array<const GaussLegendre*, 4> gl;
  for (int a = 0; a < 4; ++a) gl[a] = &gauss_legendre(spec.orders[a]);

  // Axis ranges: chart box for Box charts; (t, theta1, theta2, phi) for radial.
  std::array<double, 4> lo, hi;
  if (chart.kind == ChartKind::Box) {
    for (int a = 0; a < 4; ++a) {
      const double w = chart.hi[a] - chart.lo[a];
      lo[a] = chart.lo[a] + spec.margin * w;
      hi[a] = chart.hi[a] - spec.margin * w;
    }
  } else {
    lo = {0.0, 0.0, 0.0, 0.0};
    hi = {1.0, M_PI, M_PI, 2.0 * M_PI};
    for (int a = 0; a < 4; ++a) {
      const double w = hi[a] - lo[a];
      lo[a] += spec.margin * w;
      hi[a] -= spec.margin * w;
    }
  }

  std::vector<KahanSum> sums(components);
  for (int i0 = 0; i0 < spec.orders[0]; ++i0) {
    for (int i1 = 0; i1 < spec.orders[1]; ++i1) {
      for (int i2 = 0; i2 < spec.orders[2]; ++i2) {
        for (int i3 = 0; i3 < spec.orders[3]; ++i3) {
          const std::array<int, 4> idx = {i0, i1, i2, i3};
          Vec4 p;
          double w = 1.0;
          for (int a = 0; a < 4; ++a) {
            const double half = 0.5 * (hi[a] - lo[a]);
            p[a] = lo[a] + half * (gl[a]->nodes[idx[a]] + 1.0);
            w *= half * gl[a]->weights[idx[a]];
          }

          Vec4 x;
          double jac = 1.0;
          if (chart.kind == ChartKind::Box) {
            x = p;
          } else {
            const double t = p[0];
            const double rho = t / (1.0 - t);
            const double drho = 1.0 / ((1.0 - t) * (1.0 - t));
            const double s1 = std::sin(p[1]), c1 = std::cos(p[1]);
            const double s2 = std::sin(p[2]), c2 = std::cos(p[2]);
            x[0] = rho * c1;
            x[1] = rho * s1 * c2;
            x[2] = rho * s1 * s2 * std::cos(p[3]);
            x[3] = rho * s1 * s2 * std::sin(p[3]);
            jac = rho * rho * rho * s1 * s1 * s2 * drho;
          }

          const double density = measure_density(chart, x) * jac;
          const std::vector<double> vals = f(x);
          for (int k = 0; k < components; ++k) {
            const double val = vals[k] * density;
            if (!std::isfinite(val)) {
              std::ostringstream os;
              os << "integrate: non-finite integrand (component " << k << ") at node ("
                 << x.transpose() << ") of chart " << chart.name;
              throw std::domain_error(os.str());
            }
            sums[k].add(w * val);
          }
        }
      }
    }
  }
  std::vector<double> out(components);
  for (int k = 0; k < components; ++k) out[k] = sums[k].value();
  return out;
}

double integrate(const Chart& chart, const std::function<double(const Vec4&)>& f,
                 const QuadratureSpec& spec) {
  return integrate_many(
      chart, 1, [&f](const Vec4& x) { return std::vector<double>{f(x)}; }, spec)[0];
}

double chart_volume(const Chart& chart, const QuadratureSpec& spec) {
  QuadratureSpec s = spec;
  s.scheme = Scheme::ProductGauss;
  return integrate(
      chart, [](const Vec4&) { return 1.0; }, s);
}

}  // namespace einstein4
