#include "einstein4/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "einstein4/generators.hpp"
#include "einstein4/invariants.hpp"
#include "einstein4/rational.hpp"
#include "einstein4/sectional.hpp"
#include "einstein4/spinor.hpp"
#include "einstein4/topology.hpp"

namespace einstein4 {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

class Suite {
 public:
  Suite(VerificationReport* rep, std::string group) : rep_(rep), group_(std::move(group)) {}

  // Equality check: pass iff |computed - expected| <= tol.
  void equals(const std::string& id, const std::string& desc, double computed, double expected,
              double tol, ExpectedSource src) {
    CheckRecord r;
    r.id = id;
    r.group = group_;
    r.description = desc;
    r.computed = computed;
    r.expected = expected;
    r.tolerance = tol;
    r.margin = tol - std::abs(computed - expected);
    r.source = src;
    r.pass = std::isfinite(computed) && r.margin >= 0.0;
    rep_->checks.push_back(std::move(r));
  }

  // Zero-violation check for fuzzed predicates.
  void no_violations(const std::string& id, const std::string& desc, long violations,
                     ExpectedSource src) {
    equals(id, desc, static_cast<double>(violations), 0.0, 0.0, src);
  }

  // Bound check: pass iff computed <= bound (+tol).
  void at_most(const std::string& id, const std::string& desc, double computed, double bound,
               double tol, ExpectedSource src) {
    CheckRecord r;
    r.id = id;
    r.group = group_;
    r.description = desc;
    r.computed = computed;
    r.expected = bound;
    r.tolerance = tol;
    r.margin = bound + tol - computed;
    r.source = src;
    r.pass = std::isfinite(computed) && r.margin >= 0.0;
    rep_->checks.push_back(std::move(r));
  }

 private:
  VerificationReport* rep_;
  std::string group_;
};

CurvatureOperator cp2_algebraic_operator() {
  // Block form of the standard Fubini-Study curvature: s = 24, W+ spectrum
  // (4, -2, -2) aligned with the Kaehler direction, W- = 0.
  CurvatureDecomposition d;
  d.w_plus = TraceFree3::from_diag(4.0, -2.0, -2.0);
  d.scalar = 24.0;
  return reconstruct(d);
}

CurvatureOperator s2xs2_algebraic_operator() {
  Mat6 m = Mat6::Zero();
  m(0, 0) = 1.0;
  m(3, 3) = 1.0;
  return CurvatureOperator(m);
}

void suite_pointwise(const RunConfig& cfg, VerificationReport* rep) {
  Suite s(rep, "pointwise");
  Rng rng(cfg.seed);
  const long n = cfg.fuzz_count;

  // Round trips.
  double max_rt = 0.0;
  for (long i = 0; i < n; ++i) {
    const CurvatureOperator r = random_curvature_operator(rng);
    const Mat6 back = reconstruct(decompose(r)).matrix();
    max_rt = std::max(max_rt,
                      (back - r.matrix()).norm() / std::max(1.0, r.matrix().norm()));
    const CurvatureDecomposition d = random_decomposition(rng);
    const CurvatureDecomposition d2 = decompose(reconstruct(d));
    max_rt = std::max(max_rt, (d2.w_plus.matrix() - d.w_plus.matrix()).norm());
    max_rt = std::max(max_rt, (d2.mixed - d.mixed).norm());
    max_rt = std::max(max_rt, std::abs(d2.scalar - d.scalar));
  }
  s.equals("roundtrip", "decompose/reconstruct round trip, max relative deviation", max_rt,
           0.0, 1e-12, ExpectedSource::Derived);

  {
    const CurvatureDecomposition d = decompose(CurvatureOperator::identity());
    const double dev = std::abs(d.scalar - 12.0) + d.w_plus.frobenius() +
                       d.w_minus.frobenius() + d.mixed.norm();
    s.equals("round_sphere_identity", "identity operator decomposes to s = 12, W = r0 = 0",
             dev, 0.0, 1e-12, ExpectedSource::Reference);
  }
  {
    const CurvatureDecomposition d = decompose(s2xs2_algebraic_operator());
    const Vec3 ev = d.w_plus.eigenvalues();
    const double dev = std::abs(d.scalar - 4.0) + std::abs(ev[0] + 1.0 / 3.0) +
                       std::abs(ev[1] + 1.0 / 3.0) + std::abs(ev[2] - 2.0 / 3.0);
    s.equals("product_spheres_blocks",
             "unit product-of-spheres operator: s = 4, W spectrum (-1/3,-1/3,2/3)", dev, 0.0,
             1e-12, ExpectedSource::Derived);
  }

  // Eigenvalue lower bound fuzz.
  long ev_viol = 0;
  for (long i = 0; i < n; ++i) {
    const TraceFree3 m(rng.trace_free_symmetric3());
    if (!eigen_lower_bound_report(m).ok) ++ev_viol;
  }
  s.no_violations("eigen_bound_fuzz",
                  "|lambda_min| >= ||W||/sqrt(6) on random trace-free matrices", ev_viol,
                  ExpectedSource::Derived);

  double max_sat_dev = 0.0;
  for (long i = 0; i < 50; ++i) {
    const double a = rng.uniform(0.1, 5.0);
    const Mat3 q = rng.rotation3();
    Mat3 diag = Mat3::Zero();
    diag.diagonal() << -a, -a, 2.0 * a;
    const EigenBoundReport r = eigen_lower_bound_report(TraceFree3(q * diag * q.transpose()));
    max_sat_dev = std::max(max_sat_dev, std::abs(r.ratio - 1.0) + (r.saturated ? 0.0 : 1.0));
  }
  s.equals("eigen_bound_saturation",
           "equality case diag(-a,-a,2a) detected as saturated with ratio 1", max_sat_dev, 0.0,
           1e-9, ExpectedSource::Derived);

  long det_viol = 0;
  for (long i = 0; i < n; ++i) {
    const DetBoundReport r = det_bound_check(TraceFree3(rng.trace_free_symmetric3()));
    if (!r.ok) ++det_viol;
  }
  s.no_violations("det_bound_fuzz", "3 sqrt(6) det W <= ||W||^3 on random trace-free matrices",
                  det_viol, ExpectedSource::Derived);
  {
    const DetBoundReport r = det_bound_check(TraceFree3::from_diag(4.0, -2.0, -2.0));
    const double dev = std::abs(r.lhs - 48.0 * std::sqrt(6.0)) +
                       std::abs(r.rhs - std::pow(24.0, 1.5)) + (r.saturated ? 0.0 : 1.0);
    s.equals("det_bound_kaehler", "Kaehler-type spectrum (4,-2,-2) saturates the det bound",
             dev, 0.0, 1e-9, ExpectedSource::Derived);
  }

  long weyl_viol = 0;
  for (long i = 0; i < n; ++i) {
    const CurvatureDecomposition d = random_einstein_nonneg(rng);
    if (!weyl_sum_bound_check(d).ok) ++weyl_viol;
  }
  s.no_violations("weyl_sum_fuzz",
                  "s/sqrt(6) >= |W+| + |W-| whenever the minimal sectional curvature is >= 0",
                  weyl_viol, ExpectedSource::Derived);

  long converse_viol = 0;
  for (long i = 0; i < n; ++i) {
    const CurvatureDecomposition d = random_weyl_violator(rng);
    if (min_sectional_einstein(d) >= 0.0) ++converse_viol;
  }
  s.no_violations("weyl_sum_converse_fuzz",
                  "operators violating the bound have negative minimal sectional curvature",
                  converse_viol, ExpectedSource::Derived);

  {
    const WeylSumBoundReport r = weyl_sum_bound_check(decompose(s2xs2_algebraic_operator()));
    s.equals("weyl_sum_equality_s2xs2",
             "unit product of spheres attains equality 4/sqrt(6) = 2 sqrt(2/3)",
             std::abs(r.lhs - r.rhs), 0.0, 1e-10, ExpectedSource::Derived);
  }

  // Minimal sectional curvature.
  s.equals("min_sectional_identity", "identity operator has minimal sectional curvature 1",
           min_sectional(CurvatureOperator::identity()).value, 1.0, 1e-9,
           ExpectedSource::Definition);
  s.equals("min_sectional_s2xs2", "unit product of spheres has minimal sectional curvature 0",
           min_sectional(s2xs2_algebraic_operator()).value, 0.0, 1e-8,
           ExpectedSource::Derived);
  s.equals("min_sectional_cp2", "Fubini-Study operator has minimal sectional curvature 1",
           min_sectional(cp2_algebraic_operator()).value, 1.0, 1e-8,
           ExpectedSource::Reference);

  double max_einstein_dev = 0.0;
  for (long i = 0; i < std::min<long>(n, 300); ++i) {
    CurvatureDecomposition d = random_einstein_nonneg(rng);
    max_einstein_dev = std::max(
        max_einstein_dev,
        std::abs(min_sectional(reconstruct(d)).value - min_sectional_einstein(d)));
  }
  s.equals("min_sectional_einstein_match",
           "optimizer agrees with the Einstein eigenvalue formula", max_einstein_dev, 0.0,
           1e-8, ExpectedSource::Derived);

  {
    const CurvatureOperator fs = cp2_algebraic_operator();
    const Vec4 e0(1, 0, 0, 0), e1(0, 1, 0, 0), e2(0, 0, 1, 0);
    const double k_line = sectional_curvature(fs, wedge(e0, e1));
    const double k_real = sectional_curvature(fs, wedge(e0, e2));
    s.equals("sectional_cp2_planes",
             "complex line gives K = 4, totally real plane gives K = 1",
             std::abs(k_line - 4.0) + std::abs(k_real - 1.0), 0.0, 1e-12,
             ExpectedSource::Reference);
  }

  {
    const auto basis = adapted_basis();
    double dev = 0.0;
    const auto& comps = adapted_basis_components();
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        const double inner = 0.5 * (comps[i].array() * comps[j].array()).sum();
        dev = std::max(dev, std::abs(inner - (i == j ? 1.0 : 0.0)));
      }
      const Bivector6 star2 = hodge_star(hodge_star(basis[i]));
      dev = std::max(dev, (star2.coords() - basis[i].coords()).norm());
    }
    s.equals("basis_orthonormal_star", "adapted basis is orthonormal and star^2 = id", dev,
             0.0, 1e-14, ExpectedSource::Derived);
  }

  {
    double dev = 0.0;
    for (int i = 0; i < 20; ++i) {
      const CurvatureOperator r = random_curvature_operator(rng);
      const Mat6 l = lambda2_rotation(rng.rotation4());
      const CurvatureOperator rr(l * r.matrix() * l.transpose(), 1e-8, 1e-8);
      const CurvatureDecomposition d0 = decompose(r);
      const CurvatureDecomposition d1 = decompose(rr);
      dev = std::max(dev, std::abs(gauss_bonnet_integrand(d0) - gauss_bonnet_integrand(d1)));
      dev = std::max(dev, std::abs(signature_integrand(d0) - signature_integrand(d1)));
    }
    s.equals("integrand_rotation_invariance",
             "Gauss-Bonnet and signature integrands are SO(4)-conjugation invariant", dev, 0.0,
             1e-10, ExpectedSource::Derived);
  }

  {
    // Exact arithmetic for the parallel-case identity on the Fubini-Study
    // spectrum: (s/2)|W+|^2 = 288 = 18 det W+.
    const Rational s_half = Rational(24) / 2;
    const Rational w_sq = Rational(16) + 4 + 4;
    const Rational det = Rational(4) * (-2) * (-2);
    const Rational lhs = s_half * w_sq;
    const Rational rhs = Rational(18) * det;
    s.equals("weitzenbock_parallel_exact",
             "(s/2)|W+|^2 = 18 det W+ for the Fubini-Study spectrum, exact arithmetic",
             boost::rational_cast<double>(lhs - rhs), 0.0, 0.0, ExpectedSource::Derived);
    const WeitzenbockReport w = weitzenbock_parallel_check(decompose(cp2_algebraic_operator()));
    s.equals("weitzenbock_parallel_values", "both sides equal 288 for the Fubini-Study block",
             std::abs(w.lhs - 288.0) + std::abs(w.rhs - 288.0), 0.0, 1e-10,
             ExpectedSource::Derived);
  }
}

void suite_spinor(const RunConfig& cfg, VerificationReport* rep) {
  Suite s(rep, "spinor");
  Rng rng(cfg.seed + 1);
  const long n = std::min<long>(cfg.fuzz_count, 1000);

  double max_dev = 0.0;
  for (long i = 0; i < n; ++i) {
    const auto v = vector_spinor(rng.normal_vec4());
    const auto u = random_symmetric_spinor(4, rng);
    max_dev = std::max(max_dev, std::abs(projection_ratio(v, u) - 0.6));
  }
  s.equals("projection_ratio_fuzz",
           "|v (x) U projected|^2 = (3/5)|v|^2|U|^2 on random inputs", max_dev, 0.0, 1e-12,
           ExpectedSource::Derived);

  long rational_failures = 0;
  {
    auto rat = [](long long num, long long den = 1) { return Rational(num, den); };
    Rng rrng(cfg.seed + 7);
    for (int k = 0; k < 10; ++k) {
      GaussianRational alpha{rat((long long)(rrng.next_u64() % 7) - 3, 1),
                             rat((long long)(rrng.next_u64() % 7) - 3, 2)};
      GaussianRational beta{rat((long long)(rrng.next_u64() % 5) - 2, 1),
                            rat((long long)(rrng.next_u64() % 5) - 2, 3)};
      if (norm_sq_of(alpha) + norm_sq_of(beta) == Rational(0)) alpha.re = rat(1);
      const auto v = quaternion_spinor(alpha, beta);
      SpinorTensor<GaussianRational> u0(0, 4);
      for (std::size_t f = 0; f < u0.size(); ++f) {
        u0[f] = GaussianRational{rat((long long)(rrng.next_u64() % 9) - 4, 1),
                                 rat((long long)(rrng.next_u64() % 9) - 4, 2)};
      }
      const auto u = symmetrize_unprimed(u0);
      if (norm_sq(u) == Rational(0)) continue;
      if (!(projection_ratio(v, u) == Rational(3, 5))) ++rational_failures;
    }
  }
  s.no_violations("projection_ratio_exact",
                  "the 3/5 identity holds exactly in rational arithmetic", rational_failures,
                  ExpectedSource::Derived);

  const KatoEstimate est = kato_constants_estimate(cfg.kato_samples, cfg.seed + 11);
  const double target = std::sqrt(3.0 / 5.0);
  s.equals("kato_sup", "Cauchy-Schwarz supremum estimate reaches sqrt(3/5)",
           est.cauchy_schwarz_sup, target, 1e-4, ExpectedSource::Derived);
  s.at_most("kato_sup_excess", "the estimate never exceeds sqrt(3/5) beyond roundoff",
            est.max_excess, 0.0, 1e-10, ExpectedSource::Derived);
  s.equals("kato_reciprocal", "reciprocal estimate gives the refined constant sqrt(5/3)",
           est.kato_inf, std::sqrt(5.0 / 3.0), 2e-4, ExpectedSource::Derived);

  {
    double dev = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto v = vector_spinor(rng.normal_vec4());
      const auto u = random_symmetric_spinor(4, rng);
      const auto five_term = project_parallel(v, u);
      const auto oracle = symmetrize_unprimed(tensor_product(v, u));
      for (std::size_t f = 0; f < five_term.size(); ++f) {
        dev = std::max(dev, std::abs(five_term[f] - oracle[f]));
      }
    }
    s.equals("five_term_equals_symmetrization",
             "the explicit 5-term average equals the full symmetrization entrywise", dev, 0.0,
             1e-13, ExpectedSource::Derived);
  }

  {
    double dev = 0.0;
    long eps_viol = 0;
    for (int i = 0; i < 50; ++i) {
      const auto t = random_spinor(1, 3, rng);
      const auto sym = symmetrize_unprimed(t);
      const auto sym2 = symmetrize_unprimed(sym);
      for (std::size_t f = 0; f < t.size(); ++f) dev = std::max(dev, std::abs(sym2[f] - sym[f]));
      for (int pos = 0; pos < t.total_rank(); ++pos) {
        const auto back = lower_index(raise_index(t, pos), pos);
        for (std::size_t f = 0; f < t.size(); ++f) {
          if (!(back[f] == t[f])) ++eps_viol;
        }
      }
      // Multiplicativity of the norm.
      const auto v = vector_spinor(rng.normal_vec4());
      const auto u = random_symmetric_spinor(4, rng);
      dev = std::max(dev, std::abs(norm_sq(tensor_product(v, u)) - norm_sq(v) * norm_sq(u)) /
                              std::max(1.0, norm_sq(v) * norm_sq(u)));
    }
    s.equals("symmetrize_idempotent", "symmetrization is a projection (P^2 = P)", dev, 0.0,
             1e-14, ExpectedSource::Derived);
    s.no_violations("epsilon_raise_lower",
                    "epsilon-raising then lowering an index is exactly the identity", eps_viol,
                    ExpectedSource::Definition);
  }
}

void suite_models(const RunConfig& cfg, VerificationReport* rep) {
  Suite s(rep, "models");
  Rng rng(cfg.seed + 23);
  const double h = cfg.fd_step;

  {
    const ModelManifold m = round_sphere(1.0);
    double dev = 0.0;
    for (int i = 0; i < 5; ++i) {
      Vec4 x = rng.normal_vec4();
      const Mat6 op = curvature_operator_at(m.chart, x, h).matrix();
      dev = std::max(dev, (op - Mat6::Identity()).norm());
    }
    s.equals("s4_operator_identity",
             "unit round sphere: chart curvature operator is the identity", dev, 0.0, 1e-8,
             ExpectedSource::Derived);
  }

  {
    const ModelManifold m = fubini_study();
    double dev = 0.0;
    for (int i = 0; i < 5; ++i) {
      Vec4 x = 0.6 * rng.normal_vec4();
      const CurvatureDecomposition d =
          decompose(curvature_operator_at(m.chart, x, h));
      const Vec3 ev = d.w_plus.eigenvalues();
      dev = std::max(dev, std::abs(d.scalar - 24.0));
      dev = std::max(dev, (ev - Vec3(-2.0, -2.0, 4.0)).norm());
      dev = std::max(dev, d.w_minus.frobenius());
      dev = std::max(dev, d.mixed.norm());
    }
    s.equals("cp2_spectrum",
             "Fubini-Study chart: s = 24, W+ spectrum (-2,-2,4), W- = 0, Einstein", dev, 0.0,
             1e-6, ExpectedSource::Derived);
  }

  {
    double dev = 0.0;
    for (const ModelManifold& m : catalog()) {
      for (int i = 0; i < 8; ++i) {
        Vec4 x;
        if (m.chart.kind == ChartKind::Box) {
          for (int a = 0; a < 4; ++a) {
            x[a] = rng.uniform(m.chart.lo[a] + 0.15 * (m.chart.hi[a] - m.chart.lo[a]),
                               m.chart.hi[a] - 0.15 * (m.chart.hi[a] - m.chart.lo[a]));
          }
        } else {
          x = rng.normal_vec4();
        }
        const double step = h;
        const CurvatureDecomposition d = decompose(curvature_operator_at(m.chart, x, step));
        dev = std::max(dev, d.mixed.norm());
        if (m.ref.einstein && !m.ref.flat) {
          const Mat4 ric = ricci_at(m.chart, x, step);
          dev = std::max(
              dev, (ric - m.ref.einstein_constant * Mat4::Identity()).norm());
        }
      }
    }
    s.equals("catalog_einstein_residual",
             "every catalog model is Einstein: r = lambda g and vanishing mixed block", dev,
             0.0, 1e-6, ExpectedSource::Derived);
  }

  {
    const ModelManifold m = fubini_study();
    s.equals("fs_frak_s_zero",
             "the Fubini-Study metric sits exactly on s - 2 sqrt(6)|W+| = 0",
             frak_s_at(m.chart, Vec4(0.2, -0.1, 0.3, 0.05), h), 0.0, 1e-6,
             ExpectedSource::Derived);
  }

  {
    const ModelManifold m = flat_torus(1.0);
    const Mat6 op = curvature_operator_at(m.chart, m.chart.base_point, h).matrix();
    s.equals("flat_torus_zero", "flat torus: curvature operator vanishes identically",
             op.norm(), 0.0, 1e-14, ExpectedSource::Definition);
  }

  {
    // Riemann symmetries and the first Bianchi identity at sampled points.
    const ModelManifold m = fubini_study();
    double dev = 0.0;
    for (int i = 0; i < 3; ++i) {
      const Vec4 x = 0.5 * rng.normal_vec4();
      const RiemannTensor rt = riemann_at(m.chart, x, h);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d) {
              dev = std::max(dev, std::abs(rt(a, b, c, d) + rt(b, a, c, d)));
              dev = std::max(dev, std::abs(rt(a, b, c, d) + rt(a, b, d, c)));
              dev = std::max(dev, std::abs(rt(a, b, c, d) - rt(c, d, a, b)));
              dev = std::max(dev,
                             std::abs(rt(a, b, c, d) + rt(a, c, d, b) + rt(a, d, b, c)));
            }
    }
    s.equals("riemann_symmetries", "classical symmetries and first Bianchi identity hold",
             dev, 0.0, 1e-10, ExpectedSource::Derived);
  }

  {
    const ModelManifold m = fubini_study();
    const MinSectionalResult lo =
        min_sectional(curvature_operator_at(m.chart, Vec4(0.3, 0.1, -0.2, 0.4), h));
    const Mat6 neg = -curvature_operator_at(m.chart, Vec4(0.3, 0.1, -0.2, 0.4), h).matrix();
    const MinSectionalResult hi = min_sectional(CurvatureOperator(neg));
    s.equals("fs_sectional_range", "Fubini-Study sectional curvature fills [1, 4]",
             std::abs(lo.value - 1.0) + std::abs(-hi.value - 4.0), 0.0, 1e-6,
             ExpectedSource::Reference);
  }
}

void suite_invariants(const RunConfig& cfg, VerificationReport* rep) {
  Suite s(rep, "invariants");
  QuadratureSpec spec = QuadratureSpec::curvature_defaults();
  spec.fd_step = cfg.fd_step;
  if (cfg.quad_order > 0) spec.orders = {cfg.quad_order, cfg.quad_order, cfg.quad_order,
                                         cfg.quad_order};

  const std::map<std::string, std::pair<double, double>> expected_chi_tau = {
      {"s4", {2.0, 0.0}}, {"cp2", {3.0, 1.0}}, {"s2xs2", {4.0, 0.0}}, {"t4", {0.0, 0.0}}};

  std::map<std::string, InvariantReport> reports;
  for (const ModelManifold& m : catalog()) {
    reports[m.name] = invariant_report(m, spec);
  }

  for (const auto& [name, xt] : expected_chi_tau) {
    const InvariantReport& r = reports.at(name);
    const double tol = name == "t4" ? 1e-9 : 1e-3;
    s.equals("chi_" + name, "Euler characteristic of " + name + " by curvature quadrature",
             r.euler_char, xt.first, tol,
             name == "cp2" ? ExpectedSource::Reference : ExpectedSource::Derived);
    s.equals("tau_" + name, "signature of " + name + " by curvature quadrature", r.signature,
             xt.second, tol, name == "cp2" ? ExpectedSource::Reference : ExpectedSource::Derived);
  }

  {
    const InvariantReport r = invariant_report(product_spheres(1.0, 2.0), spec);
    s.equals("chi_s2xs2_unequal",
             "non-Einstein product of unequal spheres still integrates to chi = 4",
             r.euler_char, 4.0, 1e-3, ExpectedSource::Derived);
  }

  s.equals("vol_cp2", "Fubini-Study volume pi^2/2", reports.at("cp2").volume,
           M_PI * M_PI / 2.0, 1e-4 * M_PI * M_PI / 2.0, ExpectedSource::Reference);
  s.equals("vol_s4", "round sphere volume 8 pi^2/3", reports.at("s4").volume,
           8.0 * M_PI * M_PI / 3.0, 1e-4 * 8.0 * M_PI * M_PI / 3.0, ExpectedSource::Derived);
  s.equals("vol_t4", "unit torus volume 1", reports.at("t4").volume, 1.0, 1e-9,
           ExpectedSource::Definition);

  s.equals("functional_cp2", "normalized total scalar curvature of the Fubini-Study metric",
           reports.at("cp2").functional, 12.0 * M_PI * std::sqrt(2.0),
           1e-4 * 12.0 * M_PI * std::sqrt(2.0), ExpectedSource::Reference);
  s.equals("functional_s4", "normalized total scalar curvature of the round sphere",
           reports.at("s4").functional, 8.0 * M_PI * std::sqrt(6.0),
           1e-4 * 8.0 * M_PI * std::sqrt(6.0), ExpectedSource::Reference);
  s.equals("functional_t4", "flat torus has zero total scalar curvature",
           reports.at("t4").functional, 0.0, 1e-12, ExpectedSource::Definition);

  s.equals("euler_bound_s4", "round sphere: (5/8pi^2) int s^2/24 = 10",
           reports.at("s4").euler_bound.bound, 10.0, 1e-2, ExpectedSource::Reference);
  s.equals("euler_bound_cp2", "Fubini-Study: bound 7.5 exceeds chi = 3",
           reports.at("cp2").euler_bound.bound, 7.5, 1e-2, ExpectedSource::Derived);
  s.equals("euler_bound_s2xs2", "unit product of spheres: bound 20/3 exceeds chi = 4",
           reports.at("s2xs2").euler_bound.bound, 20.0 / 3.0, 1e-2, ExpectedSource::Derived);
  {
    long strict_viol = 0;
    for (const char* name : {"s4", "cp2", "s2xs2"}) {
      if (!reports.at(name).euler_bound.strict) ++strict_viol;
    }
    s.no_violations("euler_bound_strict", "the Euler bound is strict on every non-flat model",
                    strict_viol, ExpectedSource::Derived);
    long chi_ceiling_viol = 0;
    for (const auto& [name, r] : reports) {
      if (!(r.euler_char <= 9.0 + 1e-3)) ++chi_ceiling_viol;
    }
    s.no_violations("chi_ceiling", "every catalog model satisfies chi <= 9", chi_ceiling_viol,
                    ExpectedSource::Derived);
  }

  {
    const GapCheck& g = reports.at("cp2").gap;
    s.equals("gap_cp2_w2", "int |W+|^2 over the Fubini-Study metric equals 12 pi^2",
             g.int_w_plus_sq, 12.0 * M_PI * M_PI, 1e-4 * 12.0 * M_PI * M_PI,
             ExpectedSource::Derived);
    s.equals("gap_cp2_equality", "the gap bound is attained (W+ parallel): both sides agree",
             g.int_w_plus_sq - g.int_s_sq_over_24, 0.0, 1e-4 * 12.0 * M_PI * M_PI,
             ExpectedSource::Derived);
    const GapCheck& gr = reports.at("cp2").gap_reversed;
    s.equals("gap_cp2_reversed_corollary",
             "reversed orientation: (2 chi - 3 tau)/3 = 3 = (1/4pi^2) int s^2/24",
             std::abs(gr.corollary_lhs - 3.0) + std::abs(gr.corollary_rhs - 3.0), 0.0, 1e-3,
             ExpectedSource::Derived);
    long excluded = reports.at("s4").gap.gap_applies ? 1 : 0;
    s.no_violations("gap_s4_excluded",
                    "round sphere reports the excluded branch (W+ vanishes identically)",
                    excluded, ExpectedSource::Definition);
  }

  {
    const BishopCheck& b4 = reports.at("s4").bishop;
    s.equals("bishop_s4", "round sphere attains the Bishop volume bound 8 pi^2/3",
             b4.rescaled_volume, 8.0 * M_PI * M_PI / 3.0, 1e-4 * 8.0 * M_PI * M_PI / 3.0,
             ExpectedSource::Definition);
    const BishopCheck& bc = reports.at("cp2").bishop;
    s.equals("bishop_cp2", "Fubini-Study rescaled to r = 3g has volume 2 pi^2 <= 8 pi^2/3",
             bc.rescaled_volume, 2.0 * M_PI * M_PI, 1e-4 * 2.0 * M_PI * M_PI,
             ExpectedSource::Derived);
    const BishopCheck& bs = reports.at("s2xs2").bishop;
    s.equals("bishop_s2xs2", "unit product rescaled to r = 3g has volume 16 pi^2/9",
             bs.rescaled_volume, 16.0 * M_PI * M_PI / 9.0, 1e-4 * 16.0 * M_PI * M_PI / 9.0,
             ExpectedSource::Derived);
  }

  {
    const FunctionalWindows w = functional_windows_report();
    s.equals("window_cp2_upper", "alternative Einstein metrics must satisfy S < 4 pi sqrt(6)",
             w.cp2_upper, 4.0 * M_PI * std::sqrt(6.0), 1e-12, ExpectedSource::Reference);
    s.equals("window_identity", "(1/sqrt(3)) 12 pi sqrt(2) = 4 pi sqrt(6) to 1e-12",
             w.identity_residual, 0.0, 1e-12, ExpectedSource::Derived);
    s.no_violations("window_s4_sanity",
                    "the round value 8 pi sqrt(6) lies outside the alternative window",
                    w.round_outside_window ? 0 : 1, ExpectedSource::Definition);
  }

  {
    // Quadrature convergence and the homogeneous shortcut cross-check.
    QuadratureSpec coarse = spec;
    QuadratureSpec fine = spec;
    for (int a = 0; a < 4; ++a) fine.orders[a] = spec.orders[a] * 2;
    const double v1 = chart_volume(round_sphere(1.0).chart, coarse);
    const double v2 = chart_volume(round_sphere(1.0).chart, fine);
    s.equals("quadrature_convergence", "doubling the order moves the volume by < 1e-6",
             std::abs(v1 - v2), 0.0, 1e-6, ExpectedSource::Derived);

    QuadratureSpec shortcut = spec;
    shortcut.scheme = Scheme::Homogeneous;
    const double chi_full = reports.at("cp2").euler_char;
    const double chi_short = euler_characteristic(fubini_study(), shortcut);
    s.equals("homogeneous_shortcut",
             "pointwise-times-volume shortcut matches full quadrature", chi_short, chi_full,
             1e-4 * 3.0, ExpectedSource::Derived);
  }
}

void suite_conformal(const RunConfig& cfg, VerificationReport* rep) {
  Suite s(rep, "conformal");
  const ModelManifold m = round_sphere(1.0);
  const Vec4 x(0.31, -0.22, 0.14, 0.4);

  const ScalarFn one = [](const Vec4&) { return 1.0; };
  s.equals("residual_identity", "identity rescaling has vanishing residual",
           std::abs(conformal_law_residual(m.chart, one, x, cfg.fd_step)), 0.0, 1e-8,
           ExpectedSource::Definition);

  const ScalarFn constant = [](const Vec4&) { return 0.7; };
  s.equals("residual_homothety", "constant rescaling has vanishing residual",
           std::abs(conformal_law_residual(m.chart, constant, x, cfg.fd_step)), 0.0, 1e-8,
           ExpectedSource::Definition);

  {
    const double c = 0.7;
    const Chart resc = conformal_rescale(m.chart, constant);
    const CurvatureDecomposition d = decompose(curvature_operator_at(resc, x, cfg.fd_step));
    s.equals("homothety_scalar", "constant factor c rescales s to 12/c^2", d.scalar,
             12.0 / (c * c), 1e-6, ExpectedSource::Definition);
  }

  const ScalarFn bump = [](const Vec4& p) {
    return 1.0 + 0.5 * std::exp(-(p - Vec4(0.2, 0.0, -0.1, 0.3)).squaredNorm());
  };
  const double h0 = 4.0 * cfg.fd_step;
  const double r1 = conformal_law_residual(m.chart, bump, x, h0);
  const double r2 = conformal_law_residual(m.chart, bump, x, h0 / 2.0);
  const double order = std::log2(std::abs(r1) / std::abs(r2));
  const double extrapolated = (4.0 * r2 - r1) / 3.0;
  s.equals("conformal_order", "residual decreases at second order under step halving", order,
           2.0, 0.3, ExpectedSource::Derived);
  s.at_most("conformal_extrapolated", "Richardson-extrapolated residual is below 1e-5",
            std::abs(extrapolated), 0.0, 1e-5, ExpectedSource::Derived);

  {
    // Conformal invariance of int |W+|^2: identically zero for rescalings of
    // the round sphere; stationary under a bump on the Fubini-Study metric.
    QuadratureSpec spec = QuadratureSpec::curvature_defaults();
    spec.fd_step = cfg.fd_step;
    const ModelManifold resc_s4 = conformal_model(round_sphere(1.0), bump);
    const CurvatureIntegrals ci = curvature_integrals(resc_s4, spec);
    s.equals("conformal_w2_s4", "rescaled round sphere keeps int |W+|^2 = 0", ci.w_plus_sq,
             0.0, 1e-6, ExpectedSource::Derived);

    const ScalarFn near_one = [](const Vec4& p) {
      return 1.0 + 0.05 * std::exp(-p.squaredNorm());
    };
    const ModelManifold resc_cp2 = conformal_model(fubini_study(), near_one);
    const CurvatureIntegrals c0 = curvature_integrals(fubini_study(), spec);
    const CurvatureIntegrals c1 = curvature_integrals(resc_cp2, spec);
    s.equals("conformal_w2_cp2",
             "int |W+|^2 over the rescaled Fubini-Study metric is unchanged", c1.w_plus_sq,
             c0.w_plus_sq, 1e-3 * c0.w_plus_sq, ExpectedSource::Derived);
  }
}

void suite_topology(const RunConfig& cfg, VerificationReport* rep) {
  (void)cfg;
  Suite s(rep, "topology");

  long mismatches = 0;
  const std::vector<std::tuple<int, int, bool>> window_table = {
      {3, 1, false}, {4, 2, false}, {8, 2, true}, {8, -4, false}};
  for (const auto& [chi, tau, expect] : window_table) {
    if (chi_tau_window_gate(chi, tau).ok != expect) ++mismatches;
  }
  s.no_violations("window_gate_table",
                  "window gate truth table: (3,1) and (4,2) and (8,-4) closed, (8,2) open",
                  mismatches, ExpectedSource::Reference);

  mismatches = 0;
  const std::vector<std::tuple<int, int, bool>> hitchin_table = {
      {3, 1, true}, {4, 2, true}, {2, 0, true}, {4, 4, false}};
  for (const auto& [chi, tau, expect] : hitchin_table) {
    if (hitchin_gate(chi, tau).ok != expect) ++mismatches;
  }
  s.no_violations("hitchin_gate_table", "Hitchin gate truth table including (4,2) open",
                  mismatches, ExpectedSource::Derived);

  mismatches = 0;
  for (int chi = 0; chi <= 9; ++chi) {
    for (int tau = -chi; tau <= chi; ++tau) {
      if (((chi - tau) % 2 + 2) % 2 != 0) continue;
      if (chi_tau_window_gate(chi, tau).ok != chi_tau_window_gate(chi, -tau).ok) ++mismatches;
      if (chi_tau_window_gate(chi, tau).ok && !hitchin_gate(chi, tau).ok) ++mismatches;
    }
  }
  s.no_violations("gate_symmetry_and_strength",
                  "window gate is orientation symmetric and implies the Hitchin gate",
                  mismatches, ExpectedSource::Derived);

  mismatches = 0;
  if (simply_connected_deduction(1).min_chi != 5) ++mismatches;
  if (simply_connected_deduction(2).min_chi != 8) ++mismatches;
  if (simply_connected_deduction(3).admissible) ++mismatches;
  if (simply_connected_deduction(0).applicable) ++mismatches;
  if (simply_connected_deduction(1).max_cover_order != 1) ++mismatches;
  s.no_violations("simply_connected",
                  "|tau| = 1 forces chi >= 5 and rules out nontrivial covers", mismatches,
                  ExpectedSource::Reference);

  mismatches = 0;
  {
    TopologyDescriptor cp2{1, 0, 0, true, true, true};
    if (!positive_intersection_verdict(cp2).hypotheses_met) ++mismatches;
    TopologyDescriptor mixed{1, 1, 0, true, true, true};
    if (positive_intersection_verdict(mixed).hypotheses_met) ++mismatches;
    TopologyDescriptor two{2, 0, 0, true, true, true};
    const PositiveFormVerdict v = positive_intersection_verdict(two);
    if (!v.hypotheses_met) ++mismatches;
    if (v.conclusion.find("no Einstein metric") == std::string::npos) ++mismatches;
  }
  s.no_violations("positive_form_verdicts",
                  "positive-intersection hypotheses and the composed gate verdicts",
                  mismatches, ExpectedSource::Derived);

  {
    const auto classes = enumerate_homeotypes();
    s.equals("homeotype_count", "the enumeration yields exactly twelve classes",
             static_cast<double>(classes.size()), 12.0, 0.0, ExpectedSource::Reference);
    long structural = 0;
    bool has_s4 = false, has_42 = false;
    for (const auto& c : classes) {
      if (c.b_plus == 0 && c.b_minus == 0) has_s4 = true;
      if (c.b_plus == 4 && c.b_minus == 2 && !c.even_form) has_42 = true;
      if (c.branch == "window" && !chi_tau_window_gate(c.chi, c.tau).ok) ++structural;
      if (c.branch == "self-dual" && chi_tau_window_gate(c.chi, c.tau).ok) ++structural;
    }
    if (!has_s4 || !has_42) ++structural;
    s.no_violations("homeotype_structure",
                    "classes contain (0,0) and the (4,2) odd class; branches are consistent",
                    structural, ExpectedSource::Derived);
  }

  {
    // The strictness contradiction: chi = (15/8) tau and chi = 2 + tau force
    // tau = 16/7, which is not an integer.
    const Rational tau = Rational(2) / (Rational(15, 8) - 1);
    const bool is_integer = tau.denominator() == 1;
    s.no_violations("strictness_contradiction",
                    "2 + tau = (15/8) tau solves to the non-integer 16/7", is_integer ? 1 : 0,
                    ExpectedSource::Derived);
    s.equals("strictness_value", "the solved signature equals 16/7 exactly",
             boost::rational_cast<double>(tau), 16.0 / 7.0, 0.0, ExpectedSource::Derived);
  }
}

}  // namespace

const char* to_string(ExpectedSource s) {
  switch (s) {
    case ExpectedSource::Definition:
      return "definition";
    case ExpectedSource::Derived:
      return "derived";
    case ExpectedSource::Reference:
      return "reference";
  }
  return "unknown";
}

int VerificationReport::failed() const {
  int n = 0;
  for (const auto& c : checks) {
    if (!c.pass) ++n;
  }
  return n;
}

VerificationReport run_all_checks(const RunConfig& cfg) {
  VerificationReport rep;
  rep.config = cfg;
  rep.toolchain = std::string("g++ ") + __VERSION__;
  suite_pointwise(cfg, &rep);
  suite_spinor(cfg, &rep);
  suite_models(cfg, &rep);
  suite_invariants(cfg, &rep);
  suite_conformal(cfg, &rep);
  suite_topology(cfg, &rep);
  return rep;
}

Json report_to_json(const VerificationReport& rep) {
  Json j;
  j["schema_version"] = rep.schema_version;
  j["toolchain"] = rep.toolchain;
  j["config"] = Json{{"seed", rep.config.seed},
                     {"fd_step", rep.config.fd_step},
                     {"quad_order", rep.config.quad_order},
                     {"fuzz_count", rep.config.fuzz_count},
                     {"kato_samples", rep.config.kato_samples},
                     {"deterministic", rep.config.deterministic}};
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    checks.push_back(Json{{"id", c.id},
                          {"group", c.group},
                          {"description", c.description},
                          {"computed", c.computed},
                          {"expected", c.expected},
                          {"tolerance", c.tolerance},
                          {"margin", c.margin},
                          {"source", to_string(c.source)},
                          {"pass", c.pass}});
  }
  j["checks"] = checks;
  j["summary"] =
      Json{{"total", rep.total()}, {"failed", rep.failed()}, {"pass", rep.all_pass()}};
  return j;
}

std::string emit_report(const VerificationReport& rep, const std::string& format) {
  if (format == "json") {
    return report_to_json(rep).dump(2) + "\n";
  }
  if (format == "csv") {
    std::ostringstream os;
    os << "id,group,description,computed,expected,tolerance,margin,source,pass\n";
    for (const auto& c : rep.checks) {
      os << c.id << ',' << c.group << ",\"" << c.description << "\"," << fmt(c.computed)
         << ',' << fmt(c.expected) << ',' << fmt(c.tolerance) << ',' << fmt(c.margin) << ','
         << to_string(c.source) << ',' << (c.pass ? "true" : "false") << '\n';
    }
    return os.str();
  }
  if (format == "markdown") {
    std::ostringstream os;
    std::string group;
    for (const auto& c : rep.checks) {
      if (c.group != group) {
        group = c.group;
        os << "\n## " << group << "\n\n";
        os << "| id | description | computed | expected | tol | margin | source | pass |\n";
        os << "|---|---|---|---|---|---|---|---|\n";
      }
      os << "| " << c.id << " | " << c.description << " | " << fmt(c.computed) << " | "
         << fmt(c.expected) << " | " << fmt(c.tolerance) << " | " << fmt(c.margin) << " | "
         << to_string(c.source) << " | " << (c.pass ? "pass" : "FAIL") << " |\n";
    }
    std::ostringstream head;
    head << "# Verification report\n\n"
         << "- toolchain: " << rep.toolchain << "\n"
         << "- checks: " << rep.total() << ", failed: " << rep.failed() << "\n";
    return head.str() + os.str();
  }
  if (format == "text") {
    std::ostringstream os;
    std::string group;
    for (const auto& c : rep.checks) {
      if (c.group != group) {
        group = c.group;
        os << "--- " << group << " ---\n";
      }
      os << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << ": " << c.description
         << " (computed " << fmt(c.computed) << ", expected " << fmt(c.expected) << " +- "
         << fmt(c.tolerance) << ")\n";
    }
    os << rep.failed() << " of " << rep.total() << " checks failed\n";
    return os.str();
  }
  throw std::invalid_argument("unsupported format '" + format +
                              "' (expected json|csv|markdown|text)");
}

}  // namespace einstein4
