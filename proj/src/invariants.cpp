#include "einstein4/invariants.hpp"

#include <cmath>

namespace einstein4 {

namespace {

constexpr double kIntegerTol = 1e-3;

std::vector<double> terms_at(const ModelManifold& m, const Vec4& x, double fd_step) {
  const double step = fd_step;
  const CurvatureDecomposition d = decompose(curvature_operator_at(m.chart, x, step));
  return {d.w_plus_norm_sq(), d.w_minus_norm_sq(), sq(d.scalar) / 24.0, d.r0_norm_sq() / 2.0,
          d.scalar};
}

double euler_from(const CurvatureIntegrals& ci) {
  return (ci.w_plus_sq + ci.w_minus_sq + ci.s_sq_over_24 - ci.r0_sq_over_2) /
         (8.0 * M_PI * M_PI);
}

double signature_from(const CurvatureIntegrals& ci) {
  return (ci.w_plus_sq - ci.w_minus_sq) / (12.0 * M_PI * M_PI);
}

EulerBoundCheck euler_bound_from(const ModelManifold& m, const CurvatureIntegrals& ci) {
  EulerBoundCheck out;
  out.chi = euler_from(ci);
  out.applicable = m.ref.einstein && !m.ref.flat;
  if (!out.applicable) return out;
  out.bound = 5.0 / (8.0 * M_PI * M_PI) * ci.s_sq_over_24;
  out.margin = out.bound - out.chi;
  out.strict = out.margin > kIntegerTol;
  return out;
}

GapCheck weyl_gap_from(const ModelManifold& m, const CurvatureIntegrals& ci, bool reverse) {
  GapCheck out;
  out.reversed_orientation = reverse;
  out.int_w_plus_sq = reverse ? ci.w_minus_sq : ci.w_plus_sq;
  out.int_w_minus_sq = reverse ? ci.w_plus_sq : ci.w_minus_sq;
  out.int_s_sq_over_24 = ci.s_sq_over_24;

  const double chi = euler_from(ci);
  const double tau = (reverse ? -1.0 : 1.0) * signature_from(ci);

  const double scale = std::max(1.0, out.int_s_sq_over_24);
  const double w_zero_tol = 1e-8 * std::max(1.0, ci.volume);
  const bool s_positive = ci.s_total > 1e-8 * std::max(1.0, ci.volume);

  if (!m.ref.einstein) {
    out.excluded_reason = "metric is not Einstein";
    return out;
  }
  out.gap_applies = s_positive && out.int_w_plus_sq > w_zero_tol;
  if (out.gap_applies) {
    out.gap_ok = out.int_w_plus_sq >= out.int_s_sq_over_24 - 1e-6 * scale;
    out.gap_equality = std::abs(out.int_w_plus_sq - out.int_s_sq_over_24) <= 1e-5 * scale;
  } else {
    out.excluded_reason = s_positive ? "W+ vanishes identically for this orientation"
                                     : "scalar curvature is not positive";
  }

  out.corollary_applies = s_positive && out.int_w_minus_sq > w_zero_tol;
  if (out.corollary_applies) {
    out.corollary_lhs = (2.0 * chi - 3.0 * tau) / 3.0;
    out.corollary_rhs = out.int_s_sq_over_24 / (4.0 * M_PI * M_PI);
    out.corollary_ok = out.corollary_lhs >= out.corollary_rhs - 1e-5 * scale;
    out.corollary_equality =
        std::abs(out.corollary_lhs - out.corollary_rhs) <= 1e-4 * std::max(1.0, out.corollary_rhs);
  }
  return out;
}

}  // namespace

CurvatureIntegrals curvature_integrals(const ModelManifold& m, const QuadratureSpec& spec) {
  CurvatureIntegrals out;
  QuadratureSpec vol_spec = spec;
  vol_spec.scheme = Scheme::ProductGauss;
  out.volume = chart_volume(m.chart, vol_spec);

  // Flat metrics have identically vanishing integrands; differencing the
  // constant metric would only add noise.
  if (m.ref.flat) return out;

  const std::vector<double> vals = integrate_many(
      m.chart, 5, [&](const Vec4& x) { return terms_at(m, x, spec.fd_step); }, spec);
  // In the homogeneous shortcut the sweep above was only evaluated at the
  // base point; integrate_many already multiplied by the volume.
  out.w_plus_sq = vals[0];
  out.w_minus_sq = vals[1];
  out.s_sq_over_24 = vals[2];
  out.r0_sq_over_2 = vals[3];
  out.s_total = vals[4];
  return out;
}

double euler_characteristic(const ModelManifold& m, const QuadratureSpec& spec) {
  return euler_from(curvature_integrals(m, spec));
}

double signature(const ModelManifold& m, const QuadratureSpec& spec) {
  return signature_from(curvature_integrals(m, spec));
}

double total_scalar_functional(const ModelManifold& m, const QuadratureSpec& spec) {
  const CurvatureIntegrals ci = curvature_integrals(m, spec);
  return ci.s_total / std::sqrt(ci.volume);
}

EulerBoundCheck euler_bound_check(const ModelManifold& m, const QuadratureSpec& spec) {
  return euler_bound_from(m, curvature_integrals(m, spec));
}

GapCheck weyl_gap_check(const ModelManifold& m, bool reverse, const QuadratureSpec& spec) {
  return weyl_gap_from(m, curvature_integrals(m, spec), reverse);
}

BishopCheck bishop_volume_check(const ModelManifold& m, const QuadratureSpec& spec) {
  BishopCheck out;
  out.sphere_volume = 8.0 * M_PI * M_PI / 3.0;
  out.applicable = m.ref.einstein && m.ref.einstein_constant > 0.0;
  if (!out.applicable) return out;
  // Homothety g -> (lambda/3) g makes r = 3g; recompute the volume honestly.
  const double factor = std::sqrt(m.ref.einstein_constant / 3.0);
  const ModelManifold rescaled = conformal_model(m, [factor](const Vec4&) { return factor; });
  out.rescaled_volume = chart_volume(rescaled.chart, spec);
  out.margin = out.sphere_volume - out.rescaled_volume;
  out.ok = out.margin >= -1e-6 * out.sphere_volume;
  return out;
}

FunctionalWindows functional_windows_report() {
  FunctionalWindows w;
  w.s_fubini_study = 12.0 * M_PI * std::sqrt(2.0);
  w.s_round_sphere = 8.0 * M_PI * std::sqrt(6.0);
  w.cp2_upper = 4.0 * M_PI * std::sqrt(6.0);
  w.s4_lower = 8.0 * M_PI * std::sqrt(6.0 / 5.0);
  w.s4_upper = 8.0 * M_PI * std::sqrt(2.0);
  w.identity_residual = std::abs(w.s_fubini_study / std::sqrt(3.0) - w.cp2_upper);
  w.round_outside_window = w.s_round_sphere > w.s4_upper || w.s_round_sphere < w.s4_lower;
  return w;
}

InvariantReport invariant_report(const ModelManifold& m, const QuadratureSpec& spec) {
  InvariantReport rep;
  rep.model = m.name;
  rep.integrals = curvature_integrals(m, spec);
  rep.volume = rep.integrals.volume;
  rep.euler_char = euler_from(rep.integrals);
  rep.signature = signature_from(rep.integrals);
  rep.functional = rep.integrals.s_total / std::sqrt(rep.volume);
  rep.euler_bound = euler_bound_from(m, rep.integrals);
  rep.gap = weyl_gap_from(m, rep.integrals, false);
  rep.gap_reversed = weyl_gap_from(m, rep.integrals, true);
  rep.bishop = bishop_volume_check(m, spec);
  return rep;
}

}  // namespace einstein4
