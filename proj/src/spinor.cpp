#include "einstein4/spinor.hpp"

#include <cmath>

#include "einstein4/rng.hpp"

namespace einstein4 {

SpinorTensor<std::complex<double>> random_spinor(int primed_rank, int unprimed_rank, Rng& rng) {
  SpinorTensor<std::complex<double>> t(primed_rank, unprimed_rank);
  for (std::size_t f = 0; f < t.size(); ++f) {
    t[f] = std::complex<double>(rng.normal(), rng.normal());
  }
  return t;
}

SpinorTensor<std::complex<double>> random_symmetric_spinor(int unprimed_rank, Rng& rng) {
  return symmetrize_unprimed(random_spinor(0, unprimed_rank, rng));
}

KatoEstimate kato_constants_estimate(long samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("kato_constants_estimate: samples < 1");
  Rng rng(seed);
  const double target = std::sqrt(3.0 / 5.0);
  double sup = 0.0;
  for (long i = 0; i < samples; ++i) {
    const auto v = vector_spinor(rng.normal_vec4());
    const auto u = random_symmetric_spinor(4, rng);
    const double nv = std::sqrt(norm_sq(v));
    const double nu = std::sqrt(norm_sq(u));
    if (nv < 1e-8 || nu < 1e-8) continue;
    const auto vu = tensor_product(v, u);

    const auto t_random = symmetrize_unprimed(random_spinor(1, 5, rng));
    const double nt = std::sqrt(norm_sq(t_random));
    if (nt > 1e-8) {
      sup = std::max(sup, std::abs(inner(vu, t_random)) / (nv * nu * nt));
    }
    // Aligned candidate: attains the Cauchy-Schwarz bound.
    const auto t_aligned = project_parallel(v, u);
    const double na = std::sqrt(norm_sq(t_aligned));
    if (na > 1e-12) {
      sup = std::max(sup, std::abs(inner(vu, t_aligned)) / (nv * nu * na));
    }
  }
  KatoEstimate est;
  est.cauchy_schwarz_sup = sup;
  est.kato_inf = 1.0 / sup;
  est.max_excess = sup - target;
  est.samples = samples;
  return est;
}

}  // namespace einstein4
