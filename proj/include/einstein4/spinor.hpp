#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "einstein4/linalg.hpp"
#include "einstein4/rational.hpp"

namespace einstein4 {

inline std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }
inline double norm_sq_of(const std::complex<double>& z) { return std::norm(z); }

template <class S>
struct ScalarTraits;
template <>
struct ScalarTraits<std::complex<double>> {
  using Real = double;
};
template <class R>
struct ScalarTraits<ComplexOf<R>> {
  using Real = R;
};

// Multi-index array over 2-dimensional spinor indices: `primed` indices of
// S- followed by `unprimed` indices of S+, each valued in {0,1}. Index k is
// bit k of the flat position (primed indices occupy the low bits). The
// epsilon conventions are eps_{01} = eps^{01} = 1 with the index staircase
// psi^A = eps^{AB} psi_B, psi_B = psi^A eps_{AB}.
template <class Scalar>
class SpinorTensor {
 public:
  SpinorTensor(int primed_rank, int unprimed_rank)
      : primed_(primed_rank), unprimed_(unprimed_rank) {
    if (primed_ < 0 || unprimed_ < 0 || primed_ + unprimed_ > 20) {
      throw std::invalid_argument("SpinorTensor: rank out of range");
    }
    entries_.assign(std::size_t{1} << total_rank(), Scalar{});
  }

  int primed_rank() const { return primed_; }
  int unprimed_rank() const { return unprimed_; }
  int total_rank() const { return primed_ + unprimed_; }
  std::size_t size() const { return entries_.size(); }

  Scalar& operator[](std::size_t flat) { return entries_[flat]; }
  const Scalar& operator[](std::size_t flat) const { return entries_[flat]; }

  /// Flat position of an index tuple (primed indices first).
  static std::size_t flat(std::initializer_list<int> idx) {
    std::size_t f = 0;
    int k = 0;
    for (int i : idx) f |= static_cast<std::size_t>(i & 1) << k++;
    return f;
  }
  Scalar& at(std::initializer_list<int> idx) { return entries_[flat(idx)]; }
  const Scalar& at(std::initializer_list<int> idx) const { return entries_[flat(idx)]; }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!(e == Scalar{})) return false;
    }
    return true;
  }

  /// Exact invariance of the entries under unprimed-index permutations.
  bool is_symmetric_unprimed() const;

 private:
  int primed_;
  int unprimed_;
  std::vector<Scalar> entries_;
};

namespace spinor_detail {

inline int popcount(std::size_t x) { return __builtin_popcountll(x); }

inline long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::complex<double> div_int(const std::complex<double>& s, long long n) {
  return s / static_cast<double>(n);
}
template <class R>
ComplexOf<R> div_int(const ComplexOf<R>& s, long long n) {
  return s / R(n);
}

}  // namespace spinor_detail

template <class Scalar>
bool SpinorTensor<Scalar>::is_symmetric_unprimed() const {
  const int p = primed_;
  const int q = unprimed_;
  const std::size_t pmask = (std::size_t{1} << p) - 1;
  for (std::size_t f = 0; f < size(); ++f) {
    const std::size_t up = f >> p;
    // Representative of the permutation orbit: same popcount, ones packed low.
    const std::size_t rep = (std::size_t{1} << spinor_detail::popcount(up)) - 1;
    const std::size_t rf = (rep << p) | (f & pmask);
    if (!(entries_[f] == entries_[rf])) return false;
  }
  (void)q;
  return true;
}

template <class Scalar>
SpinorTensor<Scalar> tensor_product(const SpinorTensor<Scalar>& a, const SpinorTensor<Scalar>& b) {
  SpinorTensor<Scalar> out(a.primed_rank() + b.primed_rank(),
                           a.unprimed_rank() + b.unprimed_rank());
  const int pa = a.primed_rank(), pb = b.primed_rank();
  const int qa = a.unprimed_rank(), qb = b.unprimed_rank();
  for (std::size_t f = 0; f < out.size(); ++f) {
    // Layout of out: [primed(a) | primed(b) | unprimed(a) | unprimed(b)].
    const std::size_t prim_a = f & ((std::size_t{1} << pa) - 1);
    const std::size_t prim_b = (f >> pa) & ((std::size_t{1} << pb) - 1);
    const std::size_t unpr_a = (f >> (pa + pb)) & ((std::size_t{1} << qa) - 1);
    const std::size_t unpr_b = (f >> (pa + pb + qa)) & ((std::size_t{1} << qb) - 1);
    out[f] = a[prim_a | (unpr_a << pa)] * b[prim_b | (unpr_b << pb)];
  }
  return out;
}

/// Average over all permutations of the unprimed indices. Orbit values are
/// computed once and shared, so the output is exactly permutation-invariant
/// and the operation is exactly idempotent in exact arithmetic.
template <class Scalar>
SpinorTensor<Scalar> symmetrize_unprimed(const SpinorTensor<Scalar>& t) {
  const int p = t.primed_rank();
  const int q = t.unprimed_rank();
  SpinorTensor<Scalar> out(p, q);
  const std::size_t nprim = std::size_t{1} << p;
  const std::size_t nunpr = std::size_t{1} << q;
  for (std::size_t prim = 0; prim < nprim; ++prim) {
    std::array<Scalar, 21> sums{};  // by popcount of the unprimed pattern
    for (std::size_t up = 0; up < nunpr; ++up) {
      sums[spinor_detail::popcount(up)] += t[(up << p) | prim];
    }
    for (std::size_t up = 0; up < nunpr; ++up) {
      const int k = spinor_detail::popcount(up);
      out[(up << p) | prim] =
          spinor_detail::div_int(sums[k], spinor_detail::binomial(q, k));
    }
  }
  return out;
}

/// v_{A'(A} U_{BCD...)} for v of rank (1,1) and totally symmetric U of rank
/// (0,q): the explicit (q+1)-term average. Rejects non-symmetric U.
template <class Scalar>
SpinorTensor<Scalar> project_parallel(const SpinorTensor<Scalar>& v,
                                      const SpinorTensor<Scalar>& u) {
  if (v.primed_rank() != 1 || v.unprimed_rank() != 1) {
    throw std::invalid_argument("project_parallel: v must have rank (1,1)");
  }
  if (u.primed_rank() != 0 || u.unprimed_rank() < 1) {
    throw std::invalid_argument("project_parallel: U must have rank (0,q), q >= 1");
  }
  if (!u.is_symmetric_unprimed()) {
    throw std::invalid_argument("project_parallel: U is not totally symmetric");
  }
  const int q = u.unprimed_rank();
  SpinorTensor<Scalar> out(1, q + 1);
  const std::size_t nunpr = std::size_t{1} << (q + 1);
  for (std::size_t prim = 0; prim < 2; ++prim) {
    for (int k = 0; k <= q + 1; ++k) {
      // Orbit representative: k ones in the low unprimed positions.
      const std::size_t rep = (std::size_t{1} << k) - 1;
      Scalar sum{};
      for (int j = 0; j <= q; ++j) {
        const int ij = static_cast<int>((rep >> j) & 1);
        // Remove index j; the remaining q indices keep their order.
        const std::size_t low = rep & ((std::size_t{1} << j) - 1);
        const std::size_t high = rep >> (j + 1);
        const std::size_t rest = low | (high << j);
        sum += v[prim | (static_cast<std::size_t>(ij) << 1)] * u[rest];
      }
      const Scalar value = spinor_detail::div_int(sum, q + 1);
      for (std::size_t up = 0; up < nunpr; ++up) {
        if (spinor_detail::popcount(up) == k) out[(up << 1) | prim] = value;
      }
    }
  }
  return out;
}

/// Hermitian norm: the contraction of T against its conjugate with
/// epsilon-raised indices, which in a unitary spin frame is the plain sum of
/// |entry|^2. Non-negative for every input.
template <class Scalar>
typename ScalarTraits<Scalar>::Real norm_sq(const SpinorTensor<Scalar>& t) {
  typename ScalarTraits<Scalar>::Real out{};
  for (std::size_t f = 0; f < t.size(); ++f) out += norm_sq_of(t[f]);
  return out;
}

/// Hermitian pairing <a, b> = sum conj(a_I) b_I.
template <class Scalar>
Scalar inner(const SpinorTensor<Scalar>& a, const SpinorTensor<Scalar>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: rank mismatch");
  Scalar out{};
  for (std::size_t f = 0; f < a.size(); ++f) out += conj(a[f]) * b[f];
  return out;
}

/// Bilinear epsilon pairing: all indices of `a` raised, then contracted with b.
template <class Scalar>
Scalar epsilon_pair(const SpinorTensor<Scalar>& a, const SpinorTensor<Scalar>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("epsilon_pair: rank mismatch");
  const std::size_t all = a.size() - 1;
  Scalar out{};
  for (std::size_t f = 0; f < a.size(); ++f) {
    const Scalar term = a[all ^ f] * b[f];
    out += (spinor_detail::popcount(f) % 2 == 0) ? term : -term;
  }
  return out;
}

template <class Scalar>
SpinorTensor<Scalar> raise_index(const SpinorTensor<Scalar>& t, int pos) {
  SpinorTensor<Scalar> out(t.primed_rank(), t.unprimed_rank());
  const std::size_t bit = std::size_t{1} << pos;
  for (std::size_t f = 0; f < t.size(); ++f) {
    // up[0] = low[1], up[1] = -low[0]
    out[f] = (f & bit) ? -t[f ^ bit] : t[f ^ bit];
  }
  return out;
}

template <class Scalar>
SpinorTensor<Scalar> lower_index(const SpinorTensor<Scalar>& t, int pos) {
  SpinorTensor<Scalar> out(t.primed_rank(), t.unprimed_rank());
  const std::size_t bit = std::size_t{1} << pos;
  for (std::size_t f = 0; f < t.size(); ++f) {
    // low[0] = -up[1], low[1] = up[0]
    out[f] = (f & bit) ? t[f ^ bit] : -t[f ^ bit];
  }
  return out;
}

/// The antilinear structure j applied to every index (j^2 = -1 per index).
/// Fixed points among rank-(1,1) tensors are exactly the real tangent vectors.
template <class Scalar>
SpinorTensor<Scalar> quaternionic_conj(const SpinorTensor<Scalar>& t) {
  SpinorTensor<Scalar> out(t.primed_rank(), t.unprimed_rank());
  const std::size_t all = t.size() - 1;
  const int rank = t.total_rank();
  for (std::size_t f = 0; f < t.size(); ++f) {
    const int zeros = rank - spinor_detail::popcount(f);
    const Scalar c = conj(t[all ^ f]);
    out[f] = (zeros % 2 == 0) ? c : -c;
  }
  return out;
}

/// Soldering of a real tangent vector into S- (x) S+: the quaternionic basis
/// (id, i sigma_1, i sigma_2, i sigma_3)/sqrt(2), so that the spinor norm of
/// v equals its Euclidean norm and quaternionic_conj fixes the image.
inline SpinorTensor<std::complex<double>> vector_spinor(const Vec4& v) {
  const double s = 1.0 / std::sqrt(2.0);
  const std::complex<double> alpha(v[0] * s, v[1] * s);
  const std::complex<double> beta(v[2] * s, v[3] * s);
  SpinorTensor<std::complex<double>> t(1, 1);
  t.at({0, 0}) = alpha;
  t.at({0, 1}) = beta;
  t.at({1, 0}) = -std::conj(beta);
  t.at({1, 1}) = std::conj(alpha);
  return t;
}

/// Exact-mode soldering from quaternion components (alpha, beta).
template <class R>
SpinorTensor<ComplexOf<R>> quaternion_spinor(const ComplexOf<R>& alpha, const ComplexOf<R>& beta) {
  SpinorTensor<ComplexOf<R>> t(1, 1);
  t.at({0, 0}) = alpha;
  t.at({0, 1}) = beta;
  t.at({1, 0}) = -conj(beta);
  t.at({1, 1}) = conj(alpha);
  return t;
}

/// |v_{A'(A} U_{BCDE)}|^2 / (|v|^2 |U|^2). Equals 3/5 for every nonzero real
/// tangent vector v and every nonzero totally symmetric U of rank (0,4).
template <class Scalar>
typename ScalarTraits<Scalar>::Real projection_ratio(const SpinorTensor<Scalar>& v,
                                                     const SpinorTensor<Scalar>& u) {
  const auto nv = norm_sq(v);
  const auto nu = norm_sq(u);
  if (nv == typename ScalarTraits<Scalar>::Real{} || nu == typename ScalarTraits<Scalar>::Real{}) {
    throw std::invalid_argument("projection_ratio: zero input");
  }
  return norm_sq(project_parallel(v, u)) / (nv * nu);
}

struct KatoEstimate {
  double cauchy_schwarz_sup = 0.0;  // ~ sqrt(3/5), approached from below
  double kato_inf = 0.0;            // reciprocal, ~ sqrt(5/3)
  double max_excess = 0.0;          // sup minus sqrt(3/5)
  long samples = 0;
};

/// Monte-Carlo estimate of sup |<v (x) U, T>| / (|v| |U| |T|) over T in the
/// image of the symmetric projection. Alongside random T, each sample also
/// evaluates the aligned candidate T ~ v_{A'(A}U_{BCDE)}, which attains the
/// supremum, so the estimate reaches sqrt(3/5) up to roundoff and never
/// exceeds it beyond roundoff.
KatoEstimate kato_constants_estimate(long samples, std::uint64_t seed = 0x5A7E11137Eull);

/// Uniformly random tensors with standard normal re/im entries.
SpinorTensor<std::complex<double>> random_spinor(int primed_rank, int unprimed_rank,
                                                 class Rng& rng);
SpinorTensor<std::complex<double>> random_symmetric_spinor(int unprimed_rank, class Rng& rng);

}  // namespace einstein4
