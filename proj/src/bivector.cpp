#include "einstein4/bivector.hpp"

#include <cmath>

namespace einstein4 {

namespace {

std::array<Mat4, 6> build_basis_components() {
  const double s = 1.0 / std::sqrt(2.0);
  // Index pairs for e^a ^ e^b terms of each basis element: f_i^+- =
  // (e0^ei +- dual pair)/sqrt(2).
  struct Pair {
    int a, b;
  };
  const Pair first[3] = {{0, 1}, {0, 2}, {0, 3}};
  const Pair second[3] = {{2, 3}, {3, 1}, {1, 2}};

  std::array<Mat4, 6> basis;
  for (int i = 0; i < 3; ++i) {
    for (int sign_idx = 0; sign_idx < 2; ++sign_idx) {
      const double sign = sign_idx == 0 ? 1.0 : -1.0;
      Mat4 m = Mat4::Zero();
      m(first[i].a, first[i].b) += s;
      m(first[i].b, first[i].a) -= s;
      m(second[i].a, second[i].b) += sign * s;
      m(second[i].b, second[i].a) -= sign * s;
      basis[i + 3 * sign_idx] = m;
    }
  }
  return basis;
}

}  // namespace

const std::array<Mat4, 6>& adapted_basis_components() {
  static const std::array<Mat4, 6> basis = build_basis_components();
  return basis;
}

std::array<Bivector6, 6> adapted_basis() {
  std::array<Bivector6, 6> out;
  for (int i = 0; i < 6; ++i) {
    Vec6 c = Vec6::Zero();
    c[i] = 1.0;
    out[i] = Bivector6(c);
  }
  return out;
}

bool Bivector6::is_simple(double tol) const {
  const double plus = self_dual_part().squaredNorm();
  const double minus = anti_self_dual_part().squaredNorm();
  return std::abs(plus - minus) <= tol * std::max(1.0, norm_sq());
}

bool Bivector6::is_unit(double tol) const { return std::abs(norm_sq() - 1.0) <= tol; }

Bivector6 hodge_star(const Bivector6& phi) {
  Vec6 c = phi.coords();
  c.tail<3>() *= -1.0;
  return Bivector6(c);
}

Bivector6 wedge(const Vec4& e, const Vec4& f) {
  const Mat4 comp = e * f.transpose() - f * e.transpose();
  return bivector_from_components(comp);
}

Mat4 bivector_components(const Bivector6& phi) {
  const auto& basis = adapted_basis_components();
  Mat4 out = Mat4::Zero();
  for (int i = 0; i < 6; ++i) out += phi[i] * basis[i];
  return out;
}

Bivector6 bivector_from_components(const Mat4& phi) {
  // <phi, psi> = (1/2) phi_{ab} psi_{ab}; the basis is orthonormal for it.
  const auto& basis = adapted_basis_components();
  Vec6 c;
  for (int i = 0; i < 6; ++i) c[i] = 0.5 * (phi.array() * basis[i].array()).sum();
  return Bivector6(c);
}

Mat6 lambda2_rotation(const Mat4& q) {
  const auto& basis = adapted_basis_components();
  Mat6 l;
  for (int j = 0; j < 6; ++j) {
    const Mat4 rotated = q * basis[j] * q.transpose();
    for (int i = 0; i < 6; ++i) {
      l(i, j) = 0.5 * (basis[i].array() * rotated.array()).sum();
    }
  }
  return l;
}

}  // namespace einstein4
