#pragma once

#include <array>

#include "einstein4/linalg.hpp"

namespace einstein4 {

// A 2-form at a point of an oriented Euclidean R^4, stored in the fixed
// orthonormal basis (f1+, f2+, f3+, f1-, f2-, f3-) where
//   f1+- = (e0^e1 +- e2^e3)/sqrt(2)
//   f2+- = (e0^e2 +- e3^e1)/sqrt(2)
//   f3+- = (e0^e3 +- e1^e2)/sqrt(2)
// with orientation e0^e1^e2^e3 > 0. The Hodge star is diagonal in this basis:
// +1 on the first three coordinates, -1 on the last three.
class Bivector6 {
 public:
  Bivector6() : c_(Vec6::Zero()) {}
  explicit Bivector6(const Vec6& c) : c_(c) {}
  Bivector6(const Vec3& self_dual, const Vec3& anti_self_dual) {
    c_ << self_dual, anti_self_dual;
  }

  const Vec6& coords() const { return c_; }
  double operator[](int i) const { return c_[i]; }

  Vec3 self_dual_part() const { return c_.head<3>(); }
  Vec3 anti_self_dual_part() const { return c_.tail<3>(); }

  double norm_sq() const { return c_.squaredNorm(); }
  double norm() const { return c_.norm(); }

  // phi ^ phi = 0, i.e. |phi+|^2 = |phi-|^2: decomposable as a wedge of 1-forms.
  bool is_simple(double tol = 1e-9) const;
  bool is_unit(double tol = 1e-9) const;

 private:
  Vec6 c_;
};

/// The fixed oriented basis as coordinate vectors (columns of the identity).
std::array<Bivector6, 6> adapted_basis();

/// The basis elements as antisymmetric 4x4 component matrices, (f_I)_{ab}.
const std::array<Mat4, 6>& adapted_basis_components();

/// Star is diagonal: fixes the first three coordinates, negates the last three.
Bivector6 hodge_star(const Bivector6& phi);

/// Coordinates of the 2-form e ^ f, components (e^f)_{ab} = e_a f_b - e_b f_a.
Bivector6 wedge(const Vec4& e, const Vec4& f);

/// Antisymmetric component matrix phi_{ab} of a coordinate bivector.
Mat4 bivector_components(const Bivector6& phi);

/// Inverse of bivector_components (input must be antisymmetric).
Bivector6 bivector_from_components(const Mat4& phi);

/// Induced orthogonal action of q in SO(4) on Lambda^2 in the adapted basis.
Mat6 lambda2_rotation(const Mat4& q);

}  // namespace einstein4
