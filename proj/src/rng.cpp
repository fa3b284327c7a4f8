#include "einstein4/rng.hpp"

#include <cmath>

#include "einstein4/linalg.hpp"

namespace einstein4 {

Mat4 spd_inverse_sqrt(const Mat4& g) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(g);
  return es.operatorInverseSqrt();
}

std::uint64_t Rng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double a, double b) { return a + (b - a) * uniform(); }

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

Vec3 Rng::normal_vec3() {
  Vec3 v;
  for (int i = 0; i < 3; ++i) v[i] = normal();
  return v;
}

Vec4 Rng::normal_vec4() {
  Vec4 v;
  for (int i = 0; i < 4; ++i) v[i] = normal();
  return v;
}

Vec3 Rng::unit_vec3() {
  Vec3 v;
  double n = 0.0;
  do {
    v = normal_vec3();
    n = v.norm();
  } while (n < 1e-12);
  return v / n;
}

Mat3 Rng::symmetric3(double scale) {
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      m(i, j) = m(j, i) = scale * normal();
    }
  }
  return m;
}

Mat3 Rng::trace_free_symmetric3(double scale) {
  Mat3 m = symmetric3(scale);
  const double t = m.trace() / 3.0;
  for (int i = 0; i < 3; ++i) m(i, i) -= t;
  return m;
}

Mat3 Rng::rotation3() {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = normal();
  Eigen::HouseholderQR<Mat3> qr(m);
  Mat3 q = qr.householderQ();
  if (q.determinant() < 0.0) q.col(0) *= -1.0;
  return q;
}

Mat4 Rng::rotation4() {
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = normal();
  Eigen::HouseholderQR<Mat4> qr(m);
  Mat4 q = qr.householderQ();
  if (q.determinant() < 0.0) q.col(0) *= -1.0;
  return q;
}

}  // namespace einstein4
