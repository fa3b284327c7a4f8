#pragma once

#include <boost/rational.hpp>

namespace einstein4 {

using Rational = boost::rational<long long>;

/// Complex numbers over an exact field, for the exact-arithmetic test mode.
/// (std::complex is only specified for floating-point scalars.)
template <class R>
struct ComplexOf {
  R re{};
  R im{};

  ComplexOf() = default;
  ComplexOf(R r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  ComplexOf(R r, R i) : re(std::move(r)), im(std::move(i)) {}

  friend ComplexOf operator+(const ComplexOf& a, const ComplexOf& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexOf operator-(const ComplexOf& a, const ComplexOf& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexOf operator-(const ComplexOf& a) { return {-a.re, -a.im}; }
  friend ComplexOf operator*(const ComplexOf& a, const ComplexOf& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexOf operator/(const ComplexOf& a, const R& d) { return {a.re / d, a.im / d}; }
  ComplexOf& operator+=(const ComplexOf& b) { return *this = *this + b; }
  friend bool operator==(const ComplexOf& a, const ComplexOf& b) {
    return a.re == b.re && a.im == b.im;
  }
};

using GaussianRational = ComplexOf<Rational>;

template <class R>
ComplexOf<R> conj(const ComplexOf<R>& z) {
  return {z.re, -z.im};
}

template <class R>
R norm_sq_of(const ComplexOf<R>& z) {
  return z.re * z.re + z.im * z.im;
}

}  // namespace einstein4
