#pragma once

#include <cmath>
#include <complex>

namespace pt2 {

using cplx = std::complex<double>;

// 2-component complex state vector.
struct Vec2 {
  cplx c0{}, c1{};
};

// 2x2 complex matrix, row-major.
struct Mat2 {
  cplx m00{}, m01{}, m10{}, m11{};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  // Basis-swap parity operator.
  static Mat2 parity() { return {0.0, 1.0, 1.0, 0.0}; }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
}

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
}

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

inline Mat2 operator*(const cplx& s, const Mat2& a) {
  return {s * a.m00, s * a.m01, s * a.m10, s * a.m11};
}

inline Vec2 operator*(const Mat2& a, const Vec2& v) {
  return {a.m00 * v.c0 + a.m01 * v.c1, a.m10 * v.c0 + a.m11 * v.c1};
}

inline Vec2 operator*(const cplx& s, const Vec2& v) { return {s * v.c0, s * v.c1}; }

inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }

inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }

inline cplx trace(const Mat2& a) { return a.m00 + a.m11; }

inline cplx det(const Mat2& a) { return a.m00 * a.m11 - a.m01 * a.m10; }

inline Mat2 conjugate(const Mat2& a) {
  return {std::conj(a.m00), std::conj(a.m01), std::conj(a.m10), std::conj(a.m11)};
}

inline Mat2 transpose(const Mat2& a) { return {a.m00, a.m10, a.m01, a.m11}; }

inline Mat2 adjoint(const Mat2& a) {
  return {std::conj(a.m00), std::conj(a.m10), std::conj(a.m01), std::conj(a.m11)};
}

inline Mat2 inverse(const Mat2& a) {
  const cplx d = det(a);
  return (1.0 / d) * Mat2{a.m11, -a.m01, -a.m10, a.m00};
}

// Largest entry magnitude (max "norm").
inline double max_abs(const Mat2& a) {
  return std::max(std::max(std::abs(a.m00), std::abs(a.m01)),
                  std::max(std::abs(a.m10), std::abs(a.m11)));
}

inline double max_abs(const Vec2& v) { return std::max(std::abs(v.c0), std::abs(v.c1)); }

// Conjugates the first argument.
inline cplx dot(const Vec2& a, const Vec2& b) {
  return std::conj(a.c0) * b.c0 + std::conj(a.c1) * b.c1;
}

inline double norm(const Vec2& v) { return std::sqrt(std::norm(v.c0) + std::norm(v.c1)); }

inline Vec2 conjugate(const Vec2& v) { return {std::conj(v.c0), std::conj(v.c1)}; }

inline bool all_finite(const Mat2& a) {
  const auto ok = [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  return ok(a.m00) && ok(a.m01) && ok(a.m10) && ok(a.m11);
}

inline bool all_finite(const Vec2& v) {
  const auto ok = [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  return ok(v.c0) && ok(v.c1);
}

// Principal square root with the branch cut approached from above, so that
// sqrt of a negative real with a signed-zero imaginary part is +i*sqrt(|x|)
// regardless of how the zero was produced.
inline cplx sqrt_principal(cplx z) {
  if (z.imag() == 0.0) z = cplx(z.real(), +0.0);
  return std::sqrt(z);
}

}  // namespace pt2
