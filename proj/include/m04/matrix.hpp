// 2x2 matrices over a commutative ring: Laurent polynomials, big integers
// or complex doubles.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "m04/laurent.hpp"

namespace m04 {

template <class T>
struct Mat2 {
  std::array<T, 4> e;  // row-major: (0,0) (0,1) (1,0) (1,1)

  Mat2(T a, T b, T c, T d) : e{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  /// Identity built from a ring one. Needed for Laurent entries, whose zero
  /// carries a variable tag.
  static Mat2 identity(const T& one) {
    T zero = one - one;
    return {one, zero, zero, one};
  }

  T& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }
  const T& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }

  T trace() const { return e[0] + e[3]; }
  T det() const { return e[0] * e[3] - e[1] * e[2]; }
  Mat2 adjugate() const { return {e[3], -e[1], -e[2], e[0]}; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
            a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]};
  }
  friend Mat2 operator*(const T& s, const Mat2& m) {
    return {s * m.e[0], s * m.e[1], s * m.e[2], s * m.e[3]};
  }
  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]};
  }
  Mat2 operator-() const { return {-e[0], -e[1], -e[2], -e[3]}; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

using RingMat2 = Mat2<LaurentPoly>;
using IntMat2 = Mat2<BigInt>;
using ComplexMat2 = Mat2<Complex>;

class NonUnitDeterminant : public std::domain_error {
 public:
  explicit NonUnitDeterminant(const std::string& det)
      : std::domain_error("determinant " + det + " is not a unit of the Laurent ring") {}
};

inline RingMat2 laurent_identity(char var) {
  return RingMat2::identity(LaurentPoly::constant(1, var));
}

inline const LaurentPoly& common_var_check(const RingMat2& m) {
  const char v = m.e[0].var();
  for (const auto& x : m.e) {
    if (x.var() != v) throw VariableMismatch(v, x.var());
  }
  return m.e[0];
}

/// Exact inverse: adjugate divided by the determinant, which must be +-x^e.
inline RingMat2 inverse(const RingMat2& m) {
  common_var_check(m);
  const LaurentPoly d = m.det();
  if (!d.is_unit()) throw NonUnitDeterminant(d.to_string());
  RingMat2 adj = m.adjugate();
  for (auto& x : adj.e) x = x.divided_by_unit(d);
  return adj;
}

/// Inverse over SL2(Z)/GL2(Z); the determinant must be +-1.
inline IntMat2 inverse(const IntMat2& m) {
  const BigInt d = m.det();
  if (d != 1 && d != -1) throw std::domain_error("integer matrix is not invertible over Z");
  IntMat2 adj = m.adjugate();
  if (d == -1) adj = -adj;
  return adj;
}

inline ComplexMat2 inverse(const ComplexMat2& m) {
  const Complex d = m.det();
  if (d == Complex(0.0, 0.0)) throw std::domain_error("singular complex matrix");
  const ComplexMat2 adj = m.adjugate();
  return {adj.e[0] / d, adj.e[1] / d, adj.e[2] / d, adj.e[3] / d};
}

inline ComplexMat2 complex_identity() { return ComplexMat2::identity(Complex(1.0, 0.0)); }

inline ComplexMat2 to_complex(const IntMat2& m) {
  return {Complex(m.e[0].convert_to<double>()), Complex(m.e[1].convert_to<double>()),
          Complex(m.e[2].convert_to<double>()), Complex(m.e[3].convert_to<double>())};
}

/// Entrywise evaluation of a Laurent matrix at a nonzero point.
inline ComplexMat2 evaluate(const RingMat2& m, Complex z) {
  return {m.e[0].eval(z), m.e[1].eval(z), m.e[2].eval(z), m.e[3].eval(z)};
}

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const ComplexMat2& a, const ComplexMat2& b) {
  double out = 0.0;
  for (std::size_t i = 0; i < 4; ++i) out = std::max(out, std::abs(a.e[i] - b.e[i]));
  return out;
}

/// Descending modulus, then descending real part, then descending imaginary part.
inline bool eigen_order(const Complex& a, const Complex& b) {
  const double ma = std::abs(a), mb = std::abs(b);
  if (ma != mb) return ma > mb;
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

/// Roots of x^2 - tr x + det. The larger root comes from the sign choice that
/// avoids cancellation; the smaller is det / larger.
inline std::pair<Complex, Complex> eigenpair_2x2(const ComplexMat2& m) {
  const Complex tr = m.trace();
  const Complex det = m.det();
  const Complex disc = std::sqrt(tr * tr - 4.0 * det);
  const Complex plus = tr + disc;
  const Complex minus = tr - disc;
  const Complex big = (std::abs(plus) >= std::abs(minus) ? plus : minus) / 2.0;
  Complex small{0.0, 0.0};
  if (big != Complex(0.0, 0.0)) small = det / big;
  std::pair<Complex, Complex> out{big, small};
  if (eigen_order(out.second, out.first)) std::swap(out.first, out.second);
  return out;
}

}  // namespace m04
