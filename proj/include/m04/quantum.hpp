// Quantum representations of M(0,4) on the two-dimensional TQFT space of the
// four-punctured sphere:
//
//   * the universal representation over Z[s, 1/s],
//   * the geometric SU(n) level-k matrices (tilde and rescaled forms),
//   * the Kauffman-bracket skein representation over Z[A, 1/A], its
//     specialization at the roots A_k, and the level-k convergence data.

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "m04/homology.hpp"
#include "m04/interpolate.hpp"
#include "m04/matrix.hpp"
#include "m04/word.hpp"

namespace m04 {

/// Images of the three generators and their inverses; evaluates words as
/// ordered products.
template <class M>
class GeneratorImages {
 public:
  GeneratorImages(std::array<M, 3> forward, std::array<M, 3> backward, M identity)
      : forward_(std::move(forward)), backward_(std::move(backward)), identity_(std::move(identity)) {}

  const M& operator()(const Generator& g) const {
    const auto i = static_cast<std::size_t>(g.index - 1);
    return g.sign > 0 ? forward_[i] : backward_[i];
  }
  const M& identity() const noexcept { return identity_; }

  M evaluate(const MappingWord& w) const {
    M out = identity_;
    for (const auto& g : w) out = out * (*this)(g);
    return out;
  }

  /// Replaces the image of generator `index` (and its inverse).
  void set(int index, M forward, M backward) {
    forward_[static_cast<std::size_t>(index - 1)] = std::move(forward);
    backward_[static_cast<std::size_t>(index - 1)] = std::move(backward);
  }

 private:
  std::array<M, 3> forward_;
  std::array<M, 3> backward_;
  M identity_;
};

template <class M>
GeneratorImages<M> make_images(const M& a, const M& b, const M& c, const M& identity) {
  return {{a, b, c}, {inverse(a), inverse(b), inverse(c)}, identity};
}

// ---------------------------------------------------------------------------
// Universal representation

/// rho(w1) = rho(w3) = s^-1 [[s^2, -(s^4+s^2+1)], [0, -1]],
/// rho(w2) = s^-1 [[s^2, 0], [1, -1]].
inline RingMat2 universal_generator(int index) {
  const char s = 's';
  const auto p = [](std::initializer_list<std::pair<int, long long>> t) {
    return LaurentPoly::from_terms(t, 's');
  };
  if (index == 2) return {p({{1, 1}}), LaurentPoly(s), p({{-1, 1}}), p({{-1, -1}})};
  return {p({{1, 1}}), p({{3, -1}, {1, -1}, {-1, -1}}), LaurentPoly(s), p({{-1, -1}})};
}

inline GeneratorImages<RingMat2> universal_images() {
  return make_images(universal_generator(1), universal_generator(2), universal_generator(3),
                     laurent_identity('s'));
}

inline RingMat2 universal_rep(const MappingWord& w) {
  static const GeneratorImages<RingMat2> images = universal_images();
  return images.evaluate(w);
}

/// universal_rep(w) is a Laurent scalar times the identity. This happens
/// exactly on the translation subgroup N.
inline bool scalar_kernel_test(const MappingWord& w) {
  const RingMat2 m = universal_rep(w);
  return m(0, 1).is_zero() && m(1, 0).is_zero() && m(0, 0) == m(1, 1);
}

// ---------------------------------------------------------------------------
// Geometric SU(n) level-k matrices

struct QuantumLevel {
  int n = 2;
  int k = 1;

  QuantumLevel(int n_, int k_) : n(n_), k(k_) {
    if (n < 2) throw std::invalid_argument("SU(n) rank parameter must satisfy n >= 2");
    if (k < 1) throw std::invalid_argument("level must satisfy k >= 1");
    if (n + k < 3) throw std::invalid_argument("k + n must be at least 3");
  }

  /// q^x with the principal branch e^{2 pi i x / (k + n)}.
  Complex q_pow(double x) const {
    return std::polar(1.0, 2.0 * std::numbers::pi * x / static_cast<double>(k + n));
  }
  Complex q() const { return q_pow(1.0); }
  /// s = q^{1/2} = e^{pi i / (k + n)}.
  Complex s() const { return q_pow(0.5); }
};

enum class GeometricKind { Tilde, Rescaled };

/// Matrices of sigma_1 (= sigma_3) and sigma_2 in the rescaled path basis.
inline std::array<ComplexMat2, 2> tilde_generators(const QuantumLevel& level) {
  const Complex q = level.q();
  const Complex twist = level.q_pow(-static_cast<double>(level.n + 1) / (2.0 * level.n));
  const ComplexMat2 s1 = twist * ComplexMat2{q, 0.0, 0.0, -1.0};
  const ComplexMat2 s2 = (twist / (1.0 + q)) * ComplexMat2{-1.0, q * q * q + q * q + q, 1.0, q * q};
  return {s1, s2};
}

/// Conjugator to the triangular basis: [[1, q^2+q+1], [0, q+1]].
inline ComplexMat2 triangular_conjugator(const QuantumLevel& level) {
  const Complex q = level.q();
  return {1.0, q * q + q + 1.0, 0.0, q + 1.0};
}

inline GeneratorImages<ComplexMat2> geometric_images(const QuantumLevel& level, GeometricKind kind) {
  auto [s1, s2] = tilde_generators(level);
  if (kind == GeometricKind::Rescaled) {
    const ComplexMat2 c = triangular_conjugator(level);
    const ComplexMat2 c_inv = inverse(c);
    const Complex scale = level.q_pow(1.0 / (2.0 * level.n));
    s1 = scale * (c * s1 * c_inv);
    s2 = scale * (c * s2 * c_inv);
  }
  return make_images(s1, s2, s1, complex_identity());
}

inline ComplexMat2 geometric_rep(const QuantumLevel& level, const MappingWord& w, GeometricKind kind) {
  return geometric_images(level, kind).evaluate(w);
}

// ---------------------------------------------------------------------------
// Skein representation

/// rho^(S)(w_i) = A^-2 times the Kauffman-bracket matrices in the basis
/// (A^-1 h0, A v0):  w1, w3 -> [[A^-2, -A^2], [0, -A^2]],
/// w2 -> [[-A^2, 0], [-A^-2, A^-2]].
inline RingMat2 skein_generator(int index) {
  const auto p = [](std::initializer_list<std::pair<int, long long>> t) {
    return LaurentPoly::from_terms(t, 'A');
  };
  if (index == 2) return {p({{2, -1}}), LaurentPoly('A'), p({{-2, -1}}), p({{-2, 1}})};
  return {p({{-2, 1}}), p({{2, -1}}), LaurentPoly('A'), p({{2, -1}})};
}

inline GeneratorImages<RingMat2> skein_images() {
  return make_images(skein_generator(1), skein_generator(2), skein_generator(3), laurent_identity('A'));
}

inline RingMat2 skein_rep(const MappingWord& w) {
  static const GeneratorImages<RingMat2> images = skein_images();
  return images.evaluate(w);
}

/// Skein generators evaluated at a point A = a, for direct numeric products.
inline GeneratorImages<ComplexMat2> skein_images_at(Complex a) {
  const auto g1 = evaluate(skein_generator(1), a);
  const auto g2 = evaluate(skein_generator(2), a);
  return make_images(g1, g2, g1, complex_identity());
}

// ---------------------------------------------------------------------------
// Root schedule A_k = e^{-2 pi i l / (4k + 8)}, l = ell(k + 2)

/// An integer l with gcd(l, 4r) = 1 and |2l - r| <= 4.
inline int ell(int r) {
  if (r < 3) throw std::invalid_argument("ell(r) requires r >= 3");
  int out = 0;
  switch (r % 4) {
    case 0: out = (r + 2) / 2; break;
    case 1: out = (r + 1) / 2; break;
    case 2: out = (r + 4) / 2; break;
    default: out = (r - 1) / 2; break;
  }
  if (std::gcd(out, 4 * r) != 1 || std::abs(2 * out - r) > 4) {
    throw std::logic_error("ell(r) postcondition violated");
  }
  return out;
}

struct RootSchedulePoint {
  int k = 1;
  int ell = 1;
  Complex value;

  int order() const { return 4 * k + 8; }
};

inline RootSchedulePoint root_schedule(int k) {
  if (k < 1) throw std::invalid_argument("root schedule requires k >= 1");
  const int l = ell(k + 2);
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(4 * k + 8);
  return {k, l, std::polar(1.0, angle)};
}

/// rho_k^(S)(w): the skein matrix specialized at A = A_k.
inline ComplexMat2 level_matrix(const MappingWord& w, int k) {
  return evaluate(skein_rep(w), root_schedule(k).value);
}

inline constexpr double kUnitCircleSlack = 1e-9;

struct ConvergenceRow {
  int k = 1;
  double trace_abs = 0.0;
  std::optional<double> lambda_abs;
};

/// Modulus of the dominant eigenvalue when it is strictly dominant and
/// exceeds 1 + 1e-9.
inline std::optional<double> dominant_modulus(const ComplexMat2& m) {
  const auto [l1, l2] = eigenpair_2x2(m);
  const double m1 = std::abs(l1);
  if (m1 > 1.0 + kUnitCircleSlack && m1 > std::abs(l2)) return m1;
  return std::nullopt;
}

inline std::vector<ConvergenceRow> trace_convergence(const MappingWord& w, int k_min, int k_max, int step) {
  if (k_min < 1 || k_max < k_min) throw std::invalid_argument("require 1 <= k_min <= k_max");
  if (step < 1) throw std::invalid_argument("step must be positive");
  const RingMat2 exact = skein_rep(w);
  std::vector<ConvergenceRow> rows;
  for (int k = k_min; k <= k_max; k += step) {
    const ComplexMat2 m = evaluate(exact, root_schedule(k).value);
    rows.push_back({k, std::abs(m.trace()), dominant_modulus(m)});
  }
  return rows;
}

/// |Tr rho_k(w)| > 2 means the eigenvalues are not both roots of unity, so
/// no power of the matrix is scalar.
inline bool infinite_order_certificate(const MappingWord& w, int k) {
  return std::abs(level_matrix(w, k).trace()) > 2.0 + kUnitCircleSlack;
}

// ---------------------------------------------------------------------------
// Reconstruction of the skein matrix from finitely many specializations

/// u_j = e^{2 pi i j / N} e^{i pi / (7N)}, returned as the square roots
/// A_j with A_j^2 = u_j.
inline std::vector<Complex> reconstruction_points(int count) {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(count));
  const double n = static_cast<double>(count);
  for (int j = 0; j < count; ++j) {
    const double u_angle = 2.0 * std::numbers::pi * j / n + std::numbers::pi / (7.0 * n);
    out.push_back(std::polar(1.0, u_angle / 2.0));
  }
  return out;
}

/// Interpolates each entry of rho^(S)(w) from `sample_count` numeric
/// evaluations; exponents are even and lie in [-2L, 2L].
inline RingMat2 reconstruct_skein(const MappingWord& w, int sample_count) {
  const int length = static_cast<int>(w.size());
  if (sample_count < 2 * length + 1) {
    throw InterpolationError("need at least " + std::to_string(2 * length + 1) + " samples, got " +
                             std::to_string(sample_count));
  }
  const auto points = reconstruction_points(sample_count);
  std::array<std::vector<Sample>, 4> entries;
  for (const Complex& a : points) {
    const ComplexMat2 m = skein_images_at(a).evaluate(w);
    for (std::size_t i = 0; i < 4; ++i) entries[i].push_back({a, m.e[i]});
  }
  const int lo = -2 * length;
  const int hi = lo + 2 * (sample_count - 1);
  return {interpolate_laurent(entries[0], lo, hi, 2, 'A'), interpolate_laurent(entries[1], lo, hi, 2, 'A'),
          interpolate_laurent(entries[2], lo, hi, 2, 'A'), interpolate_laurent(entries[3], lo, hi, 2, 'A')};
}

}  // namespace m04
