// The homology representation h : M(0,4) -> PSL2(Z) through affine lifts to
// the branched double cover T = R^2/Z^2, and the Nielsen-Thurston
// classification it determines.

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string_view>

#include "m04/matrix.hpp"
#include "m04/word.hpp"

namespace m04 {

/// Torus map x -> A x + v with A in SL2(Z) and v in (1/2 Z)^2 / Z^2,
/// modulo (A, v) ~ (-A, -v). The vector is stored as numerators over 2,
/// each 0 or 1. Canonical form picks the sign making the first nonzero
/// entry of A positive.
class AffineLift {
 public:
  AffineLift() : matrix_(1, 0, 0, 1) {}
  AffineLift(IntMat2 matrix, std::array<int, 2> half_vector)
      : matrix_(std::move(matrix)), half_{mod2(half_vector[0]), mod2(half_vector[1])} {
    if (matrix_.det() != 1) throw std::invalid_argument("affine lift matrix must have determinant 1");
    canonicalize();
  }

  const IntMat2& matrix() const noexcept { return matrix_; }
  /// Numerators of v over 2.
  const std::array<int, 2>& half_vector() const noexcept { return half_; }

  /// (A, v) o (B, w) = (AB, Aw + v).
  friend AffineLift operator*(const AffineLift& a, const AffineLift& b) {
    const IntMat2& m = a.matrix_;
    std::array<int, 2> v{
        static_cast<int>((m(0, 0) * b.half_[0] + m(0, 1) * b.half_[1] + a.half_[0]) % 2),
        static_cast<int>((m(1, 0) * b.half_[0] + m(1, 1) * b.half_[1] + a.half_[1]) % 2)};
    return AffineLift(a.matrix_ * b.matrix_, v);
  }

  /// (A^-1, -A^-1 v).
  AffineLift inverse() const {
    const IntMat2 inv = m04::inverse(matrix_);
    std::array<int, 2> v{static_cast<int>((-(inv(0, 0) * half_[0] + inv(0, 1) * half_[1])) % 2),
                         static_cast<int>((-(inv(1, 0) * half_[0] + inv(1, 1) * half_[1])) % 2)};
    return AffineLift(inv, v);
  }

  bool matrix_is_pm_identity() const {
    return matrix_(0, 1) == 0 && matrix_(1, 0) == 0 && matrix_(0, 0) == matrix_(1, 1) &&
           (matrix_(0, 0) == 1 || matrix_(0, 0) == -1);
  }

  friend bool operator==(const AffineLift&, const AffineLift&) = default;

 private:
  static int mod2(int x) { return ((x % 2) + 2) % 2; }

  void canonicalize() {
    half_ = {mod2(half_[0]), mod2(half_[1])};
    for (const auto& x : matrix_.e) {
      if (x == 0) continue;
      if (x < 0) matrix_ = -matrix_;
      break;
    }
  }

  IntMat2 matrix_;
  std::array<int, 2> half_{0, 0};
};

inline AffineLift inverse(const AffineLift& a) { return a.inverse(); }

/// Integer matrices A_i of the generator lifts, before sign normalization.
inline IntMat2 generator_lift_matrix(int index) {
  if (index == 2) return {1, 0, -1, 1};
  return {1, 1, 0, 1};
}

inline AffineLift generator_lift(const Generator& g) {
  static const std::array<std::array<int, 2>, 3> kHalf{{{1, 0}, {0, 1}, {0, 0}}};
  AffineLift lift(generator_lift_matrix(g.index), kHalf[static_cast<std::size_t>(g.index - 1)]);
  return g.sign > 0 ? lift : lift.inverse();
}

inline AffineLift affine_lift(const MappingWord& w) {
  AffineLift out;
  for (const auto& g : w) out = out * generator_lift(g);
  return out;
}

/// Canonical-sign PSL2(Z) representative of h(w).
inline IntMat2 homology_matrix(const MappingWord& w) { return affine_lift(w).matrix(); }

/// Ordered product of the SL2(Z) generator matrices A_i^{+-1}, with no sign
/// normalization. Equals +-homology_matrix(w).
inline IntMat2 raw_lift_matrix(const MappingWord& w) {
  IntMat2 out(1, 0, 0, 1);
  for (const auto& g : w) {
    const IntMat2 a = generator_lift_matrix(g.index);
    out = out * (g.sign > 0 ? a : inverse(a));
  }
  return out;
}

enum class NTType { FiniteOrder, Reducible, PseudoAnosov };

inline std::string_view to_string(NTType t) {
  switch (t) {
    case NTType::FiniteOrder: return "finite_order";
    case NTType::Reducible: return "reducible";
    case NTType::PseudoAnosov: return "pseudo_anosov";
  }
  return "unknown";
}

struct NTClass {
  NTType type = NTType::FiniteOrder;
  BigInt trace_abs = 0;
  std::optional<double> stretch;
};

/// Larger root of x^2 - t x + 1 for t > 2. The discriminant is formed
/// exactly before the square root.
inline double anosov_eigenvalue(const BigInt& t) {
  const BigInt disc = t * t - 4;
  return (t.convert_to<double>() + std::sqrt(disc.convert_to<double>())) / 2.0;
}

inline NTClass classify(const IntMat2& h) {
  NTClass out;
  const BigInt tr = h.trace();
  out.trace_abs = tr < 0 ? BigInt(-tr) : tr;
  if (out.trace_abs > 2) {
    out.type = NTType::PseudoAnosov;
    out.stretch = anosov_eigenvalue(out.trace_abs);
  } else if (out.trace_abs < 2) {
    out.type = NTType::FiniteOrder;
  } else {
    // Parabolic, or +-I. The kernel N of h is finite, so +-I is finite order.
    const bool pm_identity = h(0, 1) == 0 && h(1, 0) == 0;
    out.type = pm_identity ? NTType::FiniteOrder : NTType::Reducible;
  }
  return out;
}

inline NTClass nt_classify(const MappingWord& w) { return classify(homology_matrix(w)); }

inline std::optional<double> stretch_factor(const MappingWord& w) { return nt_classify(w).stretch; }

/// w lies in the translation subgroup N = ker h.
inline bool in_translation_subgroup(const MappingWord& w) {
  return affine_lift(w).matrix_is_pm_identity();
}

/// Distinct affine lifts are distinct mapping classes, so this decides the
/// word problem.
inline bool is_identity(const MappingWord& w) {
  const AffineLift lift = affine_lift(w);
  return lift.matrix_is_pm_identity() && lift.half_vector() == std::array<int, 2>{0, 0};
}

}  // namespace m04
