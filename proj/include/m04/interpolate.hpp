// Recovery of an integer Laurent polynomial from complex samples.

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "m04/laurent.hpp"

namespace m04 {

struct Sample {
  Complex point;
  Complex value;
};

class InterpolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kRoundingTolerance = 1e-6;

/// Solves for the unique polynomial supported on {lo, lo+stride, ..., hi}
/// matching every sample, then rounds the coefficients to integers.
inline LaurentPoly interpolate_laurent(std::span<const Sample> samples, int lo, int hi, int stride,
                                       char var) {
  if (stride <= 0 || hi < lo || (hi - lo) % stride != 0) {
    throw std::invalid_argument("bad exponent support");
  }
  const auto n = static_cast<std::size_t>((hi - lo) / stride + 1);
  if (samples.size() != n) {
    throw InterpolationError("need " + std::to_string(n) + " samples for the declared support, got " +
                             std::to_string(samples.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (samples[i].point == Complex(0.0, 0.0)) throw InterpolationError("sample point at zero");
    for (std::size_t j = 0; j < i; ++j) {
      if (samples[i].point == samples[j].point) throw InterpolationError("duplicate sample points");
    }
  }

  const auto size = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd vandermonde(size, size);
  Eigen::VectorXcd rhs(size);
  for (Eigen::Index r = 0; r < size; ++r) {
    const Complex z = samples[static_cast<std::size_t>(r)].point;
    for (Eigen::Index c = 0; c < size; ++c) {
      vandermonde(r, c) = LaurentPoly::int_pow(z, lo + static_cast<int>(c) * stride);
    }
    rhs(r) = samples[static_cast<std::size_t>(r)].value;
  }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(vandermonde);
  if (!lu.isInvertible()) throw InterpolationError("singular Vandermonde system");
  const Eigen::VectorXcd coeffs = lu.solve(rhs);

  LaurentPoly out(var);
  for (Eigen::Index c = 0; c < size; ++c) {
    const Complex x = coeffs(c);
    const double rounded = std::round(x.real());
    if (std::abs(x - Complex(rounded, 0.0)) >= kRoundingTolerance) {
      throw InterpolationError("non-integral coefficient at exponent " +
                               std::to_string(lo + static_cast<int>(c) * stride));
    }
    out.add_term(lo + static_cast<int>(c) * stride, BigInt(static_cast<long long>(rounded)));
  }
  return out;
}

}  // namespace m04
