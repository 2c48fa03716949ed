// Incidence matrices of the Penner train track tau on the four-punctured
// sphere, Perron-Frobenius primitivity, and the dominant eigenvalue via the
// exact characteristic polynomial.

#pragma once

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "m04/laurent.hpp"
#include "m04/word.hpp"

namespace m04 {

using Rational = boost::multiprecision::cpp_rational;

/// Non-negative integer 4x4 matrix acting on column vectors of branch
/// measures (mu1, mu2, mu3, mu4).
struct IncidenceMatrix {
  std::array<std::array<BigInt, 4>, 4> m{};

  static IncidenceMatrix identity() {
    IncidenceMatrix out;
    for (std::size_t i = 0; i < 4; ++i) out.m[i][i] = 1;
    return out;
  }
  static IncidenceMatrix from(const std::array<std::array<int, 4>, 4>& rows) {
    IncidenceMatrix out;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        if (rows[i][j] < 0) throw std::invalid_argument("incidence entries must be non-negative");
        out.m[i][j] = rows[i][j];
      }
    }
    return out;
  }

  friend IncidenceMatrix operator*(const IncidenceMatrix& a, const IncidenceMatrix& b) {
    IncidenceMatrix out;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        BigInt acc = 0;
        for (std::size_t l = 0; l < 4; ++l) acc += a.m[i][l] * b.m[l][j];
        out.m[i][j] = acc;
      }
    }
    return out;
  }
  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;
};

class NotTrackPreserving : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// I(w1^-1), I(w2), I(w3^-1).
inline IncidenceMatrix base_incidence(const Generator& g) {
  if (g == Generator{1, -1}) return IncidenceMatrix::from({{{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}}});
  if (g == Generator{2, 1}) return IncidenceMatrix::from({{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}}});
  if (g == Generator{3, -1}) return IncidenceMatrix::from({{{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 1, 1}}});
  throw NotTrackPreserving("letter w" + std::to_string(g.index) + (g.sign < 0 ? "^-1" : "") +
                           " does not preserve the train track");
}

inline IncidenceMatrix incidence(const MappingWord& w) {
  IncidenceMatrix out = IncidenceMatrix::identity();
  for (const auto& g : w) out = out * base_incidence(g);
  return out;
}

/// Some power M^p with p <= (4-1)^2 + 1 is entrywise positive (Wielandt).
inline bool is_perron_frobenius(const IncidenceMatrix& a) {
  using Pattern = std::array<std::array<bool, 4>, 4>;
  Pattern base{}, power{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) base[i][j] = power[i][j] = a.m[i][j] > 0;
  }
  for (int p = 1; p <= 10; ++p) {
    bool positive = true;
    for (const auto& row : power) {
      for (bool x : row) positive = positive && x;
    }
    if (positive) return true;
    Pattern next{};
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t l = 0; l < 4; ++l) next[i][j] = next[i][j] || (power[i][l] && base[l][j]);
      }
    }
    power = next;
  }
  return false;
}

/// Coefficients of det(x I - M), constant term first, via Faddeev-LeVerrier.
/// Every division is exact over Z.
inline std::array<BigInt, 5> characteristic_polynomial(const IncidenceMatrix& a) {
  std::array<BigInt, 5> c{};
  c[4] = 1;
  std::array<std::array<BigInt, 4>, 4> acc{};  // M_0 = 0
  for (int step = 1; step <= 4; ++step) {
    // M_step = A M_{step-1} + c_{4-step+1} I
    std::array<std::array<BigInt, 4>, 4> next{};
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        BigInt s = 0;
        for (std::size_t l = 0; l < 4; ++l) s += a.m[i][l] * acc[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[static_cast<std::size_t>(4 - step + 1)];
    }
    acc = next;
    BigInt tr = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t l = 0; l < 4; ++l) tr += a.m[i][l] * acc[l][i];
    }
    c[static_cast<std::size_t>(4 - step)] = -tr / step;
  }
  return c;
}

namespace detail {

/// Dense rational polynomial, constant term first, no trailing zeros.
using RPoly = std::vector<Rational>;

inline void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RPoly derivative(const RPoly& p) {
  RPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<int>(i));
  trim(out);
  return out;
}

/// Quotient and remainder of p / d.
inline std::pair<RPoly, RPoly> divmod(RPoly p, const RPoly& d) {
  RPoly q(p.size() >= d.size() ? p.size() - d.size() + 1 : 0, Rational(0));
  while (p.size() >= d.size() && !p.empty()) {
    const std::size_t shift = p.size() - d.size();
    const Rational f = p.back() / d.back();
    q[shift] = f;
    for (std::size_t i = 0; i < d.size(); ++i) p[i + shift] -= f * d[i];
    p.pop_back();
    trim(p);
  }
  trim(q);
  return {q, p};
}

inline Rational eval(const RPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline double eval(const RPoly& p, double x) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

inline std::vector<RPoly> sturm_chain(const RPoly& p) {
  std::vector<RPoly> chain{p, derivative(p)};
  while (!chain.back().empty()) {
    RPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    for (auto& x : r) x = -x;
    chain.push_back(r);
  }
  chain.pop_back();
  return chain;
}

inline int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Number of distinct real roots in (x, +inf). For a square-free chain this
/// also holds when x itself is a root.
inline int roots_above(const std::vector<RPoly>& chain, const Rational& x) {
  std::vector<int> at_x, at_inf;
  for (const auto& p : chain) {
    const Rational v = eval(p, x);
    at_x.push_back(v > 0 ? 1 : (v < 0 ? -1 : 0));
    at_inf.push_back(p.back() > 0 ? 1 : -1);
  }
  return sign_changes(at_x) - sign_changes(at_inf);
}

}  // namespace detail

class NoRealRoot : public std::domain_error {
 public:
  NoRealRoot() : std::domain_error("polynomial has no real root") {}
};

/// Largest real root of an integer polynomial (constant term first). The
/// root is isolated exactly with a Sturm chain of the square-free part,
/// then refined by safeguarded Newton steps to relative accuracy ~1e-15.
inline double largest_real_root(std::span<const BigInt> coefficients) {
  detail::RPoly p;
  for (const auto& c : coefficients) p.emplace_back(c);
  detail::trim(p);
  if (p.size() < 2) throw NoRealRoot();

  const auto base_chain = detail::sturm_chain(p);
  detail::RPoly sqfree = detail::divmod(p, base_chain.back()).first;
  const auto chain = detail::sturm_chain(sqfree);

  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < sqfree.size(); ++i) bound = std::max(bound, Rational(abs(sqfree[i] / sqfree.back())));
  bound += 1;

  Rational lo = -bound, hi = bound;
  if (detail::roots_above(chain, lo) == 0) throw NoRealRoot();
  // Exact bisection until (lo, hi] holds only the largest root. At a root of
  // the square-free part the chain still counts roots strictly above it.
  for (int iter = 0; iter < 400; ++iter) {
    const Rational width = hi - lo;
    const Rational scale = abs(hi) > 1 ? Rational(abs(hi)) : Rational(1);
    if (detail::roots_above(chain, lo) == 1 && width * 1024 < scale) break;
    const Rational mid = (lo + hi) / 2;
    const int above_mid = detail::roots_above(chain, mid);
    if (above_mid == 0 && detail::eval(sqfree, mid) == 0) return mid.convert_to<double>();
    if (above_mid >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  // hi is never a root here, so its sign brackets the root against lo.
  const detail::RPoly dq = detail::derivative(sqfree);
  double a = lo.convert_to<double>(), b = hi.convert_to<double>();
  const bool hi_positive = detail::eval(sqfree, hi) > 0;
  double x = 0.5 * (a + b);
  for (int iter = 0; iter < 200; ++iter) {
    const double fx = detail::eval(sqfree, x);
    if (fx == 0.0) return x;
    if ((fx > 0) == hi_positive) {
      b = x;
    } else {
      a = x;
    }
    const double d = detail::eval(dq, x);
    double next = d != 0.0 ? x - fx / d : 0.5 * (a + b);
    if (!(next > a && next < b)) next = 0.5 * (a + b);
    if (std::abs(next - x) <= 1e-16 * std::abs(x) || b - a <= 4e-16 * std::abs(b)) return next;
    x = next;
  }
  return x;
}

class NotPrimitive : public std::domain_error {
 public:
  NotPrimitive() : std::domain_error("incidence matrix is not Perron-Frobenius (primitive)") {}
};

/// Spectral radius of a non-negative matrix; by Perron-Frobenius it is the
/// largest real eigenvalue.
inline double spectral_radius(const IncidenceMatrix& a) {
  const auto c = characteristic_polynomial(a);
  return largest_real_root(c);
}

/// Dominant eigenvalue of a primitive incidence matrix.
inline double pf_eigenvalue(const IncidenceMatrix& a) {
  if (!is_perron_frobenius(a)) throw NotPrimitive();
  return spectral_radius(a);
}

inline constexpr double kSwitchTolerance = 1e-9;

class SwitchConditionViolated : public std::invalid_argument {
 public:
  SwitchConditionViolated() : std::invalid_argument("measure violates the switch condition mu1 + mu2 = mu3 + mu4") {}
};

/// Branch weights (mu1..mu4) on tau; mu5 and mu6 are determined by these.
class TransverseMeasure {
 public:
  explicit TransverseMeasure(std::array<double, 4> mu) : mu_(mu) {
    double scale = 1.0;
    for (double x : mu_) {
      if (!(x >= 0.0) || !std::isfinite(x)) throw std::invalid_argument("branch measures must be finite and non-negative");
      scale = std::max(scale, x);
    }
    if (std::abs(mu_[0] + mu_[1] - mu_[2] - mu_[3]) > kSwitchTolerance * scale) throw SwitchConditionViolated();
  }
  const std::array<double, 4>& mu() const noexcept { return mu_; }

 private:
  std::array<double, 4> mu_;
};

inline TransverseMeasure apply_measure(const IncidenceMatrix& a, const TransverseMeasure& measure) {
  std::array<double, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out[i] += a.m[i][j].convert_to<double>() * measure.mu()[j];
  }
  return TransverseMeasure(out);
}

}  // namespace m04
