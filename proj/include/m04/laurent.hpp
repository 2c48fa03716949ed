// Integer Laurent polynomials in one variable with arbitrary-precision
// coefficients.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace m04 {

using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

class VariableMismatch : public std::invalid_argument {
 public:
  VariableMismatch(char a, char b)
      : std::invalid_argument(std::string("Laurent variable mismatch: ") + a + " vs " + b) {}
};

/// Sum of c_e x^e over finitely many integer exponents e. Zero coefficients
/// are never stored, so the zero polynomial is the empty map.
class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  explicit LaurentPoly(char var = 's') : var_(var) {}

  static LaurentPoly monomial(BigInt coefficient, int exponent, char var) {
    LaurentPoly p(var);
    if (coefficient != 0) p.terms_.emplace(exponent, std::move(coefficient));
    return p;
  }
  static LaurentPoly constant(BigInt c, char var) { return monomial(std::move(c), 0, var); }

  /// Builds from (exponent, coefficient) pairs; repeated exponents accumulate.
  static LaurentPoly from_terms(std::initializer_list<std::pair<int, long long>> terms, char var) {
    LaurentPoly p(var);
    for (const auto& [e, c] : terms) p.add_term(e, BigInt(c));
    return p;
  }

  char var() const noexcept { return var_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  BigInt coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Units of Z[x, 1/x] are exactly +-x^e.
  bool is_unit() const {
    return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  void add_term(int exponent, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check_var(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    check_var(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_var(b);
    LaurentPoly out(a.var_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  /// Exact division by a unit +-x^e.
  LaurentPoly divided_by_unit(const LaurentPoly& unit) const {
    check_var(unit);
    if (!unit.is_unit()) throw std::domain_error("divisor is not a unit of the Laurent ring");
    const auto& [e, c] = *unit.terms_.begin();
    LaurentPoly out(var_);
    for (const auto& [ex, cx] : terms_) out.terms_.emplace(ex - e, c == 1 ? cx : BigInt(-cx));
    return out;
  }

  /// Same coefficients, variable renamed.
  LaurentPoly with_var(char var) const {
    LaurentPoly out = *this;
    out.var_ = var;
    return out;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

  /// Horner evaluation over the exponent-sorted terms.
  Complex eval(Complex z) const {
    if (z == Complex(0.0, 0.0)) throw std::domain_error("Laurent evaluation at zero");
    if (terms_.empty()) return {0.0, 0.0};
    Complex acc{0.0, 0.0};
    int prev = terms_.rbegin()->first;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      acc = acc * int_pow(z, prev - it->first) + Complex(it->second.convert_to<double>(), 0.0);
      prev = it->first;
    }
    return acc * int_pow(z, prev);
  }

  /// Descending exponents, e.g. "-A^4 + 2 - A^-2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool negative = c < 0;
      const BigInt mag = negative ? BigInt(-c) : c;
      if (out.empty()) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      if (e == 0) {
        out += mag.str();
        continue;
      }
      if (mag != 1) out += mag.str() + '*';
      out += var_;
      if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
  }

  static Complex int_pow(Complex z, int n) {
    if (n < 0) return 1.0 / int_pow(z, -n);
    Complex result{1.0, 0.0};
    while (n > 0) {
      if (n & 1) result *= z;
      z *= z;
      n >>= 1;
    }
    return result;
  }

 private:
  void check_var(const LaurentPoly& o) const {
    if (o.var_ != var_) throw VariableMismatch(var_, o.var_);
  }

  Terms terms_;
  char var_;
};

/// Sum of |c_e|; scale for evaluation error bounds.
inline double l1_norm(const LaurentPoly& p) {
  double n = 0.0;
  for (const auto& [e, c] : p.terms()) n += abs(c).convert_to<double>();
  return n;
}

}  // namespace m04
