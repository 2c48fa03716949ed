// JSON and CSV renderings of the library's values. Floats are rounded to 15
// significant digits so that output is byte-stable across runs.

#pragma once

#include <cstdio>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "m04/homology.hpp"
#include "m04/matrix.hpp"
#include "m04/quantum.hpp"
#include "m04/traintrack.hpp"
#include "m04/word.hpp"

namespace m04 {

using nlohmann::json;

inline double round15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

inline std::string format15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

inline json float_json(double x) { return round15(x); }

inline json float_json(const std::optional<double>& x) { return x ? json(round15(*x)) : json(nullptr); }

/// Integers that fit in 64 bits are JSON numbers; larger ones are decimal strings.
inline json integer_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

/// {"var": "A", "terms": [[exponent, coefficient], ...]}, descending exponents.
inline json laurent_json(const LaurentPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back(json::array({it->first, integer_json(it->second)}));
  }
  return {{"var", std::string(1, p.var())}, {"terms", terms}};
}

inline json matrix_json(const RingMat2& m) {
  return json::array({json::array({laurent_json(m(0, 0)), laurent_json(m(0, 1))}),
                      json::array({laurent_json(m(1, 0)), laurent_json(m(1, 1))})});
}

inline json matrix_json(const IntMat2& m) {
  return json::array({json::array({integer_json(m(0, 0)), integer_json(m(0, 1))}),
                      json::array({integer_json(m(1, 0)), integer_json(m(1, 1))})});
}

inline json complex_json(Complex z) { return json::array({round15(z.real()), round15(z.imag())}); }

inline json matrix_json(const ComplexMat2& m) {
  return json::array({json::array({complex_json(m(0, 0)), complex_json(m(0, 1))}),
                      json::array({complex_json(m(1, 0)), complex_json(m(1, 1))})});
}

inline json matrix_json(const IncidenceMatrix& a) {
  json rows = json::array();
  for (const auto& row : a.m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(integer_json(x));
    rows.push_back(r);
  }
  return rows;
}

/// Half-integer vector coordinates as exact rational strings: "0" or "1/2".
inline json half_vector_json(const std::array<int, 2>& half) {
  const auto one = [](int h) { return h == 0 ? std::string("0") : std::string("1/2"); };
  return json::array({one(half[0]), one(half[1])});
}

inline json classification_json(const MappingWord& w) {
  const AffineLift lift = affine_lift(w);
  const NTClass c = classify(lift.matrix());
  return {{"word", render(w)},
          {"class", std::string(to_string(c.type))},
          {"trace_abs", integer_json(c.trace_abs)},
          {"stretch", float_json(c.stretch)},
          {"in_N", lift.matrix_is_pm_identity()},
          {"matrix", matrix_json(lift.matrix())},
          {"vector", half_vector_json(lift.half_vector())}};
}

/// Incidence data plus the cross-check against the homology stretching factor.
inline json traintrack_json(const MappingWord& w) {
  const IncidenceMatrix a = incidence(w);
  const bool primitive = is_perron_frobenius(a);
  const double radius = spectral_radius(a);
  const std::optional<double> pf = primitive ? std::optional<double>(radius) : std::nullopt;
  const std::optional<double> stretch = stretch_factor(w);
  json delta = nullptr;
  if (stretch) delta = round15(radius - *stretch);
  return {{"word", render(w)},
          {"incidence", matrix_json(a)},
          {"primitive", primitive},
          {"pf_eigenvalue", float_json(pf)},
          {"spectral_radius", float_json(radius)},
          {"homology_stretch", float_json(stretch)},
          {"delta", delta}};
}

inline json convergence_row_json(const ConvergenceRow& row) {
  return {{"k", row.k}, {"trace_abs", float_json(row.trace_abs)}, {"lambda_abs", float_json(row.lambda_abs)}};
}

/// Header "k,trace_abs,lambda_abs"; an absent eigenvalue is an empty field.
inline void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "k,trace_abs,lambda_abs\n";
  for (const auto& row : rows) {
    out << row.k << ',' << format15(row.trace_abs) << ',';
    if (row.lambda_abs) out << format15(*row.lambda_abs);
    out << '\n';
  }
}

}  // namespace m04
