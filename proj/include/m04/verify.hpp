// Identity suite: presentation relations under every representation,
// determinant checks, specialization squares and the ell(r) coprimality property.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "m04/homology.hpp"
#include "m04/quantum.hpp"
#include "m04/word.hpp"

namespace m04 {

struct VerifyItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  /// Negative control: perturbs the image of w2 in the exact representations.
  bool corrupt = false;
  /// Group prefixes to run; nullopt runs everything, an empty list runs nothing.
  std::optional<std::vector<std::string>> only;
  std::uint32_t seed = 20240917;
  int random_words = 200;
};

/// Uniform freely reduced word of length exactly `length`.
template <class Rng>
MappingWord random_word(Rng& rng, std::size_t length) {
  std::uniform_int_distribution<int> pick(0, 5);
  MappingWord w;
  while (w.size() < length) {
    const int x = pick(rng);
    w.push_back({x / 2 + 1, x % 2 == 0 ? 1 : -1});
  }
  return w;
}

template <class Rng>
MappingWord random_word_up_to(Rng& rng, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  return random_word(rng, len(rng));
}

inline std::vector<std::string> verify_groups() {
  return {"relations.affine", "relations.universal", "relations.skein", "relations.geometric",
          "det", "specialization", "homology", "ell"};
}

inline std::vector<VerifyItem> run_verify_suite(const VerifyOptions& options = {}) {
  const auto selected = [&](const std::string& group) {
    if (!options.only) return true;
    for (const auto& prefix : *options.only) {
      if (!prefix.empty() && group.rfind(prefix, 0) == 0) return true;
    }
    return false;
  };

  GeneratorImages<AffineLift> affine = make_images(generator_lift(w1), generator_lift(w2), generator_lift(w3), AffineLift());
  GeneratorImages<RingMat2> universal = universal_images();
  GeneratorImages<RingMat2> skein = skein_images();
  if (options.corrupt) {
    const AffineLift bad_affine(generator_lift_matrix(2), {1, 1});
    affine.set(2, bad_affine, bad_affine.inverse());
    RingMat2 bad_u = universal_generator(2);
    bad_u(1, 0) = -bad_u(1, 0);
    universal.set(2, bad_u, inverse(bad_u));
    RingMat2 bad_s = skein_generator(2);
    bad_s(1, 0) = -bad_s(1, 0);
    skein.set(2, bad_s, inverse(bad_s));
  }

  std::vector<VerifyItem> items;
  const auto relators = presentation_relators();

  if (selected("relations.affine")) {
    for (const auto& [label, word] : relators) {
      const bool ok = affine.evaluate(word) == AffineLift();
      items.push_back({"relations.affine: " + label, ok, ok ? "identity" : "not the identity lift"});
    }
  }
  if (selected("relations.universal")) {
    for (const auto& [label, word] : relators) {
      const bool ok = universal.evaluate(word) == laurent_identity('s');
      items.push_back({"relations.universal: " + label, ok, ok ? "exact identity" : "not the identity"});
    }
  }
  if (selected("relations.skein")) {
    for (const auto& [label, word] : relators) {
      const bool ok = skein.evaluate(word) == laurent_identity('A');
      items.push_back({"relations.skein: " + label, ok, ok ? "exact identity" : "not the identity"});
    }
  }
  if (selected("relations.geometric")) {
    for (const auto& [label, word] : relators) {
      double worst = 0.0;
      for (int n : {2, 3}) {
        for (int k = 1; k <= 6; ++k) {
          const auto m = geometric_rep(QuantumLevel(n, k), word, GeometricKind::Rescaled);
          worst = std::max(worst, max_abs_diff(m, complex_identity()));
        }
      }
      items.push_back({"relations.geometric: " + label, worst < 1e-9, "max residual " + std::to_string(worst)});
    }
  }
  if (selected("det")) {
    for (int i = 1; i <= 3; ++i) {
      const bool u = universal(Generator{i, 1}).det() == LaurentPoly::constant(-1, 's');
      const bool s = skein(Generator{i, 1}).det() == LaurentPoly::constant(-1, 'A');
      items.push_back({"det: universal w" + std::to_string(i), u, u ? "-1" : "not -1"});
      items.push_back({"det: skein w" + std::to_string(i), s, s ? "-1" : "not -1"});
    }
  }
  if (selected("specialization")) {
    std::mt19937 rng(options.seed);
    const Complex s_at_i{0.0, 1.0};
    const Complex a_sq_minus_i = std::polar(1.0, -std::numbers::pi / 4.0);  // A^2 = -i
    double worst = 0.0;
    for (int t = 0; t < options.random_words; ++t) {
      const MappingWord w = random_word_up_to(rng, 8);
      worst = std::max(worst, max_abs_diff(evaluate(skein.evaluate(w), a_sq_minus_i),
                                           evaluate(universal.evaluate(w), s_at_i)));
    }
    items.push_back({"specialization: skein at A^2=-i equals universal at s=i", worst < 1e-10,
                     "max deviation " + std::to_string(worst)});
  }
  if (selected("homology")) {
    std::mt19937 rng(options.seed + 1);
    double worst = 0.0;
    for (int t = 0; t < options.random_words; ++t) {
      const MappingWord w = random_word_up_to(rng, 8);
      const ComplexMat2 at_i = evaluate(universal.evaluate(w), Complex(0.0, 1.0));
      const Complex unit = LaurentPoly::int_pow(Complex(0.0, 1.0), w.exponent_sum());
      const ComplexMat2 lift = to_complex(raw_lift_matrix(w));
      worst = std::max(worst, max_abs_diff((1.0 / unit) * at_i, lift));
    }
    items.push_back({"homology: universal at s=i is i^e(w) times the lift matrix", worst < 1e-10,
                     "max deviation " + std::to_string(worst)});
  }
  if (selected("ell")) {
    int bad = 0;
    for (int r = 3; r <= 1000; ++r) {
      try {
        const int l = ell(r);
        if (std::gcd(l, 4 * r) != 1 || std::abs(2 * l - r) > 4) ++bad;
      } catch (const std::logic_error&) {
        ++bad;
      }
    }
    items.push_back({"ell: gcd(l, 4r) = 1 and |2l - r| <= 4 for 3 <= r <= 1000", bad == 0,
                     std::to_string(bad) + " failures"});
  }
  return items;
}

}  // namespace m04
