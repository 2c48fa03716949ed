#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "m04/homology.hpp"
#include "m04/verify.hpp"

using namespace m04;

namespace {

const double kGolden2 = (3.0 + std::sqrt(5.0)) / 2.0;

IntMat2 canonical(const IntMat2& m) { return AffineLift(m, {0, 0}).matrix(); }

}  // namespace

TEST(AffineLift, Generators) {
  const AffineLift a = affine_lift(parse_word("w1"));
  EXPECT_EQ(a.matrix(), IntMat2(1, 1, 0, 1));
  EXPECT_EQ(a.half_vector(), (std::array<int, 2>{1, 0}));
  const AffineLift b = affine_lift(parse_word("w2"));
  EXPECT_EQ(b.matrix(), IntMat2(1, 0, -1, 1));
  EXPECT_EQ(b.half_vector(), (std::array<int, 2>{0, 1}));
  const AffineLift c = affine_lift(parse_word("w3"));
  EXPECT_EQ(c.half_vector(), (std::array<int, 2>{0, 0}));
}

TEST(AffineLift, EmptyWordIsIdentity) { EXPECT_EQ(affine_lift(MappingWord{}), AffineLift()); }

TEST(AffineLift, HalfTranslation) {
  const AffineLift a = affine_lift(parse_word("w1 w3^-1"));
  EXPECT_EQ(a.matrix(), IntMat2(1, 0, 0, 1));
  EXPECT_EQ(a.half_vector(), (std::array<int, 2>{1, 0}));
}

TEST(AffineLift, CanonicalSign) {
  const AffineLift a(IntMat2(-1, 0, 0, -1), {1, 1});
  EXPECT_EQ(a.matrix(), IntMat2(1, 0, 0, 1));
  const AffineLift b(IntMat2(0, -1, 1, 0), {0, 1});
  EXPECT_EQ(b.matrix(), IntMat2(0, 1, -1, 0));
  EXPECT_THROW(AffineLift(IntMat2(2, 0, 0, 1), {0, 0}), std::invalid_argument);
}

TEST(HomologyMatrix, Examples) {
  EXPECT_EQ(homology_matrix(parse_word("w2")), IntMat2(1, 0, -1, 1));
  EXPECT_EQ(homology_matrix(parse_word("w1^-1 w2")), IntMat2(2, -1, -1, 1));
  EXPECT_EQ(homology_matrix(parse_word("w1 w3^-1")), IntMat2(1, 0, 0, 1));
  EXPECT_EQ(homology_matrix(parse_word("w1 w2 w3")), IntMat2(0, 1, -1, 0));
}

TEST(Classify, Examples) {
  const NTClass pa = nt_classify(parse_word("w1^-1 w2"));
  EXPECT_EQ(pa.type, NTType::PseudoAnosov);
  EXPECT_EQ(pa.trace_abs, 3);
  ASSERT_TRUE(pa.stretch);
  EXPECT_NEAR(*pa.stretch, kGolden2, 1e-12 * kGolden2);

  const NTClass red = nt_classify(parse_word("w1"));
  EXPECT_EQ(red.type, NTType::Reducible);
  EXPECT_EQ(red.trace_abs, 2);
  EXPECT_FALSE(red.stretch);

  const NTClass fin = nt_classify(parse_word("w1 w2 w3"));
  EXPECT_EQ(fin.type, NTType::FiniteOrder);
  EXPECT_EQ(fin.trace_abs, 0);

  EXPECT_EQ(nt_classify(parse_word("w1 w3^-1")).type, NTType::FiniteOrder);
  EXPECT_EQ(nt_classify(parse_word("w1 w2")).type, NTType::FiniteOrder);  // trace 1
}

TEST(StretchFactor, Examples) {
  EXPECT_NEAR(*stretch_factor(parse_word("w1^-1 w2")), 2.6180339887, 1e-10);
  const auto sq = stretch_factor(parse_word("w1^-1 w2 w1^-1 w2"));
  ASSERT_TRUE(sq);
  EXPECT_NEAR(*sq, 6.8541019662, 1e-10);
  EXPECT_NEAR(*sq, kGolden2 * kGolden2, 1e-12 * *sq);
  EXPECT_FALSE(stretch_factor(parse_word("w1")));
}

TEST(TranslationSubgroup, Examples) {
  EXPECT_TRUE(in_translation_subgroup(parse_word("w1 w3^-1")));
  EXPECT_FALSE(is_identity(parse_word("w1 w3^-1")));
  EXPECT_TRUE(in_translation_subgroup(MappingWord{}));
  EXPECT_TRUE(is_identity(MappingWord{}));
  EXPECT_FALSE(in_translation_subgroup(parse_word("w2")));
}

TEST(TranslationSubgroup, HasFourElements) {
  // N is (Z/2)^2: enumerate words of length <= 6 landing in N and collect
  // their distinct affine lifts.
  std::vector<AffineLift> seen;
  std::mt19937 rng(31);
  for (int t = 0; t < 20000; ++t) {
    const MappingWord w = random_word_up_to(rng, 6);
    if (!in_translation_subgroup(w)) continue;
    const AffineLift a = affine_lift(w);
    if (std::find(seen.begin(), seen.end(), a) == seen.end()) seen.push_back(a);
  }
  EXPECT_EQ(seen.size(), 4u);
}

TEST(HomologyInvariants, PresentationRelationsHold) {
  for (const auto& [label, w] : presentation_relators()) {
    EXPECT_EQ(affine_lift(w), AffineLift()) << label;
    EXPECT_TRUE(is_identity(w)) << label;
  }
}

TEST(HomologyInvariants, DeterminantOne) {
  std::mt19937 rng(37);
  for (int t = 0; t < 300; ++t) {
    EXPECT_EQ(homology_matrix(random_word_up_to(rng, 20)).det(), 1);
  }
}

TEST(HomologyInvariants, HomomorphismIntoPSL2) {
  std::mt19937 rng(41);
  for (int t = 0; t < 300; ++t) {
    const MappingWord u = random_word_up_to(rng, 8);
    const MappingWord v = random_word_up_to(rng, 8);
    EXPECT_EQ(homology_matrix(u * v), canonical(homology_matrix(u) * homology_matrix(v)));
    EXPECT_EQ(affine_lift(u * v), affine_lift(u) * affine_lift(v));
    EXPECT_EQ(canonical(raw_lift_matrix(u)), homology_matrix(u));
  }
}

TEST(HomologyInvariants, StretchOfPowers) {
  std::mt19937 rng(43);
  int tested = 0;
  while (tested < 100) {
    const MappingWord w = random_word_up_to(rng, 8);
    const auto base = stretch_factor(w);
    if (!base) continue;
    ++tested;
    for (int n = 1; n <= 5; ++n) {
      const auto p = stretch_factor(power(w, n));
      ASSERT_TRUE(p);
      EXPECT_NEAR(*p, std::pow(*base, n), 1e-9 * *p);
    }
  }
}

TEST(HomologyInvariants, ClassFunction) {
  std::mt19937 rng(47);
  for (int t = 0; t < 300; ++t) {
    const MappingWord w = random_word_up_to(rng, 8);
    const MappingWord u = random_word_up_to(rng, 6);
    const NTClass a = nt_classify(w);
    const NTClass b = nt_classify(u * w * invert(u));
    EXPECT_EQ(a.type, b.type);
    EXPECT_EQ(a.trace_abs, b.trace_abs);
    EXPECT_EQ(a.stretch.has_value(), b.stretch.has_value());
    if (a.stretch) EXPECT_NEAR(*a.stretch, *b.stretch, 1e-12 * *a.stretch);
  }
}

TEST(HomologyInvariants, ClassInvariantsHold) {
  std::mt19937 rng(53);
  for (int t = 0; t < 500; ++t) {
    const NTClass c = nt_classify(random_word_up_to(rng, 10));
    EXPECT_EQ(c.stretch.has_value(), c.type == NTType::PseudoAnosov);
    EXPECT_EQ(c.type == NTType::PseudoAnosov, c.trace_abs > 2);
    if (c.type == NTType::Reducible) EXPECT_EQ(c.trace_abs, 2);
    if (c.stretch) EXPECT_GT(*c.stretch, 1.0);
  }
}
