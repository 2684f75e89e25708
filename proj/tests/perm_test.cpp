#include "lgl/perm.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace lgl;

namespace {

CycleStructure cs(std::initializer_list<std::pair<int, int>> counts) {
  CycleStructure out;
  for (auto [l, k] : counts) out.counts[l] = k;
  return out;
}

std::vector<Perm> all_perms(int m) {
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

TEST(Perm, RejectsNonBijections) {
  EXPECT_THROW(Perm(std::vector<int>{1, 1}), std::invalid_argument);
  EXPECT_THROW(Perm(std::vector<int>{0, 2}), std::invalid_argument);
  EXPECT_THROW(Perm(std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW(Perm::from_cycles(3, {{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST(Perm, ApplyAndInverse) {
  const Perm p = Perm::from_cycles(4, {{1, 2, 3, 4}});
  EXPECT_EQ(p.apply(1), 2);
  EXPECT_EQ(p.apply(4), 1);
  for (int s = 1; s <= 4; ++s) EXPECT_EQ(p.apply(p.apply_inverse(s)), s);
  EXPECT_TRUE(p.compose(p.inverse()).is_identity());
}

TEST(CycleStructure, WorkedExamples) {
  EXPECT_EQ(cycle_structure(Perm::from_cycles(7, {{1, 2, 3}, {5, 6, 7}})), cs({{3, 2}, {1, 1}}));
  EXPECT_EQ(cycle_structure(Perm::identity(4)), cs({{1, 4}}));
  EXPECT_EQ(cycle_structure(Perm::from_cycles(6, {{1, 2}, {3, 4}, {5, 6}})), cs({{2, 3}}));
  EXPECT_EQ(cycle_structure(Perm::from_cycles(7, {{1, 2, 3}, {5, 6, 7}})).to_string(), "3^2 1");
}

TEST(CycleLength, WorkedExamples) {
  EXPECT_EQ(cycle_length_at(Perm::from_cycles(3, {{1, 2}}), 1), 2);
  EXPECT_EQ(cycle_length_at(Perm::identity(5), 3), 1);
  // Independent route: walk the cycle containing 3 by repeated application.
  const Perm p = Perm::from_cycles(4, {{1, 2, 3, 4}});
  int len = 1;
  for (int v = p.apply(3); v != 3; v = p.apply(v)) ++len;
  EXPECT_EQ(len, 4);
  EXPECT_EQ(cycle_length_at(p, 3), 4);
  EXPECT_THROW(cycle_length_at(p, 5), std::out_of_range);
}

TEST(CycleLength, PowerReturnsToStart) {
  // Exhaustive for every permutation of up to 8 elements.
  for (int m = 1; m <= 8; ++m) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 1);
    do {
      const Perm p{std::vector<int>(img)};
      for (int s = 1; s <= m; ++s) {
        const int len = cycle_length_at(p, s);
        int v = s;
        for (int i = 0; i < len; ++i) v = p.apply(v);
        EXPECT_EQ(v, s);
        v = s;
        for (int i = 1; i < len; ++i) {
          v = p.apply(v);
          EXPECT_NE(v, s);
        }
      }
    } while (std::next_permutation(img.begin(), img.end()));
  }
}

TEST(CycleStructure, InvariantUnderConjugation) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 6);
    const Perm p = lgl::testing::random_perm(m, rng);
    const Perm q = lgl::testing::random_perm(m, rng);
    EXPECT_EQ(cycle_structure(conjugate(p, q)), cycle_structure(p));
  }
}

TEST(ConjugationWitness, WorkedExamples) {
  const Perm p1 = Perm::from_cycles(3, {{1, 2}});
  const Perm p2 = Perm::from_cycles(3, {{1, 3}});
  const auto q = conjugation_witness(p1, p2);
  ASSERT_TRUE(q);
  EXPECT_EQ(conjugate(p1, *q), p2);

  const auto id_witness = conjugation_witness(Perm::identity(4), Perm::identity(4));
  ASSERT_TRUE(id_witness);
  EXPECT_TRUE(id_witness->is_identity());

  EXPECT_FALSE(conjugation_witness(Perm::from_cycles(3, {{1, 2}}), Perm::from_cycles(3, {{1, 2, 3}})));
  EXPECT_THROW(conjugation_witness(Perm::identity(3), Perm::identity(4)), std::invalid_argument);
}

TEST(ConjugationWitness, PresentIffSameStructureExhaustively) {
  for (int m = 1; m <= 5; ++m) {
    const auto perms = all_perms(m);
    for (const Perm& p1 : perms)
      for (const Perm& p2 : perms) {
        const auto q = conjugation_witness(p1, p2);
        if (cycle_structure(p1) == cycle_structure(p2)) {
          ASSERT_TRUE(q);
          EXPECT_EQ(conjugate(p1, *q), p2);
        } else {
          EXPECT_FALSE(q);
        }
      }
  }
}

TEST(CycleNotation, ParseAndFormat) {
  const Perm p = parse_perm_cycles(7, "(1 2)(3 4)");
  EXPECT_EQ(p.apply(1), 2);
  EXPECT_EQ(p.apply(3), 4);
  EXPECT_EQ(p.apply(5), 5);
  EXPECT_EQ(format_perm_cycles(p), "(1 2)(3 4)");
  EXPECT_TRUE(parse_perm_cycles(3, "()").is_identity());
  EXPECT_TRUE(parse_perm_cycles(3, "").is_identity());
  EXPECT_EQ(parse_perm_cycles(4, "(1,2,3,4)"), Perm::from_cycles(4, {{1, 2, 3, 4}}));
  EXPECT_EQ(format_perm_cycles(Perm::identity(5)), "()");
  EXPECT_THROW(parse_perm_cycles(3, "(1 2"), std::invalid_argument);
  EXPECT_THROW(parse_perm_cycles(2, "(1 3)"), std::invalid_argument);
}

TEST(Perm, PowerMatchesRepeatedApplication) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 6);
    const Perm p = lgl::testing::random_perm(m, rng);
    const int k = static_cast<int>(rng() % 10);
    const Perm pk = p.power(k);
    for (int s = 1; s <= m; ++s) {
      int v = s;
      for (int i = 0; i < k; ++i) v = p.apply(v);
      EXPECT_EQ(pk.apply(s), v);
    }
    EXPECT_TRUE(p.power(-k).compose(pk).is_identity());
  }
}
