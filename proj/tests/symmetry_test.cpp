#include "lgl/isotopism.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_util.hpp"

using namespace lgl;
using lgl::testing::iso_rect;
using lgl::testing::make_board;

namespace {

std::set<Cell> cell_set(const std::vector<Cell>& cells) { return {cells.begin(), cells.end()}; }

std::vector<Perm> all_perms(int m) {
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// The two-case characterization of extendability, used as a second route.
bool extendable_characterization(const Isotopism& t) {
  if (!is_feasible(t)) return false;
  if (t.dim() == 2) {
    std::set<int> lengths;
    for (int j = 0; j < 2; ++j)
      for (const auto& cyc : t.row_perm(j).cycles(true)) lengths.insert(static_cast<int>(cyc.size()));
    return lengths.size() == 1;
  }
  // d > 2: the row part alone must be feasible.
  std::vector<std::vector<int>> lens;
  for (int j = 0; j < t.dim(); ++j)
    lens.push_back(cycle_structure(t.row_perm(j)).distinct_lengths());
  std::vector<std::size_t> pick(lens.size(), 0);
  while (true) {
    std::vector<int> tuple;
    for (std::size_t i = 0; i < lens.size(); ++i) tuple.push_back(lens[i][pick[i]]);
    if (!lcm_compatible(tuple)) return false;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == lens[i].size()) pick[i++] = 0;
    if (i == pick.size()) return true;
  }
}

std::uint64_t census(const Isotopism& t) {
  const Shape& sh = t.shape();
  const int n_cells = static_cast<int>(sh.cell_count());
  Board b(sh);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == n_cells) {
      if (is_member(b, t)) ++count;
      return;
    }
    self(self, idx + 1);
    for (int v = 1; v <= sh.symbols; ++v) {
      b.set_index(idx, v);
      if (validate_latin(b)) self(self, idx + 1);
      b.set_index(idx, 0);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

TEST(LcmCompatible, WorkedExamples) {
  EXPECT_TRUE(lcm_compatible({1, 2, 4, 4}));
  EXPECT_FALSE(lcm_compatible({3, 2}));
  EXPECT_TRUE(lcm_compatible({1, 1, 1}));
  EXPECT_TRUE(lcm_compatible({2, 3, 6, 3}));
  EXPECT_TRUE(lcm_compatible({2, 3, 6, 2}));
  EXPECT_TRUE(lcm_compatible({2, 3, 6, 1}));
  EXPECT_FALSE(lcm_compatible({2, 1, 1}));
  EXPECT_THROW(lcm_compatible({4}), std::invalid_argument);
  EXPECT_THROW(lcm_compatible({2, 0}), std::invalid_argument);
}

TEST(CellOrbit, WorkedExamples) {
  const auto t = iso_rect();
  const std::set<Cell> orbit1 = {{1, 1}, {2, 2}, {1, 3}, {2, 4}};
  const std::set<Cell> orbit3 = {{3, 1}, {3, 2}, {3, 3}, {3, 4}};
  EXPECT_EQ(cell_set(cell_orbit(t, {1, 1})), orbit1);
  EXPECT_EQ(cell_set(cell_orbit(t, {3, 1})), orbit3);
  const auto id = trivial_isotopism({3, 4}, 4);
  const std::vector<Cell> singleton = {{2, 3}};
  EXPECT_EQ(cell_orbit(id, {2, 3}), singleton);
  EXPECT_THROW(cell_orbit(t, {4, 1}), std::out_of_range);
}

TEST(OrbitPartition, WorkedExamples) {
  const auto part = orbit_partition(iso_rect());
  ASSERT_EQ(part.size(), 3);
  for (const auto& orbit : part.orbits) EXPECT_EQ(orbit.size(), 4u);

  const auto id_part = orbit_partition(trivial_isotopism({2, 2}, 2));
  EXPECT_EQ(id_part.size(), 4);

  const Isotopism circulant(Shape({3, 6}, 6),
                            {Perm::from_cycles(3, {{1, 2, 3}}),
                             Perm::from_cycles(6, {{1, 2, 3}, {4, 5, 6}})},
                            Perm::identity(6));
  const auto circ = orbit_partition(circulant);
  ASSERT_EQ(circ.size(), 6);
  for (const auto& orbit : circ.orbits) EXPECT_EQ(orbit.size(), 3u);
}

TEST(OrbitPartition, CoversDisjointlyAndConsistently) {
  std::mt19937 rng(41);
  for (const auto& dims :
       std::vector<std::vector<int>>{{4, 4, 4}, {3, 4}, {2, 2, 2}, {4}, {2, 3, 4}}) {
    for (int trial = 0; trial < 8; ++trial) {
      const Isotopism t = lgl::testing::random_isotopism(dims, 3, rng);
      const auto part = orbit_partition(t);
      std::size_t total = 0;
      for (const auto& orbit : part.orbits) total += orbit.size();
      EXPECT_EQ(static_cast<long long>(total), t.shape().cell_count());
      // Orbit of any member equals its containing orbit and holds exactly
      // lcm-many pairwise distinct cells.
      for (int idx = 0; idx < static_cast<int>(t.shape().cell_count()); ++idx) {
        const Cell cell = t.shape().cell_at(idx);
        const auto orbit = cell_orbit(t, cell);
        EXPECT_EQ(static_cast<long long>(orbit.size()), t.cell_orbit_lcm(cell));
        std::set<int> got;
        for (const Cell& c : orbit) got.insert(t.shape().index_of(c));
        EXPECT_EQ(got.size(), orbit.size());
        const auto& expect = part.orbits[part.orbit_of[idx]];
        EXPECT_EQ(got, std::set<int>(expect.begin(), expect.end()));
      }
    }
  }
}

TEST(EntryClosure, WorkedExamples) {
  // Direct route: iterate the action on the entry by hand.
  const auto t = iso_rect();
  std::set<Entry> expected;
  {
    Cell c{1, 1};
    int s = 1;
    for (int m = 0; m < 4; ++m) {
      expected.insert({c, s});
      c = t.image_cell(c, 1);
      s = t.image_symbol(s, 1);
    }
  }
  EXPECT_EQ(expected, std::set<Entry>({{{1, 1}, 1}, {{2, 2}, 2}, {{1, 3}, 3}, {{2, 4}, 4}}));

  const auto closure = entry_closure(t, {{1, 1}, 1});
  ASSERT_TRUE(closure);
  EXPECT_EQ(std::set<Entry>(closure->begin(), closure->end()), expected);

  const Isotopism bad(Shape({2, 2}, 2), {Perm::from_cycles(2, {{1, 2}}), Perm::identity(2)},
                      Perm::identity(2));
  EXPECT_FALSE(entry_closure(bad, {{1, 1}, 1}));

  const auto id = trivial_isotopism({2, 2}, 2);
  const auto single = entry_closure(id, {{2, 1}, 2});
  ASSERT_TRUE(single);
  EXPECT_EQ(*single, std::vector<Entry>({{{2, 1}, 2}}));
}

TEST(EntryClosure, MatchesLcmCompatibilityExhaustively) {
  // Every isotopism on 3x3 over 3 symbols and on 4x4 over 4 symbols, every
  // entry.
  for (const int n : {3, 4}) {
    const auto perms = all_perms(n);
    const Shape sh({n, n}, n);
    for (const Perm& p1 : perms)
      for (const Perm& p2 : perms)
        for (const Perm& ps : perms) {
          const Isotopism t(sh, {p1, p2}, ps);
          for (int idx = 0; idx < n * n; ++idx)
            for (int s = 1; s <= n; ++s) {
              const Cell c = sh.cell_at(idx);
              const std::vector<int> lens{t.coord_cycle_length(0, c[0]),
                                          t.coord_cycle_length(1, c[1]), t.symbol_cycle_length(s)};
              ASSERT_EQ(entry_closure(t, {c, s}).has_value(), lcm_compatible(lens));
            }
        }
  }
}

TEST(EntryClosure, ClosureIsAlwaysAMember) {
  std::mt19937 rng(47);
  int produced = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Isotopism t = lgl::testing::random_isotopism({4, 4}, 4, rng);
    const Cell c = t.shape().cell_at(static_cast<int>(rng() % 16));
    const int s = 1 + static_cast<int>(rng() % 4);
    const auto closure = entry_closure(t, {c, s});
    if (!closure) continue;
    ++produced;
    Board b(t.shape());
    for (const Entry& e : *closure) b.set(e.cell, e.symbol);
    EXPECT_TRUE(validate_latin(b));
    EXPECT_TRUE(is_member(b, t));
  }
  EXPECT_GT(produced, 0);
}

TEST(Feasibility, WorkedExamples) {
  const Isotopism big(Shape({6, 6, 6}, 6),
                      {Perm::from_cycles(6, {{1, 2}, {3, 4}, {5, 6}}),
                       Perm::from_cycles(6, {{1, 2, 3}, {4, 5, 6}}),
                       Perm::from_cycles(6, {{1, 2, 3, 4, 5, 6}})},
                      Perm::from_cycles(6, {{1, 2, 3}, {4, 5}}));
  EXPECT_TRUE(is_feasible(big));

  const Isotopism bad(Shape({2, 2}, 2), {Perm::from_cycles(2, {{1, 2}}), Perm::identity(2)},
                      Perm::identity(2));
  EXPECT_FALSE(is_feasible(bad));

  EXPECT_TRUE(is_feasible(trivial_isotopism({2, 2}, 2)));
}

TEST(NaturalExtension, WorkedExamples) {
  const Perm swap2 = Perm::from_cycles(2, {{1, 2}});
  const Isotopism t(Shape({2, 2}, 2), {swap2, swap2}, swap2);
  const Isotopism ext = natural_extension(t, 3);
  EXPECT_EQ(ext.sym_size(), 3);
  EXPECT_EQ(ext.sym_perm().apply(1), 2);
  EXPECT_EQ(ext.sym_perm().apply(2), 1);
  EXPECT_EQ(ext.sym_perm().apply(3), 3);
  EXPECT_EQ(ext.shape().symbols, 2);

  EXPECT_EQ(natural_extension(t, 2), t);
  const auto id_ext = natural_extension(trivial_isotopism({2, 2}, 2), 4);
  EXPECT_TRUE(id_ext.sym_perm().is_identity());
  EXPECT_EQ(id_ext.sym_size(), 4);
  EXPECT_THROW(natural_extension(id_ext, 3), std::invalid_argument);
}

TEST(Extendability, WorkedExamples) {
  const Isotopism yes(Shape({2, 4}, 3),
                      {Perm::from_cycles(2, {{1, 2}}), Perm::from_cycles(4, {{1, 2}, {3, 4}})},
                      Perm::from_cycles(3, {{1, 2}}));
  EXPECT_TRUE(is_extendable(yes));

  const Isotopism no(Shape({3, 4}, 6),
                     {Perm::from_cycles(3, {{1, 2, 3}}), Perm::from_cycles(4, {{1, 2}, {3, 4}})},
                     Perm::from_cycles(6, {{1, 2, 3, 4, 5, 6}}));
  EXPECT_TRUE(is_feasible(no));
  EXPECT_FALSE(is_extendable(no));

  const Isotopism four(Shape({3, 4, 6}, 5),
                       {Perm::from_cycles(3, {{1, 2, 3}}), Perm::from_cycles(4, {{1, 2}, {3, 4}}),
                        Perm::from_cycles(6, {{1, 2, 3, 4, 5, 6}})},
                       Perm::from_cycles(5, {{1, 2, 3}, {4, 5}}));
  EXPECT_TRUE(is_extendable(four));
}

TEST(Extendability, MatchesCharacterizationOnRandomInputs) {
  std::mt19937 rng(53);
  int extendable_seen = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 2);
    std::vector<int> dims;
    for (int j = 0; j < d; ++j) dims.push_back(2 + static_cast<int>(rng() % 3));
    const Isotopism t = lgl::testing::random_isotopism(dims, 2 + static_cast<int>(rng() % 3), rng);
    const bool via_extension = is_extendable(t);
    EXPECT_EQ(via_extension, extendable_characterization(t));
    if (via_extension) {
      ++extendable_seen;
      EXPECT_TRUE(is_feasible(t));
    }
  }
  EXPECT_GT(extendable_seen, 0);
}

TEST(Extendability, FeasiblePrincipalIsExtendable) {
  std::mt19937 rng(59);
  int feasible_seen = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Perm> rows{lgl::testing::random_perm(6, rng), lgl::testing::random_perm(6, rng)};
    const Isotopism t(Shape({6, 6}, 6), rows, Perm::identity(6));
    if (!is_feasible(t)) continue;
    ++feasible_seen;
    EXPECT_TRUE(is_extendable(t));
  }
  EXPECT_GT(feasible_seen, 0);
}

TEST(Extendability, FeasibleExtensionImpliesFeasibleBase) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 1000; ++trial) {
    const Isotopism t = lgl::testing::random_isotopism({3, 4}, 3, rng);
    if (is_feasible(natural_extension(t, 5))) EXPECT_TRUE(is_feasible(t));
  }
}

TEST(Membership, NonEmptyIffSomeEntryClosureIsMember) {
  // Every isotopism on a 3x3 board over 3 symbols.
  const auto perms3 = all_perms(3);
  const Shape sh({3, 3}, 3);
  for (const Perm& p1 : perms3)
    for (const Perm& p2 : perms3)
      for (const Perm& ps : perms3) {
        const Isotopism t(sh, {p1, p2}, ps);
        bool closure_member = false;
        for (int idx = 0; idx < 9 && !closure_member; ++idx)
          for (int s = 1; s <= 3 && !closure_member; ++s) {
            const auto closure = entry_closure(t, {sh.cell_at(idx), s});
            if (!closure) continue;
            Board b(sh);
            bool latin = true;
            for (const Entry& e : *closure) {
              if (b.at(e.cell) != 0 && b.at(e.cell) != e.symbol) latin = false;
              b.set(e.cell, e.symbol);
            }
            if (latin && validate_latin(b) && is_member(b, t)) closure_member = true;
          }
        EXPECT_EQ(census(t) > 0, closure_member);
      }
}

TEST(IsoCycleStructure, ComponentsAndConjugates) {
  const auto z = cycle_structure(iso_rect());
  ASSERT_EQ(z.components.size(), 3u);
  EXPECT_EQ(z.components[0].to_string(), "2 1");
  EXPECT_EQ(z.components[1].to_string(), "4");
  EXPECT_EQ(z.components[2].to_string(), "4");

  std::mt19937 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    const Isotopism t = lgl::testing::random_isotopism({3, 4}, 4, rng);
    const Isotopism q = lgl::testing::random_isotopism({3, 4}, 4, rng);
    const Isotopism conj = conjugate(t, q);
    EXPECT_EQ(cycle_structure(conj), cycle_structure(t));
    const auto witness = conjugation_witness(t, conj);
    ASSERT_TRUE(witness);
    EXPECT_EQ(conjugate(t, *witness), conj);
  }
}
