#include "lgl/game.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_util.hpp"

using namespace lgl;
using lgl::testing::make_board;

namespace {

// Theta_2' = ((12),(12),(12)) over a 2x2 board, played with 3 colours.
GameConfig order2_config(int colours, Variant variant = Variant::Standard) {
  const Perm swap2 = Perm::from_cycles(2, {{1, 2}});
  return {Isotopism(Shape({2, 2}, 2), {swap2, swap2}, swap2), colours, 1, 1, Player::Alice,
          variant};
}

// ((123),(123)(456),Id) over the 3x6 board from the first-try example.
Isotopism circulant_iso() {
  return Isotopism(Shape({3, 6}, 6),
                   {Perm::from_cycles(3, {{1, 2, 3}}), Perm::from_cycles(6, {{1, 2, 3}, {4, 5, 6}})},
                   Perm::identity(6));
}

// Uniform-cycle two-dimensional extendable isotopisms for random playouts.
Isotopism random_extendable(std::mt19937& rng) {
  static const std::vector<std::vector<int>> pool = {{2, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 6}, {2, 6}};
  const auto dims = pool[rng() % pool.size()];
  const int n = std::max(dims[0], dims[1]);
  const int g = std::gcd(dims[0], dims[1]);
  std::vector<int> ls;
  for (int l = 1; l <= g; ++l)
    if (g % l == 0) ls.push_back(l);
  for (int tries = 0; tries < 32; ++tries) {
    const int l = ls[rng() % ls.size()];
    auto uniform = [&](int m) {
      std::vector<std::vector<int>> cycles;
      std::vector<int> vals(m);
      for (int i = 0; i < m; ++i) vals[i] = i + 1;
      std::shuffle(vals.begin(), vals.end(), rng);
      for (int at = 0; at < m; at += l)
        cycles.emplace_back(vals.begin() + at, vals.begin() + at + l);
      return Perm::from_cycles(m, cycles);
    };
    std::vector<int> symbols(n);
    for (int i = 0; i < n; ++i) symbols[i] = i + 1;
    std::shuffle(symbols.begin(), symbols.end(), rng);
    std::vector<std::vector<int>> sym_cycles;
    std::size_t at = 0;
    while (at < symbols.size()) {
      std::vector<int> q;
      for (int d = 1; d <= l; ++d)
        if (l % d == 0 && at + d <= symbols.size()) q.push_back(d);
      const int len = q[rng() % q.size()];
      sym_cycles.emplace_back(symbols.begin() + at, symbols.begin() + at + len);
      at += len;
    }
    Isotopism t(Shape(dims, n), {uniform(dims[0]), uniform(dims[1])},
                Perm::from_cycles(n, sym_cycles));
    if (is_extendable(t)) return t;
  }
  return trivial_isotopism(dims, n);
}

}  // namespace

TEST(GameConfig, RequiresExtendableIsotopism) {
  const Isotopism bad(Shape({2, 2}, 2), {Perm::from_cycles(2, {{1, 2}}), Perm::identity(2)},
                      Perm::identity(2));
  EXPECT_THROW(HammingGame({bad, 2, 1, 1, Player::Alice, Variant::Standard}),
               std::invalid_argument);
  EXPECT_THROW(HammingGame({trivial_isotopism({2, 2}, 2), 1, 1, 1, Player::Alice,
                            Variant::Standard}),
               std::invalid_argument);
}

TEST(LegalColours, WorkedExamples) {
  const HammingGame game(order2_config(3));
  auto s = game.initial_state();
  EXPECT_EQ(game.legal_colours(s, {1, 1}), (std::vector<int>{1, 2, 3}));
  s = game.apply_move(s, {game.shape().index_of({1, 1}), 1});
  // The orbit mate is forced to the symbol image.
  EXPECT_EQ(game.legal_colours(s, {2, 2}), (std::vector<int>{2}));
  // The other orbit can only take the extension colour: symbol 2 breaks the
  // orbit-image exclusion and symbol 1 the line condition.
  EXPECT_EQ(game.legal_colours(s, {1, 2}), (std::vector<int>{3}));
  EXPECT_THROW(game.legal_colours(s, {1, 1}), std::invalid_argument);
}

TEST(LegalColours, FirstTryKeepsTheDestroyingMove) {
  const Isotopism theta = circulant_iso();
  const HammingGame standard({theta, 6, 1, 1, Player::Alice, Variant::Standard});
  const HammingGame first_try({theta, 6, 1, 1, Player::Alice, Variant::FirstTry});
  const Move opening{standard.shape().index_of({1, 1}), 1};
  const auto std_state = standard.apply_move(standard.initial_state(), opening);
  const auto ft_state = first_try.apply_move(first_try.initial_state(), opening);
  const int target = standard.shape().index_of({2, 4});
  const auto std_colours = standard.legal_colours(std_state, {2, 4});
  const auto ft_colours = first_try.legal_colours(ft_state, {2, 4});
  EXPECT_EQ(std::count(std_colours.begin(), std_colours.end(), 1), 0);
  EXPECT_EQ(std::count(ft_colours.begin(), ft_colours.end(), 1), 1);
  (void)target;
}

TEST(LegalMoves, DeterministicOrderAndTerminals) {
  const HammingGame game({trivial_isotopism({1, 2}, 2), 2, 1, 1, Player::Alice,
                          Variant::Standard});
  const auto moves = game.legal_moves(game.initial_state());
  ASSERT_EQ(moves.size(), 4u);
  EXPECT_EQ(moves[0], (Move{0, 1}));
  EXPECT_EQ(moves[1], (Move{0, 2}));
  EXPECT_EQ(moves[2], (Move{1, 1}));
  EXPECT_EQ(moves[3], (Move{1, 2}));

  auto s = game.initial_state();
  s = game.apply_move(s, {0, 1});
  s = game.apply_move(s, {1, 2});
  EXPECT_TRUE(game.legal_moves(s).empty());
}

TEST(LegalMoves, DeadCellHasNoMoves) {
  const Isotopism theta = circulant_iso();
  const HammingGame first_try({theta, 6, 1, 1, Player::Alice, Variant::FirstTry});
  auto s = first_try.initial_state();
  s = first_try.apply_move(s, {first_try.shape().index_of({1, 1}), 1});
  s = first_try.apply_move(s, {first_try.shape().index_of({2, 4}), 1});
  const int dead = first_try.shape().index_of({2, 2});
  EXPECT_EQ(first_try.legal_colour_mask(s, dead), 0u);
  for (const Move& m : first_try.legal_moves(s)) EXPECT_NE(m.cell, dead);
  EXPECT_EQ(first_try.terminal_status(s), Outcome::BobWins);
}

TEST(ApplyMove, QuotaBookkeeping) {
  const HammingGame game({trivial_isotopism({2, 3}, 3), 3, 2, 1, Player::Alice,
                          Variant::Standard});
  auto s = game.initial_state();
  EXPECT_EQ(s.to_move, Player::Alice);
  EXPECT_EQ(s.remaining, 2);
  s = game.apply_move(s, game.legal_moves(s).front());
  EXPECT_EQ(s.to_move, Player::Alice);
  EXPECT_EQ(s.remaining, 1);
  s = game.apply_move(s, game.legal_moves(s).front());
  EXPECT_EQ(s.to_move, Player::Bob);
  EXPECT_EQ(s.remaining, 1);
  s = game.apply_move(s, game.legal_moves(s).front());
  EXPECT_EQ(s.to_move, Player::Alice);
  EXPECT_EQ(s.remaining, 2);

  // Alternation in the (1,1) game.
  const HammingGame alt({trivial_isotopism({2, 3}, 3), 3, 1, 1, Player::Bob, Variant::Standard});
  auto s2 = alt.initial_state();
  EXPECT_EQ(s2.to_move, Player::Bob);
  s2 = alt.apply_move(s2, alt.legal_moves(s2).front());
  EXPECT_EQ(s2.to_move, Player::Alice);

  EXPECT_THROW(game.apply_move(s, {0, 0}), std::invalid_argument);
}

TEST(ApplyMove, QuotaTruncatedByEmptyCells) {
  const HammingGame game({trivial_isotopism({1, 3}, 3), 3, 2, 1, Player::Bob, Variant::Standard});
  auto s = game.initial_state();
  EXPECT_EQ(s.remaining, 1);  // Bob starts
  s = game.apply_move(s, game.legal_moves(s).front());
  EXPECT_EQ(s.to_move, Player::Alice);
  EXPECT_EQ(s.remaining, 2);
  s = game.apply_move(s, game.legal_moves(s).front());
  EXPECT_EQ(s.remaining, 1);
  s = game.apply_move(s, game.legal_moves(s).front());
  // Board full: game over regardless of bookkeeping.
  EXPECT_EQ(game.terminal_status(s), Outcome::AliceWins);
}

TEST(TerminalStatus, WorkedExamples) {
  const HammingGame game({trivial_isotopism({1, 2}, 2), 2, 1, 1, Player::Alice,
                          Variant::Standard});
  auto s = game.initial_state();
  EXPECT_FALSE(game.terminal_status(s));
  s = game.apply_move(s, {0, 1});
  s = game.apply_move(s, {1, 2});
  EXPECT_EQ(game.terminal_status(s), Outcome::AliceWins);
}

TEST(ForcedCompletion, WorkedExamples) {
  const HammingGame game(order2_config(3));
  auto s = game.initial_state();
  EXPECT_FALSE(game.forced_completion(s));  // symbol-free orbits remain
  s = game.apply_move(s, {game.shape().index_of({1, 1}), 1});
  EXPECT_FALSE(game.forced_completion(s));
  s = game.apply_move(s, {game.shape().index_of({1, 2}), 3});
  const auto completed = game.forced_completion(s);
  ASSERT_TRUE(completed);
  EXPECT_EQ(*completed, make_board({2, 2}, 2, {{1, 3}, {3, 2}}, 3));

  // A full board completes to itself.
  GameState full{*completed, Player::Alice, 0};
  ASSERT_TRUE(game.forced_completion(full));
  EXPECT_EQ(*game.forced_completion(full), *completed);

  const HammingGame ft(order2_config(3, Variant::FirstTry));
  EXPECT_THROW(ft.forced_completion(ft.initial_state()), std::invalid_argument);
}

TEST(Playouts, ColourabilityWhileSymbolFreeOrbitRemains) {
  std::mt19937 rng(101);
  for (int playout = 0; playout < 400; ++playout) {
    const Isotopism theta = random_extendable(rng);
    const int n = theta.shape().symbols;
    const int colours = std::min(8, n + static_cast<int>(rng() % 3));
    const HammingGame game({theta, colours, 1 + static_cast<int>(rng() % 2),
                            1 + static_cast<int>(rng() % 2),
                            rng() % 2 ? Player::Alice : Player::Bob, Variant::Standard});
    const HammingGame widened({theta, colours + 1, 1, 1, Player::Alice, Variant::Standard});
    GameState s = game.initial_state();
    while (!game.terminal_status(s)) {
      const auto moves = game.legal_moves(s);
      ASSERT_FALSE(moves.empty());
      s = game.apply_move(s, moves[rng() % moves.size()]);
      if (!game.symbol_free_orbit_exists(s.board)) break;
      Board wide(game.shape(), colours + 1);
      for (int idx = 0; idx < game.cell_count(); ++idx)
        if (s.board.at_index(idx) != 0) wide.set_index(idx, s.board.at_index(idx));
      const GameState ws{wide, s.to_move, s.remaining};
      std::uint32_t used = 0, accepted = 0;
      for (int idx = 0; idx < game.cell_count(); ++idx) {
        const int v = s.board.at_index(idx);
        if (v != 0) {
          used |= 1u << (v - 1);
          continue;
        }
        EXPECT_NE(widened.legal_colour_mask(ws, idx), 0u);
        accepted |= game.legal_colour_mask(s, idx);
      }
      const std::uint32_t unused = ((1u << colours) - 1) & ~used;
      EXPECT_EQ(unused & ~accepted, 0u);
    }
  }
}

TEST(Playouts, OrbitEntriesDetermineEachOther) {
  std::mt19937 rng(103);
  for (int playout = 0; playout < 300; ++playout) {
    const Isotopism theta = random_extendable(rng);
    const int colours = std::min(8, theta.shape().symbols + 1);
    const HammingGame game({theta, colours, 1, 1, Player::Alice, Variant::Standard});
    GameState s = game.initial_state();
    while (!game.terminal_status(s)) {
      const auto moves = game.legal_moves(s);
      s = game.apply_move(s, moves[rng() % moves.size()]);
      for (int idx = 0; idx < game.cell_count(); ++idx) {
        const int v = s.board.at_index(idx);
        if (v == 0) continue;
        const int L = game.orbit_length(idx);
        for (int m = 1; m < L; ++m) {
          const int img = game.orbit_image(idx, m);
          const int there = s.board.at_index(img);
          if (there != 0) EXPECT_EQ(there, game.symbol_power(v, m));
        }
      }
    }
  }
}

TEST(Playouts, DeadCellsNeverRevive) {
  std::mt19937 rng(107);
  for (int playout = 0; playout < 300; ++playout) {
    const Isotopism theta = random_extendable(rng);
    const int n = theta.shape().symbols;
    const HammingGame game({theta, n, 1, 1, Player::Alice, Variant::FirstTry});
    GameState s = game.initial_state();
    std::set<int> dead;
    while (true) {
      const auto moves = game.legal_moves(s);
      if (moves.empty()) break;
      s = game.apply_move(s, moves[rng() % moves.size()]);
      std::set<int> now_dead;
      for (int idx = 0; idx < game.cell_count(); ++idx)
        if (s.board.at_index(idx) == 0 && game.legal_colour_mask(s, idx) == 0) now_dead.insert(idx);
      for (int idx : dead) EXPECT_TRUE(now_dead.count(idx));
      dead = std::move(now_dead);
    }
  }
}

TEST(Playouts, LastOrbitMarkedMeansForcedCompletion) {
  std::mt19937 rng(109);
  int completions = 0;
  for (int playout = 0; playout < 300; ++playout) {
    const Isotopism theta = random_extendable(rng);
    const int colours = std::min(8, theta.shape().symbols + 1);
    const HammingGame game({theta, colours, 1, 2, Player::Bob, Variant::Standard});
    GameState s = game.initial_state();
    while (!game.terminal_status(s)) {
      const auto moves = game.legal_moves(s);
      s = game.apply_move(s, moves[rng() % moves.size()]);
      if (!game.symbol_free_orbit_exists(s.board)) {
        const auto completed = game.forced_completion(s);  // throws on engine bugs
        ASSERT_TRUE(completed);
        EXPECT_TRUE(validate_latin(*completed));
        EXPECT_EQ(completed->entry_count(), game.cell_count());
        ++completions;
        break;
      }
    }
  }
  EXPECT_GT(completions, 0);
}
