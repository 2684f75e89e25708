#pragma once

#include <memory>
#include <optional>
#include <unordered_map>

#include "lgl/solver.hpp"

namespace lgl {

/// A deterministic move-selection rule. The last opponent move is passed in
/// because some scripted strategies reply to it directly.
template <class Game>
class Strategy {
public:
  using StateT = typename Game::StateT;
  using MoveT = typename Game::MoveT;

  virtual ~Strategy() = default;
  virtual MoveT choose(const StateT& s, const std::optional<MoveT>& last_opponent) = 0;
};

/// First legal move in the engine's deterministic order.
template <class Game>
class LexFirstStrategy : public Strategy<Game> {
public:
  explicit LexFirstStrategy(const Game& game) : game_(game) {}

  typename Game::MoveT choose(const typename Game::StateT& s,
                              const std::optional<typename Game::MoveT>&) override {
    auto moves = game_.legal_moves(s);
    if (moves.empty()) throw std::logic_error("LexFirstStrategy: no legal move");
    return moves.front();
  }

private:
  const Game& game_;
};

/// Solver-backed play: the first move that preserves the mover's best
/// achievable outcome. The transposition table is shared across queries.
template <class Game>
class OptimalStrategy : public Strategy<Game> {
public:
  explicit OptimalStrategy(const Game& game, SolveOptions opt = {})
      : game_(game), solver_(game, opt) {}

  typename Game::MoveT choose(const typename Game::StateT& s,
                              const std::optional<typename Game::MoveT>&) override {
    auto moves = game_.legal_moves(s);
    if (moves.empty()) throw std::logic_error("OptimalStrategy: no legal move");
    const bool mover_wants_alice = (s.to_move == Player::Alice);
    for (const auto& m : moves)
      if (solver_.alice_wins(game_.apply_move(s, m)) == mover_wants_alice) return m;
    return moves.front();  // lost position: any move will do
  }

private:
  const Game& game_;
  Solver<Game> solver_;
};

// Alice's mirroring strategy on a prism product K_2 x G laid out as
// vertex = side * |G| + v. Whenever the opponent colours (side, v) with m,
// she colours the partner (1 - side, v) with m shifted by the side's sign,
// with colours read as residues modulo the colour count.
class PairingStrategy : public Strategy<OrbitGame> {
public:
  PairingStrategy(const OrbitGame& game, int base_size) : game_(game), base_size_(base_size) {
    if (game_.graph().size() != 2 * base_size_)
      throw std::invalid_argument("PairingStrategy: graph is not a K_2 product of the given base");
  }

  GraphMove choose(const GraphGameState&, const std::optional<GraphMove>& last) override {
    if (!last || last->is_pass())
      throw std::logic_error("PairingStrategy: needs the opponent's colouring move");
    const int side = last->vertex / base_size_;
    const int partner = (1 - side) * base_size_ + last->vertex % base_size_;
    const int modulus = game_.colours();
    const int shift = side == 1 ? 1 : modulus - 1;
    const int colour = (last->colour - 1 + shift) % modulus + 1;
    return {partner, colour};
  }

private:
  const OrbitGame& game_;
  int base_size_;
};

// Lifts a base-game strategy into the game with quotas
// (m*a + (m-1)*b, b): inside her enlarged turn Alice alternates base replies
// with arbitrary stand-ins for the opponent's base moves, so the move
// sequence replays a base-schedule game on the same board.
class SimulationStrategy : public Strategy<HammingGame> {
public:
  SimulationStrategy(const HammingGame& lifted, const HammingGame& base,
                     std::unique_ptr<Strategy<HammingGame>> base_strategy)
      : lifted_(lifted), base_(base), base_strategy_(std::move(base_strategy)) {
    if (lifted_.cell_count() != base_.cell_count())
      throw std::invalid_argument("SimulationStrategy: games disagree on the board");
  }

  Move choose(const GameState& s, const std::optional<Move>&) override {
    int filled = 0;
    for (int idx = 0; idx < lifted_.cell_count(); ++idx)
      filled += (s.board.at_index(idx) != 0);
    const auto [mover, remaining] = base_schedule_position(filled);
    if (mover == Player::Alice) {
      GameState shadow;
      shadow.board = s.board;
      shadow.to_move = Player::Alice;
      shadow.remaining = remaining;
      return base_strategy_->choose(shadow, std::nullopt);
    }
    // Stand-in for the opponent's base move: any legal move works, because
    // the base strategy beats every continuation.
    auto moves = lifted_.legal_moves(s);
    if (moves.empty()) throw std::logic_error("SimulationStrategy: no legal move");
    return moves.front();
  }

private:
  // Whose base-schedule move is move number `filled`, and how many moves that
  // player still has in the base turn containing it.
  std::pair<Player, int> base_schedule_position(int filled) const {
    const int total = base_.cell_count();
    int done = 0;
    Player cur = base_.config().first;
    while (true) {
      const int take = std::min(base_.quota(cur), total - done);
      if (filled < done + take) return {cur, done + take - filled};
      done += take;
      cur = other(cur);
    }
  }

  const HammingGame& lifted_;
  const HammingGame& base_;
  std::unique_ptr<Strategy<HammingGame>> base_strategy_;
};

// Bob's second-move kill in the first-try game: reply to the opening
// (c, s) by colouring a cell collinear with an orbit image of c, using the
// symbol image that orbit forces there, leaving that image cell dead.
class FirstTryDestroyerStrategy : public Strategy<HammingGame> {
public:
  explicit FirstTryDestroyerStrategy(const HammingGame& game) : game_(game) {
    if (game_.config().variant != Variant::FirstTry)
      throw std::invalid_argument("FirstTryDestroyerStrategy: first-try games only");
  }

  Move choose(const GameState& s, const std::optional<Move>& last) override {
    if (!last) throw std::logic_error("FirstTryDestroyerStrategy: needs the opening move");
    const int c0 = last->cell;
    const int s0 = last->symbol;
    const int L = game_.orbit_length(c0);
    for (int m = 1; m < L; ++m) {
      const int target = game_.orbit_image(c0, m);
      if (s.board.at_index(target) != 0) continue;
      const int forced = game_.symbol_power(s0, m);
      for (int w : game_.collinear(target)) {
        if (s.board.at_index(w) != 0) continue;
        if (game_.orbit_id(w) == game_.orbit_id(c0)) continue;
        if (!(game_.legal_colour_mask(s, w) & (1u << (forced - 1)))) continue;
        const GameState after = game_.apply_move(s, {w, forced});
        if (after.board.at_index(target) == 0 && game_.legal_colour_mask(after, target) == 0)
          return {w, forced};
      }
    }
    throw std::logic_error("FirstTryDestroyerStrategy: no destroying move from this position");
  }

private:
  const HammingGame& game_;
};

// Full adversarial walk: the strategy's own moves are fixed, every adversary
// line is explored. Memoized at adversary decision points on raw state keys;
// canonical keys are unsound here because strategies need not be
// colour-equivariant.
template <class Game>
bool verify_strategy_from(const Game& game, Strategy<Game>& strategy, Player role,
                          const typename Game::StateT& start,
                          std::uint64_t node_budget = 50'000'000) {
  using StateT = typename Game::StateT;
  using MoveT = typename Game::MoveT;
  std::unordered_map<std::string, bool> memo;
  std::uint64_t nodes = 0;

  auto walk = [&](auto&& self, const StateT& s, const std::optional<MoveT>& last) -> bool {
    if (auto t = game.terminal_status(s))
      return (*t == Outcome::AliceWins) == (role == Player::Alice);
    if (++nodes > node_budget) throw BudgetExceeded(nodes);
    if (s.to_move == role) {
      const MoveT m = strategy.choose(s, last);
      return self(self, game.apply_move(s, m), last);
    }
    const std::string key = game.raw_state_key(s);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = true;
    for (const MoveT& m : game.legal_moves(s)) {
      if (!self(self, game.apply_move(s, m), m)) {
        ok = false;
        break;
      }
    }
    memo.emplace(key, ok);
    return ok;
  };
  return walk(walk, start, std::nullopt);
}

template <class Game>
bool verify_strategy(const Game& game, Strategy<Game>& strategy, Player role,
                     std::uint64_t node_budget = 50'000'000) {
  return verify_strategy_from(game, strategy, role, game.initial_state(), node_budget);
}

}  // namespace lgl
