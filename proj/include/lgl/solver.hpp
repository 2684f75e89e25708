#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "lgl/game.hpp"
#include "lgl/graph_game.hpp"

namespace lgl {

struct BudgetExceeded : std::runtime_error {
  std::uint64_t nodes;
  explicit BudgetExceeded(std::uint64_t n)
      : std::runtime_error("solver: node budget exceeded after " + std::to_string(n) + " nodes"),
        nodes(n) {}
};

struct SolveOptions {
  std::uint64_t node_budget = 100'000'000;
  int threads = 1;
  int tt_bits = 18;  // transposition table size: 2^tt_bits buckets

  /// LGL_NODE_BUDGET overrides the default budget.
  static SolveOptions from_env() {
    SolveOptions opt;
    if (const char* env = std::getenv("LGL_NODE_BUDGET")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0) opt.node_budget = v;
    }
    return opt;
  }
};

template <class Game>
struct SolveResult {
  Outcome outcome = Outcome::BobWins;
  std::vector<typename Game::MoveT> principal_variation;
  std::uint64_t nodes_searched = 0;
  double wall_seconds = 0.0;
};

namespace detail {

// Fixed-size transposition table keyed on a 128-bit state fingerprint. Each
// bucket holds a depth-preferred slot and an always-replace slot, so entries
// near the root survive leaf churn. A displaced entry only costs a re-search,
// never correctness.
class FlatTable {
public:
  explicit FlatTable(int bits) : mask_((std::size_t{1} << bits) - 1), buckets_(mask_ + 1) {}

  static std::pair<std::uint64_t, std::uint64_t> fingerprint(const std::string& key) {
    std::uint64_t a = 0x9e3779b97f4a7c15ull, b = 0xc2b2ae3d27d4eb4full;
    for (unsigned char ch : key) {
      a = (a ^ ch) * 0x100000001b3ull;
      a ^= a >> 29;
      b = (b + ch) * 0xff51afd7ed558ccdull;
      b ^= b >> 33;
    }
    a *= 0xbf58476d1ce4e5b9ull;
    a ^= a >> 32;
    b *= 0x94d049bb133111ebull;
    b ^= b >> 28;
    return {a | 1, b};  // 0 marks an empty slot
  }

  std::optional<bool> lookup(std::uint64_t a, std::uint64_t b) const {
    const Bucket& bk = buckets_[a & mask_];
    if (bk.deep.a == a && bk.deep.b == b) return bk.deep.value != 0;
    if (bk.fresh.a == a && bk.fresh.b == b) return bk.fresh.value != 0;
    return std::nullopt;
  }

  void store(std::uint64_t a, std::uint64_t b, bool value, int depth) {
    Bucket& bk = buckets_[a & mask_];
    Slot entry{a, b, static_cast<std::uint8_t>(value ? 1 : 0),
               static_cast<std::uint8_t>(depth > 255 ? 255 : depth)};
    if (bk.deep.a == 0 || depth >= bk.deep.depth) {
      if (bk.deep.a != 0 && !(bk.deep.a == a && bk.deep.b == b)) bk.fresh = bk.deep;
      bk.deep = entry;
    } else {
      bk.fresh = entry;
    }
  }

private:
  struct Slot {
    std::uint64_t a = 0, b = 0;
    std::uint8_t value = 0;
    std::uint8_t depth = 0;
  };
  struct Bucket {
    Slot deep, fresh;
  };
  std::size_t mask_;
  std::vector<Bucket> buckets_;
};

}  // namespace detail

/// Win/loss search over either game form. Outcomes are binary, so the search
/// is plain negamax with early exit on a winning child; the move ordering of
/// the game's solver_analyze does the pruning work.
template <class Game>
class Solver {
public:
  using StateT = typename Game::StateT;
  using MoveT = typename Game::MoveT;

  explicit Solver(const Game& game, SolveOptions opt = {})
      : game_(game), opt_(opt), tt_(opt.tt_bits) {}

  std::uint64_t nodes() const { return nodes_; }

  bool alice_wins(const StateT& s) {
    StateT scratch = s;
    return search(scratch, 0);
  }

  SolveResult<Game> run() {
    const auto t0 = std::chrono::steady_clock::now();
    const StateT init = game_.initial_state();
    SolveResult<Game> res;
    if (opt_.threads <= 1) {
      res.outcome = alice_wins(init) ? Outcome::AliceWins : Outcome::BobWins;
    } else {
      res.outcome = solve_root_parallel(init);
    }
    res.principal_variation = principal_variation(init, res.outcome);
    res.nodes_searched = nodes_;
    res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
  }

  // First move preserving the declared outcome, repeated to a real terminal.
  // At lost positions every child preserves the outcome and the first move is
  // taken, so the line is deterministic.
  std::vector<MoveT> principal_variation(StateT s, Outcome outcome) {
    std::vector<MoveT> pv;
    while (true) {
      auto an = game_.solver_analyze(s, /*shortcuts=*/false);
      if (an.outcome) break;
      const bool alice_moving = (s.to_move == Player::Alice);
      const bool alice_wins_here = (outcome == Outcome::AliceWins);
      bool picked = false;
      if (alice_moving == alice_wins_here) {
        for (const MoveT& m : an.moves) {
          StateT child = game_.apply_move(s, m);
          if (alice_wins(child) == alice_wins_here) {
            pv.push_back(m);
            s = std::move(child);
            picked = true;
            break;
          }
        }
      }
      if (!picked) {
        pv.push_back(an.moves.front());
        s = game_.apply_move(s, an.moves.front());
      }
    }
    return pv;
  }

private:
  // Depth-first win/loss search over an in-place mutable state. Move buffers
  // live in a deque so references survive deeper growth.
  bool search(StateT& s, std::size_t depth) {
    while (depth >= buffers_.size()) buffers_.emplace_back();
    std::vector<MoveT>& moves = buffers_[depth];
    if (auto outcome = game_.analyze_into(s, moves)) return *outcome == Outcome::AliceWins;
    if (++nodes_ > opt_.node_budget) throw BudgetExceeded(nodes_);
    key_buf_.clear();
    game_.append_key(s, key_buf_);
    const auto [ka, kb] = detail::FlatTable::fingerprint(key_buf_);
    if (auto hit = tt_.lookup(ka, kb)) return *hit;
    const bool alice_moving = (s.to_move == Player::Alice);
    const int hint = game_.depth_hint(s);
    bool value = !alice_moving;
    for (const MoveT& m : moves) {
      const auto undo = game_.apply_inplace(s, m);
      const bool w = search(s, depth + 1);
      game_.undo_inplace(s, undo);
      if (alice_moving && w) {
        value = true;
        break;
      }
      if (!alice_moving && !w) {
        value = false;
        break;
      }
    }
    tt_.store(ka, kb, value, hint);
    return value;
  }

  Outcome solve_root_parallel(const StateT& init) {
    auto an = game_.solver_analyze(init);
    if (an.outcome) return *an.outcome;
    std::vector<StateT> children;
    children.reserve(an.moves.size());
    for (const auto& m : an.moves) children.push_back(game_.apply_move(init, m));
    std::vector<int> results(children.size(), -1);
    std::atomic<std::size_t> cursor{0};
    std::atomic<std::uint64_t> shared_nodes{nodes_};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    const int workers = std::min<int>(opt_.threads, static_cast<int>(children.size()));
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        try {
          while (true) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= children.size()) return;
            Solver<Game> sub(game_, opt_);
            results[i] = sub.alice_wins(children[i]) ? 1 : 0;
            if (shared_nodes.fetch_add(sub.nodes()) + sub.nodes() > opt_.node_budget)
              throw BudgetExceeded(shared_nodes.load());
          }
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    nodes_ = shared_nodes.load();
    const bool alice_moving = (init.to_move == Player::Alice);
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (alice_moving && results[i] == 1) return Outcome::AliceWins;
      if (!alice_moving && results[i] == 0) return Outcome::BobWins;
    }
    return alice_moving ? Outcome::BobWins : Outcome::AliceWins;
  }

  const Game& game_;
  SolveOptions opt_;
  detail::FlatTable tt_;
  std::uint64_t nodes_ = 0;
  std::deque<std::vector<MoveT>> buffers_;
  std::string key_buf_;
};

template <class Game>
SolveResult<Game> solve(const Game& game, SolveOptions opt = {}) {
  Solver<Game> solver(game, opt);
  return solver.run();
}

// ---------------------------------------------------------------------------
// Chromatic profiles.

struct ChromaticEntry {
  int colours = 0;
  std::optional<Outcome> outcome;  // absent when the budget ran out
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

struct ChromaticProfile {
  int a = 1, b = 1;
  Player first = Player::Alice;
  std::vector<ChromaticEntry> entries;
  std::optional<int> least_winning;
  bool partial = false;

  std::optional<Outcome> outcome_at(int colours) const {
    for (const auto& e : entries)
      if (e.colours == colours) return e.outcome;
    return std::nullopt;
  }
};

/// Search ceiling: orbit count + n - 1 colours always suffice to finish the
/// scan, per the orbit-counting bound.
inline int default_chromatic_ceiling(const Isotopism& theta) {
  return orbit_partition(theta).size() + theta.shape().symbols - 1;
}

/// Quotas beyond the orbit count change nothing: with that many moves a
/// player can already pin every orbit in one turn.
inline std::pair<int, int> effective_quota(const Isotopism& theta, int a, int b) {
  const int cap = orbit_partition(theta).size();
  return {std::min(a, cap), std::min(b, cap)};
}

// The profile always covers the whole range [n, n_max]: a win is not assumed
// monotone in the number of colours, so no bisection.
inline ChromaticProfile game_chromatic_number(const Isotopism& theta, int a, int b, Player first,
                                              std::optional<int> n_max = std::nullopt,
                                              SolveOptions opt = {}) {
  const auto [ae, be] = effective_quota(theta, a, b);
  ChromaticProfile profile;
  profile.a = a;
  profile.b = b;
  profile.first = first;
  const int lo = theta.shape().symbols;
  const int hi = n_max ? *n_max : default_chromatic_ceiling(theta);
  for (int colours = lo; colours <= hi; ++colours) {
    ChromaticEntry entry;
    entry.colours = colours;
    try {
      HammingGame game({theta, colours, ae, be, first, Variant::Standard});
      const auto res = solve(game, opt);
      entry.outcome = res.outcome;
      entry.nodes = res.nodes_searched;
      entry.seconds = res.wall_seconds;
      if (res.outcome == Outcome::AliceWins && !profile.least_winning)
        profile.least_winning = colours;
      profile.entries.push_back(entry);
    } catch (const BudgetExceeded&) {
      profile.partial = true;
      profile.entries.push_back(entry);
      break;
    }
  }
  return profile;
}

/// Same profile computed on the orbit-contraction graph via the modified
/// game; restricted to feasible principal isotopisms like the contraction.
inline ChromaticProfile contracted_game_chromatic_number(const Isotopism& theta, int a, int b,
                                                         Player first,
                                                         std::optional<int> n_max = std::nullopt,
                                                         SolveOptions opt = {}) {
  const WeightedGraph contraction = build_contraction_graph(theta);
  // For the trivial isotopism the contraction is the Hamming graph itself and
  // inherits its cell-space symmetries.
  const std::vector<std::vector<int>> maps =
      theta.is_trivial() ? cell_symmetry_maps(theta.shape()) : std::vector<std::vector<int>>{};
  const auto [ae, be] = effective_quota(theta, a, b);
  ChromaticProfile profile;
  profile.a = a;
  profile.b = b;
  profile.first = first;
  const int lo = theta.shape().symbols;
  const int hi = n_max ? *n_max : default_chromatic_ceiling(theta);
  for (int colours = lo; colours <= hi; ++colours) {
    ChromaticEntry entry;
    entry.colours = colours;
    try {
      OrbitGame game({contraction, colours, ae, be, first}, maps);
      const auto res = solve(game, opt);
      entry.outcome = res.outcome;
      entry.nodes = res.nodes_searched;
      entry.seconds = res.wall_seconds;
      if (res.outcome == Outcome::AliceWins && !profile.least_winning)
        profile.least_winning = colours;
      profile.entries.push_back(entry);
    } catch (const BudgetExceeded&) {
      profile.partial = true;
      profile.entries.push_back(entry);
      break;
    }
  }
  return profile;
}

}  // namespace lgl
