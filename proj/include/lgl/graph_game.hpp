#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lgl/game.hpp"
#include "lgl/graph.hpp"

namespace lgl {

struct GraphGameConfig {
  WeightedGraph graph;
  int colours = 0;
  int alice_quota = 1;
  int bob_quota = 1;
  Player first = Player::Alice;
};

/// colour == 0 encodes a passing move (a weight decrement on that vertex).
struct GraphMove {
  int vertex = -1;
  int colour = 0;
  bool operator==(const GraphMove&) const = default;
  bool is_pass() const { return colour == 0; }
};

struct GraphGameState {
  std::vector<std::uint8_t> colour;    // 0 = uncoloured
  std::vector<std::uint8_t> residual;  // remaining weight units
  Player to_move = Player::Alice;
  int remaining = 0;
};

/// The modified colouring game on a vertex-weighted graph: colouring a vertex
/// or passing both consume one weight unit, and Alice wins as soon as every
/// vertex is coloured. With unit weights passes are impossible and this is
/// the classical colouring game.
class OrbitGame {
public:
  using StateT = GraphGameState;
  using MoveT = GraphMove;

  // Optional symmetry maps (weight-preserving graph automorphisms, as index
  // maps) let the memo key quotient by them; each map is validated.
  explicit OrbitGame(GraphGameConfig cfg, std::vector<std::vector<int>> symmetry_maps = {})
      : cfg_(std::move(cfg)), sym_maps_(std::move(symmetry_maps)) {
    if (cfg_.colours < 1 || cfg_.colours > 31)
      throw std::invalid_argument("OrbitGame: colour count must be in [1, 31]");
    if (cfg_.alice_quota < 1 || cfg_.bob_quota < 1)
      throw std::invalid_argument("OrbitGame: quotas must be positive");
    all_colours_ = (1u << cfg_.colours) - 1;
    const int n = cfg_.graph.size();
    for (const auto& map : sym_maps_) {
      if (static_cast<int>(map.size()) != n)
        throw std::invalid_argument("OrbitGame: symmetry map size mismatch");
      std::vector<char> seen(n, 0);
      for (int v : map) {
        if (v < 0 || v >= n || seen[v])
          throw std::invalid_argument("OrbitGame: symmetry map is not a bijection");
        seen[v] = 1;
      }
      for (int u = 0; u < n; ++u) {
        if (cfg_.graph.weight(map[u]) != cfg_.graph.weight(u))
          throw std::invalid_argument("OrbitGame: symmetry map breaks weights");
        for (int w : cfg_.graph.neighbours(u))
          if (!cfg_.graph.adjacent(map[u], map[w]))
            throw std::invalid_argument("OrbitGame: symmetry map breaks adjacency");
      }
    }
  }

  /// The classical (a,b)-colouring game: the same engine over unit weights.
  static OrbitGame classical(const WeightedGraph& g, int colours, int a, int b, Player first) {
    return OrbitGame({replicate(g, 1), colours, a, b, first});
  }

  const GraphGameConfig& config() const { return cfg_; }
  const WeightedGraph& graph() const { return cfg_.graph; }
  int colours() const { return cfg_.colours; }
  int quota(Player p) const { return p == Player::Alice ? cfg_.alice_quota : cfg_.bob_quota; }

  GraphGameState initial_state() const {
    GraphGameState s;
    const int n = cfg_.graph.size();
    s.colour.assign(n, 0);
    s.residual.resize(n);
    for (int v = 0; v < n; ++v) s.residual[v] = static_cast<std::uint8_t>(cfg_.graph.weight(v));
    s.to_move = cfg_.first;
    s.remaining = static_cast<int>(std::min<long long>(quota(cfg_.first), cfg_.graph.total_weight()));
    return s;
  }

  std::uint32_t colour_mask(const GraphGameState& s, int v) const {
    std::uint32_t mask = all_colours_;
    for (int w : cfg_.graph.neighbours(v))
      if (const int c = s.colour[w]; c != 0) mask &= ~(1u << (c - 1));
    return mask;
  }

  // Colour moves (vertex ascending, colour ascending), then passes.
  std::vector<GraphMove> legal_moves(const GraphGameState& s) const {
    std::vector<GraphMove> out;
    const int n = cfg_.graph.size();
    for (int v = 0; v < n; ++v) {
      if (s.colour[v] != 0) continue;
      const std::uint32_t mask = colour_mask(s, v);
      for (int c = 1; c <= cfg_.colours; ++c)
        if (mask & (1u << (c - 1))) out.push_back({v, c});
    }
    for (int v = 0; v < n; ++v)
      if (s.colour[v] != 0 && s.residual[v] > 0) out.push_back({v, 0});
    return out;
  }

  GraphGameState apply_move(const GraphGameState& s, const GraphMove& m) const {
    const int n = cfg_.graph.size();
    if (m.vertex < 0 || m.vertex >= n) throw std::invalid_argument("apply_move: vertex out of range");
    if (m.is_pass()) {
      if (s.colour[m.vertex] == 0 || s.residual[m.vertex] == 0)
        throw std::invalid_argument("apply_move: illegal pass");
    } else {
      if (m.colour < 1 || m.colour > cfg_.colours || s.colour[m.vertex] != 0 ||
          !(colour_mask(s, m.vertex) & (1u << (m.colour - 1))))
        throw std::invalid_argument("apply_move: illegal colouring");
    }
    GraphGameState next = s;
    apply_unchecked(next, m);
    return next;
  }

  struct Undo {
    int vertex;
    bool was_pass;
    Player to_move;
    int remaining;
  };

  Undo apply_inplace(GraphGameState& s, const GraphMove& m) const {
    const Undo u{m.vertex, m.is_pass(), s.to_move, s.remaining};
    apply_unchecked(s, m);
    return u;
  }

  void undo_inplace(GraphGameState& s, const Undo& u) const {
    if (!u.was_pass) s.colour[u.vertex] = 0;
    s.residual[u.vertex] += 1;
    s.to_move = u.to_move;
    s.remaining = u.remaining;
  }

  std::optional<Outcome> terminal_status(const GraphGameState& s) const {
    bool all_coloured = true;
    for (int v = 0; v < cfg_.graph.size(); ++v) {
      if (s.colour[v] != 0) continue;
      all_coloured = false;
      if (colour_mask(s, v) == 0) return Outcome::BobWins;
    }
    // Final residual weights are irrelevant: remaining passes cannot block
    // anything once every vertex is coloured.
    if (all_coloured) return Outcome::AliceWins;
    return std::nullopt;
  }

  struct Analysis {
    std::optional<Outcome> outcome;
    std::vector<GraphMove> moves;
  };

  // Colours carry no structure, so unused colours are interchangeable; the
  // solver explores one fresh representative per vertex.
  std::optional<Outcome> analyze_into(const GraphGameState& s, std::vector<GraphMove>& moves,
                                      bool = true) const {
    moves.clear();
    const int n = cfg_.graph.size();
    std::uint32_t used = 0;
    bool all_coloured = true;
    for (int v = 0; v < n; ++v)
      if (const int c = s.colour[v]; c != 0)
        used |= 1u << (c - 1);
      else
        all_coloured = false;
    if (all_coloured) return Outcome::AliceWins;
    for (int v = 0; v < n; ++v) {
      if (s.colour[v] != 0) continue;
      std::uint32_t mask = colour_mask(s, v);
      if (mask == 0) {
        moves.clear();
        return Outcome::BobWins;
      }
      const std::uint32_t fresh = mask & ~used;
      mask = (mask & used) | (fresh & (~fresh + 1));
      for (int c = 1; c <= cfg_.colours; ++c)
        if (mask & (1u << (c - 1))) moves.push_back({v, c});
    }
    for (int v = 0; v < n; ++v)
      if (s.colour[v] != 0 && s.residual[v] > 0) moves.push_back({v, 0});
    return std::nullopt;
  }

  Analysis solver_analyze(const GraphGameState& s, bool shortcuts = true) const {
    Analysis out;
    out.outcome = analyze_into(s, out.moves, shortcuts);
    return out;
  }

  // Colours carry no structure here, so they are always canonicalized by
  // first appearance. With symmetry maps the (colour, residual) image is
  // additionally minimized over the maps.
  void append_key(const GraphGameState& s, std::string& key) const {
    const int n = cfg_.graph.size();
    if (!sym_maps_.empty() && n <= 32) {
      append_key_symmetric(s, key);
      return;
    }
    std::array<std::uint8_t, 32> relabel{};
    std::uint8_t next = 1;
    for (int v = 0; v < n; ++v) {
      const int c = s.colour[v];
      if (c == 0) {
        key.push_back(0);
        continue;
      }
      if (relabel[c] == 0) relabel[c] = next++;
      key.push_back(static_cast<char>(relabel[c]));
    }
    for (int v = 0; v < n; ++v) key.push_back(static_cast<char>(s.residual[v]));
    key.push_back(s.to_move == Player::Alice ? 1 : 2);
    key.push_back(static_cast<char>(s.remaining));
  }

  std::string state_key(const GraphGameState& s) const {
    const int n = cfg_.graph.size();
    std::string key;
    key.reserve(2 * n + 2);
    append_key(s, key);
    return key;
  }

  std::string raw_state_key(const GraphGameState& s) const {
    const int n = cfg_.graph.size();
    std::string key;
    key.reserve(2 * n + 2);
    for (int v = 0; v < n; ++v) key.push_back(static_cast<char>(s.colour[v]));
    for (int v = 0; v < n; ++v) key.push_back(static_cast<char>(s.residual[v]));
    key.push_back(s.to_move == Player::Alice ? 1 : 2);
    key.push_back(static_cast<char>(s.remaining));
    return key;
  }

  int depth_hint(const GraphGameState& s) const {
    int left = 0;
    for (auto r : s.residual) left += r;
    return left;
  }

private:
  void append_key_symmetric(const GraphGameState& s, std::string& key) const {
    const int n = cfg_.graph.size();
    std::array<std::uint8_t, 64> best{};
    std::array<std::uint8_t, 32> relab_val{};
    std::array<std::uint16_t, 32> relab_ep{};
    std::uint16_t epoch = 0;
    bool first = true;
    for (const auto& map : sym_maps_) {
      ++epoch;
      std::uint8_t next = 1;
      int cmp = first ? -1 : 0;
      for (int i = 0; i < 2 * n; ++i) {
        std::uint8_t cv;
        if (i < n) {
          const int c = s.colour[map[i]];
          if (c == 0) {
            cv = 0;
          } else {
            if (relab_ep[c] != epoch) {
              relab_ep[c] = epoch;
              relab_val[c] = next++;
            }
            cv = relab_val[c];
          }
        } else {
          cv = s.residual[map[i - n]];
        }
        if (cmp == 0) {
          if (cv < best[i])
            cmp = -1;
          else if (cv > best[i])
            break;
        }
        if (cmp < 0) best[i] = cv;
      }
      first = false;
    }
    key.append(reinterpret_cast<const char*>(best.data()), 2 * n);
    key.push_back(s.to_move == Player::Alice ? 1 : 2);
    key.push_back(static_cast<char>(s.remaining));
  }

  void apply_unchecked(GraphGameState& s, const GraphMove& m) const {
    if (!m.is_pass()) s.colour[m.vertex] = static_cast<std::uint8_t>(m.colour);
    s.residual[m.vertex] -= 1;
    s.remaining -= 1;
    if (s.remaining == 0) {
      int left = 0;
      for (int v = 0; v < cfg_.graph.size(); ++v) left += s.residual[v];
      s.to_move = other(s.to_move);
      s.remaining = std::min(quota(s.to_move), left);
    }
  }

  GraphGameConfig cfg_;
  std::vector<std::vector<int>> sym_maps_;
  std::uint32_t all_colours_ = 0;
};

/// Spec alias: enumerate the moves of the modified game.
inline std::vector<GraphMove> modified_legal_moves(const OrbitGame& g, const GraphGameState& s) {
  return g.legal_moves(s);
}

}  // namespace lgl
