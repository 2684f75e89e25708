#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>

#include "lgl/isotopism.hpp"

namespace lgl {

enum class Player : std::uint8_t { Alice, Bob };
enum class Outcome : std::uint8_t { AliceWins, BobWins };
enum class Variant : std::uint8_t { Standard, FirstTry };

inline Player other(Player p) { return p == Player::Alice ? Player::Bob : Player::Alice; }

inline const char* to_string(Player p) { return p == Player::Alice ? "Alice" : "Bob"; }
inline const char* to_string(Outcome o) {
  return o == Outcome::AliceWins ? "AliceWins" : "BobWins";
}
inline const char* to_string(Variant v) {
  return v == Variant::Standard ? "standard" : "first-try";
}

struct GameConfig {
  Isotopism theta;              // must be extendable
  int palette = 0;              // n' >= n; 0 means play with n colours
  int alice_quota = 1;          // a
  int bob_quota = 1;            // b
  Player first = Player::Alice;
  Variant variant = Variant::Standard;
};

struct Move {
  int cell = -1;  // flat lexicographic cell index
  int symbol = 0;
  bool operator==(const Move&) const = default;
};

struct GameState {
  Board board;
  Player to_move = Player::Alice;
  int remaining = 0;  // colourings left in the current turn
};

namespace detail {

inline Isotopism make_extension(const GameConfig& cfg, int palette) {
  if (palette < cfg.theta.shape().symbols)
    throw std::invalid_argument("HammingGame: palette below symbol count");
  if (palette > 31) throw std::invalid_argument("HammingGame: palette above supported maximum of 31");
  if (palette < cfg.theta.sym_size())
    throw std::invalid_argument("HammingGame: palette below symbol permutation size");
  if (!is_extendable(cfg.theta))
    throw std::invalid_argument("HammingGame: the game requires an extendable isotopism");
  return natural_extension(cfg.theta, palette);
}

}  // namespace detail

/// Move generator and referee for the stabilized colouring game played on a
/// Hamming board. All rule lookups are table-driven; states are values.
class HammingGame {
public:
  using StateT = GameState;
  using MoveT = Move;

  explicit HammingGame(GameConfig cfg)
      : cfg_(std::move(cfg)),
        palette_(cfg_.palette == 0 ? cfg_.theta.shape().symbols : cfg_.palette),
        ext_(detail::make_extension(cfg_, palette_)) {
    if (cfg_.alice_quota < 1 || cfg_.bob_quota < 1)
      throw std::invalid_argument("HammingGame: quotas must be positive");
    const Shape& sh = ext_.shape();
    d_ = sh.dim();
    n_cells_ = static_cast<int>(sh.cell_count());
    if (n_cells_ > 64) throw std::invalid_argument("HammingGame: boards above 64 cells unsupported");
    all_colours_ = palette_ >= 31 ? 0x7fffffffu : ((1u << palette_) - 1);
    canonical_colours_ = ext_.sym_perm().is_identity();
    orbits_ = orbit_partition(ext_);

    neighbours_.resize(n_cells_);
    for (int idx = 0; idx < n_cells_; ++idx) {
      Cell c = sh.cell_at(idx);
      for (int j = 0; j < d_; ++j) {
        const int keep = c[j];
        for (int v = 1; v <= sh.dims[j]; ++v) {
          if (v == keep) continue;
          c[j] = v;
          neighbours_[idx].push_back(sh.index_of(c));
        }
        c[j] = keep;
      }
    }

    orbit_len_.resize(n_cells_);
    images_.resize(n_cells_);
    int max_len = 1;
    for (int idx = 0; idx < n_cells_; ++idx) {
      Cell c = sh.cell_at(idx);
      const int L = static_cast<int>(ext_.cell_orbit_lcm(c));
      orbit_len_[idx] = L;
      max_len = std::max(max_len, L);
      Cell cur = c;
      for (int m = 1; m < L; ++m) {
        cur = ext_.image_cell(cur, 1);
        images_[idx].push_back(sh.index_of(cur));
      }
    }

    sym_pow_.assign(max_len + 1, std::vector<int>(palette_));
    sym_pow_inv_.assign(max_len + 1, std::vector<int>(palette_));
    for (int s = 1; s <= palette_; ++s) {
      sym_pow_[0][s - 1] = s;
      sym_pow_inv_[0][s - 1] = s;
    }
    for (int m = 1; m <= max_len; ++m)
      for (int s = 1; s <= palette_; ++s) {
        sym_pow_[m][s - 1] = ext_.sym_perm().apply(sym_pow_[m - 1][s - 1]);
        sym_pow_inv_[m][s - 1] = ext_.sym_perm().apply_inverse(sym_pow_inv_[m - 1][s - 1]);
      }

    c1_ok_.assign(n_cells_, 0);
    for (int idx = 0; idx < n_cells_; ++idx) {
      const Cell c = sh.cell_at(idx);
      std::vector<int> lens(d_ + 1);
      for (int j = 0; j < d_; ++j) lens[j] = ext_.coord_cycle_length(j, c[j]);
      for (int s = 1; s <= palette_; ++s) {
        lens[d_] = ext_.symbol_cycle_length(s);
        if (lcm_compatible(lens)) c1_ok_[idx] |= 1u << (s - 1);
      }
    }

    // For the trivial isotopism every cell-space symmetry is a game
    // automorphism, so the memo key can quotient by them as well.
    if (cfg_.theta.is_trivial()) sym_maps_ = cell_symmetry_maps(sh);
  }

  const GameConfig& config() const { return cfg_; }
  const Isotopism& extended() const { return ext_; }
  const Shape& shape() const { return ext_.shape(); }
  int palette() const { return palette_; }
  int cell_count() const { return n_cells_; }
  const OrbitPartition& orbits() const { return orbits_; }
  int orbit_length(int cell) const { return orbit_len_[cell]; }
  int orbit_image(int cell, int m) const { return images_[cell][m - 1]; }
  int orbit_id(int cell) const { return orbits_.orbit_of[cell]; }
  const std::vector<int>& collinear(int cell) const { return neighbours_[cell]; }
  int symbol_power(int s, int m) const { return sym_pow_[m][s - 1]; }
  int quota(Player p) const { return p == Player::Alice ? cfg_.alice_quota : cfg_.bob_quota; }

  GameState initial_state() const {
    GameState s;
    s.board = Board(shape(), palette_);
    s.to_move = cfg_.first;
    s.remaining = std::min(quota(cfg_.first), n_cells_);
    return s;
  }

  // Legal symbols for an empty cell, as a bitmask over [n'].
  std::uint32_t legal_colour_mask(const GameState& s, int cell) const {
    if (cell < 0 || cell >= n_cells_) throw std::out_of_range("legal_colours: cell out of range");
    const auto& bd = s.board.cells();
    if (bd[cell] != 0) throw std::invalid_argument("legal_colours: cell is not empty");
    std::uint32_t mask = c1_ok_[cell];

    // Rule 1: the symbol may not repeat in any line through the cell.
    for (int w : neighbours_[cell])
      if (const int v = bd[w]; v != 0) mask &= ~(1u << (v - 1));

    const int L = orbit_len_[cell];
    const auto& imgs = images_[cell];
    for (int k = 1; k < L && mask != 0; ++k) {
      const int img = imgs[k - 1];
      // Rule 2: a coloured orbit mate pins the candidate, checked from both
      // ends of the orbit relation.
      if (const int v = bd[img]; v != 0) {
        const int fwd = sym_pow_inv_[k][v - 1];
        const int bwd = sym_pow_[L - k][v - 1];
        if (fwd != bwd) return 0;
        mask &= 1u << (fwd - 1);
      }
      if (cfg_.variant == Variant::Standard) {
        // Rule 3: a coloured cell collinear with the k-th image forbids the
        // candidate whose k-th symbol image it already carries.
        for (int w : neighbours_[img])
          if (const int v = bd[w]; v != 0) mask &= ~(1u << (sym_pow_inv_[k][v - 1] - 1));
      }
    }
    return mask;
  }

  std::vector<int> legal_colours(const GameState& s, const Cell& c) const {
    const std::uint32_t mask = legal_colour_mask(s, shape().index_of(c));
    std::vector<int> out;
    for (int v = 1; v <= palette_; ++v)
      if (mask & (1u << (v - 1))) out.push_back(v);
    return out;
  }

  // All legal moves in cell-lexicographic, then symbol-ascending order.
  std::vector<Move> legal_moves(const GameState& s) const {
    std::vector<Move> out;
    for (int idx = 0; idx < n_cells_; ++idx) {
      if (s.board.at_index(idx) != 0) continue;
      const std::uint32_t mask = legal_colour_mask(s, idx);
      for (int v = 1; v <= palette_; ++v)
        if (mask & (1u << (v - 1))) out.push_back({idx, v});
    }
    return out;
  }

  GameState apply_move(const GameState& s, const Move& m) const {
    if (m.cell < 0 || m.cell >= n_cells_ || m.symbol < 1 || m.symbol > palette_ ||
        s.board.at_index(m.cell) != 0 ||
        !(legal_colour_mask(s, m.cell) & (1u << (m.symbol - 1))))
      throw std::invalid_argument("apply_move: illegal move");
    GameState next = s;
    apply_unchecked(next, m);
    return next;
  }

  // --- in-place transitions for the solver's hot path ----------------------
  // Legality is the caller's responsibility; the generated move lists are
  // legal by construction.

  struct Undo {
    int cell;
    Player to_move;
    int remaining;
  };

  Undo apply_inplace(GameState& s, const Move& m) const {
    const Undo u{m.cell, s.to_move, s.remaining};
    apply_unchecked(s, m);
    return u;
  }

  void undo_inplace(GameState& s, const Undo& u) const {
    s.board.set_index(u.cell, 0);
    s.to_move = u.to_move;
    s.remaining = u.remaining;
  }

  // AliceWins once the board is full. A dead cell means BobWins immediately:
  // constraints only accumulate, so a dead cell never revives.
  std::optional<Outcome> terminal_status(const GameState& s) const {
    bool any_empty = false;
    for (int idx = 0; idx < n_cells_; ++idx) {
      if (s.board.at_index(idx) != 0) continue;
      any_empty = true;
      if (legal_colour_mask(s, idx) == 0) return Outcome::BobWins;
    }
    if (!any_empty) return Outcome::AliceWins;
    return std::nullopt;
  }

  bool symbol_free_orbit_exists(const Board& b) const {
    for (const auto& orb : orbits_.orbits) {
      bool marked = false;
      for (int idx : orb)
        if (b.at_index(idx) != 0) {
          marked = true;
          break;
        }
      if (!marked) return true;
    }
    return false;
  }

  // Once no symbol-free orbit remains, the rest of the board is determined by
  // the orbit relation; the propagated board must come out Latin-valid, or an
  // earlier move broke an engine invariant.
  std::optional<Board> forced_completion(const GameState& s) const {
    if (cfg_.variant != Variant::Standard)
      throw std::invalid_argument("forced_completion: standard variant only");
    if (symbol_free_orbit_exists(s.board)) return std::nullopt;
    Board full = s.board;
    for (const auto& orb : orbits_.orbits) {
      int anchor = -1;
      for (int idx : orb)
        if (full.at_index(idx) != 0) {
          anchor = idx;
          break;
        }
      const int base = full.at_index(anchor);
      const int L = orbit_len_[anchor];
      for (int k = 1; k < L; ++k) {
        const int img = images_[anchor][k - 1];
        const int expected = sym_pow_[k][base - 1];
        const int there = full.at_index(img);
        if (there == 0)
          full.set_index(img, expected);
        else if (there != expected)
          throw std::logic_error("forced_completion: inconsistent orbit colouring");
      }
    }
    if (!validate_latin(full))
      throw std::logic_error("forced_completion: propagated board is not Latin");
    return full;
  }

  // --- solver hooks --------------------------------------------------------

  struct Analysis {
    std::optional<Outcome> outcome;
    std::vector<Move> moves;  // forced (marked-orbit) cells first, then by
                              // ascending candidate count
  };

  // `shortcuts` additionally scores a position as won for Alice as soon as no
  // symbol-free orbit remains, which is exact for reachable standard-variant
  // states; the principal-variation walk disables it to reach real terminals.
  //
  // When the extended symbol permutation is the identity, unused colours are
  // interchangeable at every cell, so the move list keeps only one fresh
  // representative per cell. The omitted moves reach canonically equal states.
  std::optional<Outcome> analyze_into(const GameState& s, std::vector<Move>& moves,
                                      bool shortcuts = true) const {
    moves.clear();
    if (shortcuts && cfg_.variant == Variant::Standard && !symbol_free_orbit_exists(s.board)) {
      forced_completion(s);  // throws if an engine invariant broke
      return Outcome::AliceWins;
    }

    std::uint64_t marked = 0;  // orbit count <= cell count <= 64
    std::uint32_t used = 0;
    for (int idx = 0; idx < n_cells_; ++idx)
      if (const int v = s.board.at_index(idx); v != 0) {
        marked |= std::uint64_t{1} << orbits_.orbit_of[idx];
        used |= 1u << (v - 1);
      }

    struct CellMoves {
      std::uint32_t mask;
      std::int16_t cell;
      std::int8_t count;
      bool forced;
    };
    std::array<CellMoves, 64> cells;
    int n_open = 0;
    bool any_empty = false;
    for (int idx = 0; idx < n_cells_; ++idx) {
      if (s.board.at_index(idx) != 0) continue;
      any_empty = true;
      std::uint32_t mask = legal_colour_mask(s, idx);
      if (mask == 0) return Outcome::BobWins;
      if (canonical_colours_) {
        const std::uint32_t fresh = mask & ~used;
        mask = (mask & used) | (fresh & (~fresh + 1));  // lowest fresh bit
      }
      cells[n_open++] = {mask, static_cast<std::int16_t>(idx),
                         static_cast<std::int8_t>(std::popcount(mask)),
                         ((marked >> orbits_.orbit_of[idx]) & 1) != 0};
    }
    if (!any_empty) return Outcome::AliceWins;
    std::stable_sort(cells.begin(), cells.begin() + n_open,
                     [](const CellMoves& a, const CellMoves& b) {
                       if (a.forced != b.forced) return a.forced;
                       return a.count < b.count;
                     });
    for (int i = 0; i < n_open; ++i)
      for (int v = 1; v <= palette_; ++v)
        if (cells[i].mask & (1u << (v - 1))) moves.push_back({cells[i].cell, v});
    return std::nullopt;
  }

  Analysis solver_analyze(const GameState& s, bool shortcuts = true) const {
    Analysis out;
    out.outcome = analyze_into(s, out.moves, shortcuts);
    return out;
  }

  // Memoization key. When the extended symbol permutation is the identity,
  // every colour bijection is a game automorphism, so colours are relabelled
  // by first appearance; for the trivial isotopism the key is additionally
  // minimized over the cell-space symmetry maps.
  void append_key(const GameState& s, std::string& key) const {
    if (!sym_maps_.empty()) {
      append_key_symmetric(s, key);
      return;
    }
    if (canonical_colours_) {
      std::array<std::uint8_t, 32> relabel{};
      std::uint8_t next = 1;
      for (int idx = 0; idx < n_cells_; ++idx) {
        const int v = s.board.at_index(idx);
        if (v == 0) {
          key.push_back(0);
          continue;
        }
        if (relabel[v] == 0) relabel[v] = next++;
        key.push_back(static_cast<char>(relabel[v]));
      }
    } else {
      for (int idx = 0; idx < n_cells_; ++idx)
        key.push_back(static_cast<char>(s.board.at_index(idx)));
    }
    key.push_back(s.to_move == Player::Alice ? 1 : 2);
    key.push_back(static_cast<char>(s.remaining));
  }

  std::string state_key(const GameState& s) const {
    std::string key;
    key.reserve(n_cells_ + 2);
    append_key(s, key);
    return key;
  }

  const std::vector<std::vector<int>>& symmetry_maps() const { return sym_maps_; }

  std::string raw_state_key(const GameState& s) const {
    std::string key;
    key.reserve(n_cells_ + 2);
    for (int idx = 0; idx < n_cells_; ++idx)
      key.push_back(static_cast<char>(s.board.at_index(idx)));
    key.push_back(s.to_move == Player::Alice ? 1 : 2);
    key.push_back(static_cast<char>(s.remaining));
    return key;
  }

  // Larger near the root; used by the transposition table to decide which
  // entries are worth keeping.
  int depth_hint(const GameState& s) const {
    int empties = 0;
    for (int idx = 0; idx < n_cells_; ++idx) empties += (s.board.at_index(idx) == 0);
    return empties;
  }

private:
  // Lexicographically minimal colour-relabelled board over all symmetry maps.
  void append_key_symmetric(const GameState& s, std::string& key) const {
    const auto& bd = s.board.cells();
    std::array<std::uint8_t, 64> best{};
    std::array<std::uint8_t, 32> relab_val{};
    std::array<std::uint16_t, 32> relab_ep{};
    std::uint16_t epoch = 0;
    bool first = true;
    for (const auto& map : sym_maps_) {
      ++epoch;
      std::uint8_t next = 1;
      int cmp = first ? -1 : 0;
      for (int i = 0; i < n_cells_; ++i) {
        const int v = bd[map[i]];
        std::uint8_t cv = 0;
        if (v != 0) {
          if (relab_ep[v] != epoch) {
            relab_ep[v] = epoch;
            relab_val[v] = next++;
          }
          cv = relab_val[v];
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
    key.append(reinterpret_cast<const char*>(best.data()), n_cells_);
    key.push_back(s.to_move == Player::Alice ? 1 : 2);
    key.push_back(static_cast<char>(s.remaining));
  }

  void apply_unchecked(GameState& s, const Move& m) const {
    s.board.set_index(m.cell, m.symbol);
    s.remaining -= 1;
    if (s.remaining == 0) {
      int empties = 0;
      for (int idx = 0; idx < n_cells_; ++idx) empties += (s.board.at_index(idx) == 0);
      s.to_move = other(s.to_move);
      s.remaining = std::min(quota(s.to_move), empties);
    }
  }

  GameConfig cfg_;
  int palette_;
  Isotopism ext_;
  int n_cells_ = 0, d_ = 0;
  std::uint32_t all_colours_ = 0;
  bool canonical_colours_ = false;
  OrbitPartition orbits_;
  std::vector<std::vector<int>> neighbours_;
  std::vector<std::vector<int>> images_;
  std::vector<int> orbit_len_;
  std::vector<std::vector<int>> sym_pow_, sym_pow_inv_;
  std::vector<std::uint32_t> c1_ok_;
  std::vector<std::vector<int>> sym_maps_;
};

}  // namespace lgl
