#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lgl {

/// 1-based coordinates, one per dimension.
using Cell = std::vector<int>;

/// Dimensions n_1 x ... x n_d plus the symbol count n.
struct Shape {
  std::vector<int> dims;
  int symbols = 0;

  Shape() = default;
  Shape(std::vector<int> dims_, int symbols_) : dims(std::move(dims_)), symbols(symbols_) {
    if (dims.empty()) throw std::invalid_argument("Shape: at least one dimension required");
    for (int n : dims)
      if (n < 1) throw std::invalid_argument("Shape: dimensions must be positive");
    if (symbols < 1) throw std::invalid_argument("Shape: symbol count must be positive");
  }

  int dim() const { return static_cast<int>(dims.size()); }

  long long cell_count() const {
    long long c = 1;
    for (int n : dims) c *= n;
    return c;
  }

  bool contains(const Cell& c) const {
    if (static_cast<int>(c.size()) != dim()) return false;
    for (int j = 0; j < dim(); ++j)
      if (c[j] < 1 || c[j] > dims[j]) return false;
    return true;
  }

  // Lexicographic (row-major) flat index; the last coordinate varies fastest.
  int index_of(const Cell& c) const {
    int idx = 0;
    for (int j = 0; j < dim(); ++j) idx = idx * dims[j] + (c[j] - 1);
    return idx;
  }

  Cell cell_at(int idx) const {
    Cell c(dim());
    for (int j = dim() - 1; j >= 0; --j) {
      c[j] = idx % dims[j] + 1;
      idx /= dims[j];
    }
    return c;
  }

  bool operator==(const Shape&) const = default;
};

struct Entry {
  Cell cell;
  int symbol = 0;
  bool operator==(const Entry&) const = default;
  bool operator<(const Entry& o) const {
    return cell != o.cell ? cell < o.cell : symbol < o.symbol;
  }
};

/// A d-dimensional array of optional symbols; 0 marks an empty cell. The
/// palette bound n' >= n leaves room for games played over natural extensions.
class Board {
public:
  Board() = default;

  explicit Board(Shape shape, int palette = 0)
      : shape_(std::move(shape)),
        palette_(palette == 0 ? shape_.symbols : palette),
        cells_(static_cast<std::size_t>(shape_.cell_count()), 0) {
    if (palette_ < shape_.symbols) throw std::invalid_argument("Board: palette below symbol count");
  }

  const Shape& shape() const { return shape_; }
  int palette() const { return palette_; }
  int dim() const { return shape_.dim(); }
  int cell_count() const { return static_cast<int>(cells_.size()); }

  int at_index(int idx) const { return cells_[idx]; }
  int at(const Cell& c) const { return cells_[checked_index(c)]; }
  bool empty_at(const Cell& c) const { return at(c) == 0; }

  void set_index(int idx, int symbol) {
    if (idx < 0 || idx >= cell_count()) throw std::out_of_range("Board: cell index out of range");
    if (symbol < 0 || symbol > palette_) throw std::out_of_range("Board: symbol out of range");
    cells_[idx] = static_cast<std::uint8_t>(symbol);
  }

  void set(const Cell& c, int symbol) { set_index(checked_index(c), symbol); }
  void clear(const Cell& c) { cells_[checked_index(c)] = 0; }

  const std::vector<std::uint8_t>& cells() const { return cells_; }

  int entry_count() const {
    int n = 0;
    for (auto v : cells_) n += (v != 0);
    return n;
  }

  bool is_trivial() const { return entry_count() == 0; }

  std::vector<Entry> entries() const {
    std::vector<Entry> out;
    for (int idx = 0; idx < cell_count(); ++idx)
      if (cells_[idx] != 0) out.push_back({shape_.cell_at(idx), cells_[idx]});
    return out;
  }

  // Palette is capacity metadata and is deliberately not part of equality.
  friend bool operator==(const Board& a, const Board& b) {
    return a.shape_ == b.shape_ && a.cells_ == b.cells_;
  }

private:
  int checked_index(const Cell& c) const {
    if (!shape_.contains(c)) throw std::out_of_range("Board: cell out of range");
    return shape_.index_of(c);
  }

  Shape shape_;
  int palette_ = 0;
  std::vector<std::uint8_t> cells_;
};

// Index maps of the cell-space symmetries: every permutation of equal-sized
// axes combined with every per-axis value permutation. Entry map[dst] is the
// source index whose content lands at dst. Returns an empty list when the
// group would exceed `limit` maps.
inline std::vector<std::vector<int>> cell_symmetry_maps(const Shape& sh, std::size_t limit = 2048) {
  const int d = sh.dim();
  std::vector<int> axes(d);
  for (int j = 0; j < d; ++j) axes[j] = j;
  std::vector<std::vector<int>> axis_perms;
  std::sort(axes.begin(), axes.end());
  do {
    bool ok = true;
    for (int j = 0; j < d; ++j)
      if (sh.dims[axes[j]] != sh.dims[j]) ok = false;
    if (ok) axis_perms.push_back(axes);
  } while (std::next_permutation(axes.begin(), axes.end()));

  std::size_t total = axis_perms.size();
  for (int j = 0; j < d; ++j) {
    std::size_t f = 1;
    for (int v = 2; v <= sh.dims[j]; ++v) f *= v;
    total *= f;
    if (total > limit) return {};
  }

  std::vector<std::vector<std::vector<int>>> value_perms(d);
  for (int j = 0; j < d; ++j) {
    std::vector<int> vals(sh.dims[j]);
    for (int v = 0; v < sh.dims[j]; ++v) vals[v] = v + 1;
    do {
      value_perms[j].push_back(vals);
    } while (std::next_permutation(vals.begin(), vals.end()));
  }

  const int n = static_cast<int>(sh.cell_count());
  std::vector<std::vector<int>> maps;
  maps.reserve(total);
  std::vector<std::size_t> pick(d, 0);
  for (const auto& rho : axis_perms) {
    std::fill(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<int> map(n);
      Cell dst(d);
      for (int src = 0; src < n; ++src) {
        const Cell u = sh.cell_at(src);
        for (int j = 0; j < d; ++j) dst[j] = value_perms[j][pick[j]][u[rho[j]] - 1];
        map[sh.index_of(dst)] = src;
      }
      maps.push_back(std::move(map));
      int j = 0;
      while (j < d && ++pick[j] == value_perms[j].size()) pick[j++] = 0;
      if (j == d) break;
    }
  }
  return maps;
}

/// True iff every line holds each symbol at most once.
inline bool validate_latin(const Board& b) {
  const Shape& sh = b.shape();
  const int d = sh.dim();
  std::vector<char> seen(static_cast<std::size_t>(b.palette()) + 1);
  for (int j = 0; j < d; ++j) {
    const int n_j = sh.dims[j];
    for (int idx = 0; idx < b.cell_count(); ++idx) {
      Cell c = sh.cell_at(idx);
      if (c[j] != 1) continue;  // one representative per line
      std::fill(seen.begin(), seen.end(), 0);
      for (int v = 1; v <= n_j; ++v) {
        c[j] = v;
        const int s = b.at(c);
        if (s != 0) {
          if (seen[s]) return false;
          seen[s] = 1;
        }
      }
    }
  }
  return true;
}

}  // namespace lgl
