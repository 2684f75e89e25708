#pragma once

#include <numeric>
#include <optional>

#include "lgl/board.hpp"
#include "lgl/perm.hpp"

namespace lgl {

/// True iff every (k-1)-subset of the tuple has the same lcm as the whole
/// tuple (membership in the lcm-compatible set C_k).
inline bool lcm_compatible(const std::vector<int>& t) {
  if (t.size() < 2) throw std::invalid_argument("lcm_compatible: need at least two entries");
  long long full = 1;
  for (int v : t) {
    if (v < 1) throw std::invalid_argument("lcm_compatible: entries must be positive");
    full = std::lcm(full, static_cast<long long>(v));
  }
  for (std::size_t skip = 0; skip < t.size(); ++skip) {
    long long l = 1;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (i != skip) l = std::lcm(l, static_cast<long long>(t[i]));
    if (l != full) return false;
  }
  return true;
}

/// One row/column-type permutation per dimension plus a symbol permutation.
/// The symbol permutation may be larger than the shape's symbol count; that is
/// how extensions are represented.
class Isotopism {
public:
  Isotopism(Shape shape, std::vector<Perm> row_perms, Perm sym_perm)
      : shape_(std::move(shape)), row_perms_(std::move(row_perms)), sym_perm_(std::move(sym_perm)) {
    if (static_cast<int>(row_perms_.size()) != shape_.dim())
      throw std::invalid_argument("Isotopism: need one permutation per dimension");
    for (int j = 0; j < shape_.dim(); ++j)
      if (row_perms_[j].size() != shape_.dims[j])
        throw std::invalid_argument("Isotopism: permutation size does not match dimension");
    if (sym_perm_.size() < shape_.symbols)
      throw std::invalid_argument("Isotopism: symbol permutation smaller than symbol count");
    coord_len_.resize(shape_.dim());
    for (int j = 0; j < shape_.dim(); ++j) {
      coord_len_[j].resize(shape_.dims[j]);
      for (int v = 1; v <= shape_.dims[j]; ++v)
        coord_len_[j][v - 1] = cycle_length_at(row_perms_[j], v);
    }
    sym_len_.resize(sym_perm_.size());
    for (int s = 1; s <= sym_perm_.size(); ++s) sym_len_[s - 1] = cycle_length_at(sym_perm_, s);
  }

  const Shape& shape() const { return shape_; }
  int dim() const { return shape_.dim(); }
  int symbol_count() const { return shape_.symbols; }
  int sym_size() const { return sym_perm_.size(); }
  const Perm& row_perm(int j) const { return row_perms_[j]; }
  const std::vector<Perm>& row_perms() const { return row_perms_; }
  const Perm& sym_perm() const { return sym_perm_; }

  bool is_principal() const { return sym_perm_.is_identity(); }

  bool is_trivial() const {
    for (const Perm& p : row_perms_)
      if (!p.is_identity()) return false;
    return sym_perm_.is_identity();
  }

  int coord_cycle_length(int j, int v) const { return coord_len_[j][v - 1]; }
  int symbol_cycle_length(int s) const { return sym_len_[s - 1]; }

  long long cell_orbit_lcm(const Cell& c) const {
    long long l = 1;
    for (int j = 0; j < dim(); ++j) l = std::lcm(l, static_cast<long long>(coord_len_[j][c[j] - 1]));
    return l;
  }

  Cell image_cell(const Cell& c, long long m = 1) const {
    Cell out = c;
    for (long long i = 0; i < m; ++i)
      for (int j = 0; j < dim(); ++j) out[j] = row_perms_[j].apply(out[j]);
    return out;
  }

  int image_symbol(int s, long long m = 1) const {
    for (long long i = 0; i < m; ++i) s = sym_perm_.apply(s);
    return s;
  }

  Isotopism inverse() const {
    std::vector<Perm> rows;
    rows.reserve(row_perms_.size());
    for (const Perm& p : row_perms_) rows.push_back(p.inverse());
    return Isotopism(shape_, std::move(rows), sym_perm_.inverse());
  }

  bool operator==(const Isotopism& o) const {
    return shape_ == o.shape_ && row_perms_ == o.row_perms_ && sym_perm_ == o.sym_perm_;
  }

private:
  Shape shape_;
  std::vector<Perm> row_perms_;
  Perm sym_perm_;
  std::vector<std::vector<int>> coord_len_;  // per dimension, per value
  std::vector<int> sym_len_;
};

inline Isotopism trivial_isotopism(std::vector<int> dims, int symbols) {
  std::vector<Perm> rows;
  rows.reserve(dims.size());
  for (int n : dims) rows.push_back(Perm::identity(n));
  return Isotopism(Shape(std::move(dims), symbols), std::move(rows), Perm::identity(symbols));
}

/// Componentwise cycle structure; the symbol component comes last.
struct IsoCycleStructure {
  std::vector<CycleStructure> components;

  bool operator==(const IsoCycleStructure&) const = default;

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (i) out += ", ";
      out += components[i].to_string();
    }
    return out + ")";
  }
};

inline IsoCycleStructure cycle_structure(const Isotopism& t) {
  IsoCycleStructure out;
  for (int j = 0; j < t.dim(); ++j) out.components.push_back(cycle_structure(t.row_perm(j)));
  out.components.push_back(cycle_structure(t.sym_perm()));
  return out;
}

// The trajectory of a cell under the repeated row-permutation action. The
// returned list starts at the cell itself and has exactly lcm(cycle lengths)
// pairwise-distinct members; the symbol permutation plays no role.
inline std::vector<Cell> cell_orbit(const Isotopism& t, const Cell& c) {
  if (!t.shape().contains(c)) throw std::out_of_range("cell_orbit: cell out of range");
  const long long L = t.cell_orbit_lcm(c);
  std::vector<Cell> orbit;
  orbit.reserve(static_cast<std::size_t>(L));
  Cell cur = c;
  for (long long m = 0; m < L; ++m) {
    orbit.push_back(cur);
    cur = t.image_cell(cur, 1);
  }
  return orbit;
}

/// Partition of the whole cell space into orbits. Orbit ids are assigned by
/// the lexicographically smallest member cell; members are sorted ascending.
struct OrbitPartition {
  std::vector<std::vector<int>> orbits;  // flat cell indices
  std::vector<int> orbit_of;             // flat cell index -> orbit id

  int size() const { return static_cast<int>(orbits.size()); }
};

inline OrbitPartition orbit_partition(const Isotopism& t) {
  const Shape& sh = t.shape();
  const int n = static_cast<int>(sh.cell_count());
  OrbitPartition part;
  part.orbit_of.assign(n, -1);
  for (int idx = 0; idx < n; ++idx) {
    if (part.orbit_of[idx] != -1) continue;
    const int id = part.size();
    std::vector<int> members;
    for (const Cell& c : cell_orbit(t, sh.cell_at(idx))) {
      const int ci = sh.index_of(c);
      part.orbit_of[ci] = id;
      members.push_back(ci);
    }
    std::sort(members.begin(), members.end());
    part.orbits.push_back(std::move(members));
  }
  return part;
}

enum class OrbitStatus { SymbolFree, Marked, Complete };

inline OrbitStatus orbit_status(const Board& b, const std::vector<int>& orbit_cells) {
  int filled = 0;
  for (int idx : orbit_cells) filled += (b.at_index(idx) != 0);
  if (filled == 0) return OrbitStatus::SymbolFree;
  return filled == static_cast<int>(orbit_cells.size()) ? OrbitStatus::Complete : OrbitStatus::Marked;
}

// Closure of a single entry under the isotopism action. Absent when the
// cycle-length tuple is not lcm-compatible, in which case the entry cannot
// appear in any board fixed by the isotopism.
inline std::optional<std::vector<Entry>> entry_closure(const Isotopism& t, const Entry& e) {
  if (!t.shape().contains(e.cell)) throw std::out_of_range("entry_closure: cell out of range");
  if (e.symbol < 1 || e.symbol > t.sym_size())
    throw std::out_of_range("entry_closure: symbol out of range");
  std::vector<int> lens;
  lens.reserve(t.dim() + 1);
  for (int j = 0; j < t.dim(); ++j) lens.push_back(t.coord_cycle_length(j, e.cell[j]));
  lens.push_back(t.symbol_cycle_length(e.symbol));
  if (!lcm_compatible(lens)) return std::nullopt;
  long long L = 1;
  for (int l : lens) L = std::lcm(L, static_cast<long long>(l));
  std::vector<Entry> out;
  out.reserve(static_cast<std::size_t>(L));
  Entry cur = e;
  for (long long m = 0; m < L; ++m) {
    out.push_back(cur);
    cur.cell = t.image_cell(cur.cell, 1);
    cur.symbol = t.image_symbol(cur.symbol, 1);
  }
  return out;
}

/// True iff every realizable cycle-length tuple across dimensions and symbols
/// is lcm-compatible; iterates distinct lengths, not cells.
inline bool is_feasible(const Isotopism& t) {
  std::vector<std::vector<int>> lens;
  lens.reserve(t.dim() + 1);
  for (int j = 0; j < t.dim(); ++j) lens.push_back(cycle_structure(t.row_perm(j)).distinct_lengths());
  lens.push_back(cycle_structure(t.sym_perm()).distinct_lengths());

  std::vector<std::size_t> pick(lens.size(), 0);
  while (true) {
    std::vector<int> tuple(lens.size());
    for (std::size_t i = 0; i < lens.size(); ++i) tuple[i] = lens[i][pick[i]];
    if (!lcm_compatible(tuple)) return false;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == lens[i].size()) pick[i++] = 0;
    if (i == pick.size()) return true;
  }
}

// Extension of the symbol permutation to size n', agreeing with it on the
// current domain and fixing every new symbol.
inline Isotopism natural_extension(const Isotopism& t, int n_prime) {
  if (n_prime < t.sym_size())
    throw std::invalid_argument("natural_extension: target size below current size");
  if (n_prime == t.sym_size()) return t;
  std::vector<int> img(n_prime);
  for (int s = 1; s <= t.sym_size(); ++s) img[s - 1] = t.sym_perm().apply(s);
  for (int s = t.sym_size() + 1; s <= n_prime; ++s) img[s - 1] = s;
  return Isotopism(t.shape(), t.row_perms(), Perm(std::move(img)));
}

// Extendable = every natural extension is feasible. Feasibility of the
// one-larger extension settles all larger ones, so a single check suffices.
inline bool is_extendable(const Isotopism& t) {
  return is_feasible(natural_extension(t, t.sym_size() + 1));
}

/// Componentwise q_i ∘ p_i ∘ q_i⁻¹.
inline Isotopism conjugate(const Isotopism& p, const Isotopism& q) {
  if (p.shape().dims != q.shape().dims || p.sym_size() != q.sym_size())
    throw std::invalid_argument("conjugate: component sizes differ");
  std::vector<Perm> rows;
  rows.reserve(p.dim());
  for (int j = 0; j < p.dim(); ++j) rows.push_back(conjugate(p.row_perm(j), q.row_perm(j)));
  return Isotopism(p.shape(), std::move(rows), conjugate(p.sym_perm(), q.sym_perm()));
}

/// Componentwise conjugation witness; absent when some component pair has
/// differing cycle structures.
inline std::optional<Isotopism> conjugation_witness(const Isotopism& t1, const Isotopism& t2) {
  if (t1.shape().dims != t2.shape().dims || t1.sym_size() != t2.sym_size())
    throw std::invalid_argument("conjugation_witness: component sizes differ");
  std::vector<Perm> rows;
  rows.reserve(t1.dim());
  for (int j = 0; j < t1.dim(); ++j) {
    auto w = conjugation_witness(t1.row_perm(j), t2.row_perm(j));
    if (!w) return std::nullopt;
    rows.push_back(std::move(*w));
  }
  auto ws = conjugation_witness(t1.sym_perm(), t2.sym_perm());
  if (!ws) return std::nullopt;
  return Isotopism(t1.shape(), std::move(rows), std::move(*ws));
}

// ---------------------------------------------------------------------------
// Action on boards.

inline Board apply_isotopism(const Board& b, const Isotopism& t) {
  if (b.shape().dims != t.shape().dims)
    throw std::invalid_argument("apply_isotopism: dimension mismatch");
  const int palette = std::max(b.palette(), t.sym_size());
  Board out(b.shape(), palette);
  for (int idx = 0; idx < b.cell_count(); ++idx) {
    const int s = b.at_index(idx);
    if (s == 0) continue;
    if (s > t.sym_size())
      throw std::invalid_argument("apply_isotopism: entry symbol outside permutation domain");
    out.set(t.image_cell(b.shape().cell_at(idx)), t.sym_perm().apply(s));
  }
  return out;
}

// Θ-compatibility: the cycle-length tuple of every non-empty cell is
// lcm-compatible, and every non-empty image of a non-empty cell carries the
// corresponding symbol image. The orbit relation is periodic, so powers up to
// the cell-orbit lcm cover all of them.
inline bool is_theta_compatible(const Board& b, const Isotopism& t) {
  if (b.shape().dims != t.shape().dims)
    throw std::invalid_argument("is_theta_compatible: dimension mismatch");
  const Shape& sh = b.shape();
  for (int idx = 0; idx < b.cell_count(); ++idx) {
    const int s = b.at_index(idx);
    if (s == 0) continue;
    if (s > t.sym_size())
      throw std::invalid_argument("is_theta_compatible: entry symbol outside permutation domain");
    const Cell c = sh.cell_at(idx);
    std::vector<int> lens;
    lens.reserve(t.dim() + 1);
    for (int j = 0; j < t.dim(); ++j) lens.push_back(t.coord_cycle_length(j, c[j]));
    lens.push_back(t.symbol_cycle_length(s));
    if (!lcm_compatible(lens)) return false;
  }
  for (int idx = 0; idx < b.cell_count(); ++idx) {
    const int s = b.at_index(idx);
    if (s == 0) continue;
    const Cell c = sh.cell_at(idx);
    const long long L = t.cell_orbit_lcm(c);
    Cell cur = c;
    int sym = s;
    for (long long m = 1; m < L; ++m) {
      cur = t.image_cell(cur, 1);
      sym = t.image_symbol(sym, 1);
      const int there = b.at(cur);
      if (there != 0 && there != sym) return false;
    }
  }
  return true;
}

/// Membership in the set of non-trivial boards fixed by the isotopism.
inline bool is_member(const Board& b, const Isotopism& t) {
  if (b.shape().dims != t.shape().dims) throw std::invalid_argument("is_member: dimension mismatch");
  if (b.is_trivial()) return false;
  if (!validate_latin(b)) return false;
  for (int idx = 0; idx < b.cell_count(); ++idx)
    if (b.at_index(idx) > t.sym_size()) return false;
  return apply_isotopism(b, t) == b;
}

}  // namespace lgl
