#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lgl {

/// A permutation of {1,...,m}, stored in one-line form.
class Perm {
public:
  Perm() = default;

  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    const int m = static_cast<int>(img_.size());
    if (m == 0) throw std::invalid_argument("Perm: empty image list");
    std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
    for (int v : img_) {
      if (v < 1 || v > m || seen[v]) throw std::invalid_argument("Perm: not a bijection on {1..m}");
      seen[v] = 1;
    }
    inv_.assign(m, 0);
    for (int s = 1; s <= m; ++s) inv_[img_[s - 1] - 1] = s;
  }

  static Perm identity(int m) {
    if (m < 1) throw std::invalid_argument("Perm: size must be positive");
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 1);
    return Perm(std::move(img));
  }

  // Cycles as value lists, e.g. {{1,2},{3,4}}; omitted elements are fixed points.
  static Perm from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
    if (m < 1) throw std::invalid_argument("Perm: size must be positive");
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 1);
    std::vector<char> used(static_cast<std::size_t>(m) + 1, 0);
    for (const auto& cyc : cycles) {
      for (int v : cyc) {
        if (v < 1 || v > m) throw std::invalid_argument("Perm: cycle element out of range");
        if (used[v]) throw std::invalid_argument("Perm: repeated element across cycles");
        used[v] = 1;
      }
      for (std::size_t i = 0; i < cyc.size(); ++i)
        img[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
    }
    return Perm(std::move(img));
  }

  int size() const { return static_cast<int>(img_.size()); }
  int apply(int s) const { return img_[s - 1]; }
  int operator()(int s) const { return img_[s - 1]; }
  int apply_inverse(int s) const { return inv_[s - 1]; }

  Perm inverse() const {
    Perm p;
    p.img_ = inv_;
    p.inv_ = img_;
    return p;
  }

  // Composition applies the right factor first: (f.compose(g))(s) == f(g(s)).
  Perm compose(const Perm& g) const {
    if (size() != g.size()) throw std::invalid_argument("Perm: size mismatch in compose");
    std::vector<int> img(size());
    for (int s = 1; s <= size(); ++s) img[s - 1] = apply(g.apply(s));
    return Perm(std::move(img));
  }

  Perm power(long long k) const {
    Perm invp;
    const Perm* base = this;
    if (k < 0) {
      invp = inverse();
      base = &invp;
      k = -k;
    }
    std::vector<int> img(size());
    for (int s = 1; s <= size(); ++s) {
      int v = s;
      for (long long i = 0; i < k; ++i) v = base->apply(v);
      img[s - 1] = v;
    }
    return Perm(std::move(img));
  }

  bool is_identity() const {
    for (int s = 1; s <= size(); ++s)
      if (img_[s - 1] != s) return false;
    return true;
  }

  // Disjoint cycles, each starting at its smallest element, sorted by
  // (length, smallest element). Fixed points are reported only on request.
  std::vector<std::vector<int>> cycles(bool include_fixed = false) const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(static_cast<std::size_t>(size()) + 1, 0);
    for (int s = 1; s <= size(); ++s) {
      if (seen[s]) continue;
      std::vector<int> cyc;
      int v = s;
      do {
        cyc.push_back(v);
        seen[v] = 1;
        v = apply(v);
      } while (v != s);
      if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a.front() < b.front();
    });
    return out;
  }

  bool operator==(const Perm&) const = default;

private:
  std::vector<int> img_, inv_;
};

/// Multiset of cycle lengths, e.g. {3:2, 1:1} for (123)(4)(567).
struct CycleStructure {
  std::map<int, int> counts;  // length -> multiplicity; only positive entries

  bool operator==(const CycleStructure&) const = default;

  int total_weight() const {
    int w = 0;
    for (auto [l, k] : counts) w += l * k;
    return w;
  }

  std::vector<int> distinct_lengths() const {
    std::vector<int> out;
    out.reserve(counts.size());
    for (auto [l, k] : counts) out.push_back(l);
    return out;
  }

  // "3^2 1" for {3:2, 1:1}; lengths in descending order, exponent 1 omitted.
  std::string to_string() const {
    std::string out;
    for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
      if (!out.empty()) out += ' ';
      out += std::to_string(it->first);
      if (it->second > 1) {
        out += '^';
        out += std::to_string(it->second);
      }
    }
    return out;
  }
};

inline CycleStructure cycle_structure(const Perm& p) {
  CycleStructure cs;
  for (const auto& cyc : p.cycles(true)) cs.counts[static_cast<int>(cyc.size())]++;
  return cs;
}

/// Length of the cycle of p containing s.
inline int cycle_length_at(const Perm& p, int s) {
  if (s < 1 || s > p.size()) throw std::out_of_range("cycle_length_at: symbol out of range");
  int len = 1;
  for (int v = p.apply(s); v != s; v = p.apply(v)) ++len;
  return len;
}

/// q ∘ p ∘ q⁻¹.
inline Perm conjugate(const Perm& p, const Perm& q) { return q.compose(p).compose(q.inverse()); }

// Some q with p2 == q ∘ p1 ∘ q⁻¹, built by aligning the cycle lists of p1 and
// p2 sorted by (length, smallest element). Absent when the cycle structures
// differ, which is exactly when no witness exists.
inline std::optional<Perm> conjugation_witness(const Perm& p1, const Perm& p2) {
  if (p1.size() != p2.size()) throw std::invalid_argument("conjugation_witness: size mismatch");
  if (!(cycle_structure(p1) == cycle_structure(p2))) return std::nullopt;
  const auto c1 = p1.cycles(true);
  const auto c2 = p2.cycles(true);
  std::vector<int> img(p1.size());
  for (std::size_t i = 0; i < c1.size(); ++i)
    for (std::size_t j = 0; j < c1[i].size(); ++j) img[c1[i][j] - 1] = c2[i][j];
  return Perm(std::move(img));
}

// Text form "(1 2)(3 4)"; elements split on spaces or commas, fixed points may
// be omitted, "()" and blank both parse to the identity.
inline Perm parse_perm_cycles(int m, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("cycle notation: expected '('");
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw std::invalid_argument("cycle notation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("cycle notation: expected element");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      cyc.push_back(v);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return Perm::from_cycles(m, cycles);
}

inline std::string format_perm_cycles(const Perm& p) {
  const auto cycles = p.cycles(false);
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cyc : cycles) {
    out += '(';
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(cyc[j]);
    }
    out += ')';
  }
  return out;
}

}  // namespace lgl
