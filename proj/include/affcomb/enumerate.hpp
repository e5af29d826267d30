#pragma once

// Admissibility of colored partitions (difference conditions), enumeration of
// the resulting basis candidates, and their graded counts.

#include "affcomb/ident.hpp"
#include "affcomb/leading.hpp"
#include "affcomb/partitions.hpp"
#include "affcomb/rootdata.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace affcomb {

/// fs: grade-one subspace W(k Lambda_0) of C_rank, colors in B_1(C_rank).
/// std: standard module L(k Lambda_0) of C_rank, colors in B(C_rank).
struct BasisKind {
  enum Kind { Fs, Std };
  Kind kind = Fs;
  int rank = 1;
  int level = 1;

  BasisKind(Kind kd, int r, int k) : kind(kd), rank(r), level(k) {
    if (r < 1) throw std::invalid_argument("rank must be >= 1");
    if (k < 1) throw std::invalid_argument("level must be >= 1");
  }
  static BasisKind fs(int r, int k) { return BasisKind(Fs, r, k); }
  static BasisKind standard(int r, int k) { return BasisKind(Std, r, k); }

  Alphabet alphabet() const { return kind == Fs ? Alphabet::upper(rank) : Alphabet::full(rank); }
  std::string kind_name() const { return kind == Fs ? "fs" : "std"; }
};

inline BasisKind::Kind parse_kind(const std::string& s) {
  if (s == "fs") return BasisKind::Fs;
  if (s == "std") return BasisKind::Std;
  throw std::invalid_argument("unknown basis kind '" + s + "'");
}

/// Multiplicities m_{c;d} of color c at degree -d for d = 1..depth.
class MultiplicityGrid {
 public:
  MultiplicityGrid(Alphabet alphabet, int depth)
      : alphabet_(alphabet),
        colors_(alphabet.size()),
        depth_(depth),
        counts_(static_cast<std::size_t>((depth + 2) * alphabet.size()), 0),
        layer_totals_(static_cast<std::size_t>(depth + 2), 0) {}

  static MultiplicityGrid of(const ColoredPartition& p) {
    if (!p.strictly_negative()) {
      throw std::invalid_argument("partition " + p.str() + " has a non-negative degree");
    }
    MultiplicityGrid g(p.alphabet(), -p.min_degree());
    for (const auto& f : p.factors()) g.add(-f.degree, f.color.position(), 1);
    return g;
  }

  const Alphabet& alphabet() const { return alphabet_; }
  int colors() const { return colors_; }
  int depth() const { return depth_; }

  int at(int d, int pos) const {
    if (d < 1 || d > depth_ + 1) return 0;
    return counts_[index(d, pos)];
  }
  int layer_total(int d) const {
    if (d < 1 || d > depth_ + 1) return 0;
    return layer_totals_[static_cast<std::size_t>(d)];
  }

  void add(int d, int pos, int delta) {
    counts_[index(d, pos)] = static_cast<std::uint16_t>(counts_[index(d, pos)] + delta);
    layer_totals_[static_cast<std::size_t>(d)] += delta;
  }

  ColoredPartition to_partition() const {
    std::vector<Factor> factors;
    for (int d = depth_; d >= 1; --d) {
      for (int pos = 0; pos < colors_; ++pos) {
        const int c = at(d, pos);
        if (c) factors.insert(factors.end(), static_cast<std::size_t>(c),
                              Factor{Color::from_position(alphabet_, pos), -d});
      }
    }
    return ColoredPartition(alphabet_, std::move(factors));
  }

 private:
  std::size_t index(int d, int pos) const { return static_cast<std::size_t>(d * colors_ + pos); }

  Alphabet alphabet_;
  int colors_;
  int depth_;
  std::vector<std::uint16_t> counts_;
  std::vector<int> layer_totals_;
};

namespace detail {

inline void check_basis_input(const ColoredPartition& pi, const BasisKind& basis) {
  if (!(pi.alphabet() == basis.alphabet())) {
    throw std::invalid_argument("partition over " + pi.alphabet().name() + " used with " +
                                basis.kind_name() + " basis over " + basis.alphabet().name());
  }
  if (!pi.strictly_negative()) {
    throw std::invalid_argument("partition " + pi.str() + " has a non-negative degree");
  }
}

}  // namespace detail

/// pi is admissible iff no leading term divides it.
///
/// Leading terms are stored relative to their window and scanned for every
/// window d = 1..depth (a term entirely at -d only needs depth >= d).
class DivisibilityChecker {
 public:
  explicit DivisibilityChecker(const BasisKind& basis) : level_(basis.level) {
    const DegreeWindow w(1);
    const auto terms = basis.kind == BasisKind::Fs
                           ? leading_terms_by_multiset(basis.rank, basis.level, w)
                           : std_leading_terms(basis.rank, basis.level, w);
    for (const auto& t : terms) {
      CompiledTerm ct;
      for (const auto& f : t.factors()) {
        const int offset = f.degree == w.upper() ? 0 : 1;
        const int pos = f.color.position();
        if (!ct.entries.empty() && ct.entries.back().offset == offset &&
            ct.entries.back().pos == pos) {
          ++ct.entries.back().exponent;
        } else {
          ct.entries.push_back({offset, pos, 1});
        }
      }
      terms_.push_back(std::move(ct));
    }
  }

  std::size_t term_count() const { return terms_.size(); }

  bool window_ok(const MultiplicityGrid& g, int d) const {
    if (g.layer_total(d) + g.layer_total(d + 1) <= level_) return true;
    for (const auto& t : terms_) {
      bool divides_grid = true;
      for (const auto& e : t.entries) {
        if (g.at(d + e.offset, e.pos) < e.exponent) {
          divides_grid = false;
          break;
        }
      }
      if (divides_grid) return false;
    }
    return true;
  }

  bool admissible(const MultiplicityGrid& g) const {
    for (int d = 1; d <= g.depth(); ++d) {
      if (!window_ok(g, d)) return false;
    }
    return true;
  }

  /// Only the windows touching depth d.
  bool admissible_near(const MultiplicityGrid& g, int d) const {
    return window_ok(g, d) && (d < 2 || window_ok(g, d - 1));
  }

 private:
  struct Entry {
    int offset;
    int pos;
    int exponent;
  };
  struct CompiledTerm {
    std::vector<Entry> entries;
  };

  int level_;
  std::vector<CompiledTerm> terms_;
};

/// pi is admissible iff every diagonal-path sum of multiplicities over every
/// window is at most k.
///
/// The maximal path sum is found by dynamic programming: a block is a chain of
/// nested intervals, the best chain inside [i, j] is
/// w(i,j) + max(best[i+1, j], best[i, j-1]), and the two blocks are separated
/// by a cut x with block one inside [1, x] and block two inside [x, m].
/// Std partitions are checked through the identification with B_1(C_{2l}),
/// which leaves grid positions unchanged.
class InequalityChecker {
 public:
  explicit InequalityChecker(const BasisKind& basis)
      : level_(basis.level), m_(basis.kind == BasisKind::Fs ? basis.rank : 2 * basis.rank) {
    const Alphabet upper = Alphabet::upper(m_);
    pos_.assign(static_cast<std::size_t>(m_ * m_), -1);
    for (int i = 1; i <= m_; ++i) {
      for (int j = i; j <= m_; ++j) pos_[cell(i, j)] = Color(upper, i, j).position();
    }
    low_.assign(static_cast<std::size_t>(m_ * m_), 0);
    high_.assign(static_cast<std::size_t>(m_ * m_), 0);
  }

  /// Largest path sum of multiplicities at degrees -d-1 (first block) and -d.
  int max_path_sum(const MultiplicityGrid& g, int d) const {
    fill(g, d + 1, low_);
    fill(g, d, high_);
    int best = 0;
    for (int x = 1; x <= m_; ++x) {
      best = std::max(best, low_[cell(1, x)] + high_[cell(x, m_)]);
    }
    return best;
  }

  bool window_ok(const MultiplicityGrid& g, int d) const {
    if (g.layer_total(d) + g.layer_total(d + 1) <= level_) return true;
    return max_path_sum(g, d) <= level_;
  }

  bool admissible(const MultiplicityGrid& g) const {
    for (int d = 1; d <= g.depth(); ++d) {
      if (!window_ok(g, d)) return false;
    }
    return true;
  }

  bool admissible_near(const MultiplicityGrid& g, int d) const {
    return window_ok(g, d) && (d < 2 || window_ok(g, d - 1));
  }

 private:
  std::size_t cell(int i, int j) const { return static_cast<std::size_t>((i - 1) * m_ + (j - 1)); }

  // best[i][j] = heaviest nested chain of intervals inside [i, j]
  void fill(const MultiplicityGrid& g, int depth, std::vector<int>& best) const {
    for (int len = 0; len < m_; ++len) {
      for (int i = 1; i + len <= m_; ++i) {
        const int j = i + len;
        int inner = 0;
        if (len > 0) inner = std::max(best[cell(i + 1, j)], best[cell(i, j - 1)]);
        best[cell(i, j)] = g.at(depth, pos_[cell(i, j)]) + inner;
      }
    }
  }

  int level_;
  int m_;
  std::vector<int> pos_;
  mutable std::vector<int> low_;
  mutable std::vector<int> high_;
};

inline bool admissible_by_divisibility(const ColoredPartition& pi, const BasisKind& basis) {
  detail::check_basis_input(pi, basis);
  return DivisibilityChecker(basis).admissible(MultiplicityGrid::of(pi));
}

/// Fs bases only; std partitions go through transport first (see
/// admissible_std_by_inequalities).
inline bool admissible_by_inequalities(const ColoredPartition& pi, const BasisKind& basis) {
  if (basis.kind != BasisKind::Fs) {
    throw std::invalid_argument("inequality check is defined on fs bases only");
  }
  detail::check_basis_input(pi, basis);
  return InequalityChecker(basis).admissible(MultiplicityGrid::of(pi));
}

/// Inverse transport into B_1(C_{2l}) followed by the fs inequality check.
inline bool admissible_std_by_inequalities(const ColoredPartition& pi, int ell, int k) {
  detail::check_basis_input(pi, BasisKind::standard(ell, k));
  std::vector<Factor> factors;
  const Alphabet upper = Alphabet::upper(2 * ell);
  for (const auto& f : pi.factors()) {
    const auto [i, j] = iota_inverse(f.color, ell);
    factors.push_back(Factor{Color(upper, i, j), f.degree});
  }
  return admissible_by_inequalities(ColoredPartition(upper, std::move(factors)),
                                    BasisKind::fs(2 * ell, k));
}

/// Depth-first walk over every partition in P_{<0} of the alphabet with
/// |degree| <= max_degree. `accept(grid, d)` is asked after factors at depth d
/// are added; a rejection prunes all extensions, so it must be upward closed.
template <class Accept, class Visit>
void walk_partitions(Alphabet alphabet, int max_degree, Accept&& accept, Visit&& visit) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be >= 0");
  MultiplicityGrid grid(alphabet, max_degree);
  const int colors = alphabet.size();
  auto rec = [&](auto& self, int d, int pos, int remaining, int weight) -> void {
    if (pos == colors) {
      ++d;
      pos = 0;
    }
    if (d > remaining) {
      visit(static_cast<const MultiplicityGrid&>(grid), weight);
      return;
    }
    self(self, d, pos + 1, remaining, weight);
    int placed = 0;
    while (remaining - (placed + 1) * d >= 0) {
      grid.add(d, pos, 1);
      ++placed;
      if (!accept(static_cast<const MultiplicityGrid&>(grid), d)) break;
      self(self, d, pos + 1, remaining - placed * d, weight + placed * d);
    }
    grid.add(d, pos, -placed);
  };
  rec(rec, 1, 0, max_degree, 0);
}

enum class Checker { Default, Divisibility, Inequalities };

/// Admissible partitions grouped by |degree|, each layer in ascending order.
struct BasisLayers {
  BasisKind basis;
  int max_degree = 0;
  std::vector<std::vector<ColoredPartition>> layers;

  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& l : layers) n += l.size();
    return n;
  }
};

namespace detail {

/// Fs bases default to the inequality system, std bases to divisibility by
/// transported leading terms.
template <class F>
void with_checker(const BasisKind& basis, Checker checker, F&& f) {
  if (checker == Checker::Default) {
    checker = basis.kind == BasisKind::Fs ? Checker::Inequalities : Checker::Divisibility;
  }
  if (checker == Checker::Divisibility) {
    f(DivisibilityChecker(basis));
  } else {
    f(InequalityChecker(basis));
  }
}

}  // namespace detail

template <class Visit>
void for_each_admissible(const BasisKind& basis, int max_degree, Checker checker, Visit&& visit) {
  detail::with_checker(basis, checker, [&](const auto& check) {
    walk_partitions(
        basis.alphabet(), max_degree,
        [&](const MultiplicityGrid& g, int d) { return check.admissible_near(g, d); }, visit);
  });
}

inline BasisLayers enumerate_basis(const BasisKind& basis, int max_degree,
                                   Checker checker = Checker::Default) {
  BasisLayers out{basis, max_degree, std::vector<std::vector<ColoredPartition>>(
                                         static_cast<std::size_t>(max_degree + 1))};
  for_each_admissible(basis, max_degree, checker, [&](const MultiplicityGrid& g, int weight) {
    out.layers[static_cast<std::size_t>(weight)].push_back(g.to_partition());
  });
  for (auto& layer : out.layers) std::sort(layer.begin(), layer.end(), PartitionLess{});
  return out;
}

/// Truncated power series; coeffs[m] is the coefficient of q^m.
struct QSeries {
  std::vector<BigInt> coeffs;

  int truncation() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const QSeries&, const QSeries&) = default;
};

inline QSeries graded_series(const BasisKind& basis, int max_degree,
                             Checker checker = Checker::Default) {
  std::vector<unsigned long long> counts(static_cast<std::size_t>(max_degree + 1), 0);
  for_each_admissible(basis, max_degree, checker, [&](const MultiplicityGrid&, int weight) {
    ++counts[static_cast<std::size_t>(weight)];
  });
  QSeries s;
  for (auto c : counts) s.coeffs.emplace_back(c);
  return s;
}

/// (sum_{m in Z} q^{m^2}) / prod_{n >= 1} (1 - q^n), truncated at q^N.
inline QSeries character_oracle_a1_level1(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("truncation must be >= 0");
  const auto size = static_cast<std::size_t>(max_degree + 1);
  std::vector<BigInt> theta(size, 0);
  for (long m = 0; m * m <= max_degree; ++m) theta[static_cast<std::size_t>(m * m)] += m ? 2 : 1;
  std::vector<BigInt> partitions(size, 0);
  partitions[0] = 1;
  for (std::size_t n = 1; n < size; ++n) {
    for (std::size_t i = n; i < size; ++i) partitions[i] += partitions[i - n];
  }
  QSeries s;
  s.coeffs.assign(size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    if (theta[i] == 0) continue;
    for (std::size_t j = 0; i + j < size; ++j) s.coeffs[i + j] += theta[i] * partitions[j];
  }
  return s;
}

struct RrRow {
  int m = 0;
  BigInt congruence;  // parts = +-1 mod 5
  BigInt difference;  // f_j + f_{j+1} <= 1
};

inline std::vector<RrRow> rr_counts(int max_m) {
  if (max_m < 1) throw std::invalid_argument("rr_counts needs M >= 1");
  const auto size = static_cast<std::size_t>(max_m + 1);
  std::vector<BigInt> cong(size, 0);
  cong[0] = 1;
  for (int part = 1; part <= max_m; ++part) {
    if (part % 5 != 1 && part % 5 != 4) continue;
    for (std::size_t i = static_cast<std::size_t>(part); i < size; ++i) {
      cong[i] += cong[i - static_cast<std::size_t>(part)];
    }
  }
  // gap[n][j]: partitions of n with parts <= j, consecutive parts differing by >= 2
  std::vector<std::vector<BigInt>> gap(size, std::vector<BigInt>(size, 0));
  for (std::size_t j = 0; j < size; ++j) gap[0][j] = 1;
  for (std::size_t n = 1; n < size; ++n) {
    for (std::size_t j = 1; j < size; ++j) {
      gap[n][j] = gap[n][j - 1];
      if (j <= n) gap[n][j] += gap[n - j][j >= 2 ? j - 2 : 0];
    }
  }
  std::vector<RrRow> rows;
  for (int m = 1; m <= max_m; ++m) {
    const auto i = static_cast<std::size_t>(m);
    rows.push_back({m, cong[i], gap[i][i]});
  }
  return rows;
}

}  // namespace affcomb
