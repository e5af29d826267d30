#pragma once

// Closed-form leading terms of relations at level k.
//
// Every leading term is supported on a window of degrees {-d-1, -d}, d >= 1.
// Two independent descriptions are provided:
//   * diagonal paths in B_1(C_m) with positive exponents summing to k+1
//     (fs_leading_terms), and
//   * one term per multiset of 2(k+1) indices and degree split, obtained by
//     nested pairing of the sorted multiset (leading_term_for_multiset).

#include "affcomb/ident.hpp"
#include "affcomb/partitions.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affcomb {

using IndexPair = std::pair<int, int>;

/// Multiplicities (m_1, ..., m_m) of a multiset over {1..m}.
using Multiset = std::vector<int>;

struct DegreeWindow {
  int d;

  explicit DegreeWindow(int depth) : d(depth) {
    if (depth < 1) throw std::invalid_argument("degree window must satisfy d >= 1");
  }
  int upper() const { return -d; }
  int lower() const { return -d - 1; }
};

/// Chain of index pairs; the first `split` pairs sit at degree -d-1 and the
/// rest at -d.
struct DiagonalPath {
  std::vector<IndexPair> pairs;
  int split = 0;

  std::size_t size() const { return pairs.size(); }

  /// i_1 <= .. <= i_t <= j_t <= .. <= j_1 <= i_{t+1} <= .. <= i_s <= j_s <= .. <= j_{t+1},
  /// with consecutive pairs distinct inside each degree block.
  bool is_valid(int m) const {
    const int s = static_cast<int>(pairs.size());
    if (split < 0 || split > s) return false;
    for (const auto& [i, j] : pairs) {
      if (i < 1 || i > j || j > m) return false;
    }
    auto block_ok = [&](int from, int to) {
      for (int p = from; p + 1 < to; ++p) {
        const auto& [i0, j0] = pairs[static_cast<std::size_t>(p)];
        const auto& [i1, j1] = pairs[static_cast<std::size_t>(p + 1)];
        if (i1 < i0 || j1 > j0 || (i0 == i1 && j0 == j1)) return false;
      }
      return true;
    };
    if (!block_ok(0, split) || !block_ok(split, s)) return false;
    if (split > 0 && split < s) {
      if (pairs[0].second > pairs[static_cast<std::size_t>(split)].first) return false;
    }
    return true;
  }

  friend bool operator==(const DiagonalPath&, const DiagonalPath&) = default;
};

namespace detail {

// Nested chains of distinct intervals inside [1, m], outermost first.
inline void nested_chains(int m, std::size_t max_len, std::vector<IndexPair>& chain,
                          std::vector<std::vector<IndexPair>>& out) {
  out.push_back(chain);
  if (chain.size() == max_len) return;
  const int lo = chain.empty() ? 1 : chain.back().first;
  const int hi = chain.empty() ? m : chain.back().second;
  for (int i = lo; i <= hi; ++i) {
    for (int j = hi; j >= i; --j) {
      if (!chain.empty() && i == chain.back().first && j == chain.back().second) continue;
      chain.emplace_back(i, j);
      nested_chains(m, max_len, chain, out);
      chain.pop_back();
    }
  }
}

// Compositions of total into parts >= 1, one per slot.
inline void positive_compositions(int total, std::size_t slots, std::vector<int>& parts,
                                  const std::function<void(const std::vector<int>&)>& f) {
  if (parts.size() + 1 == slots) {
    if (total >= 1) {
      parts.push_back(total);
      f(parts);
      parts.pop_back();
    }
    return;
  }
  const int remaining_slots = static_cast<int>(slots - parts.size()) - 1;
  for (int x = 1; x <= total - remaining_slots; ++x) {
    parts.push_back(x);
    positive_compositions(total - x, slots, parts, f);
    parts.pop_back();
  }
}

}  // namespace detail

/// Visits every nonempty diagonal path over indices 1..m with at most
/// max_pairs pairs, each exactly once. The path does not depend on the window.
template <class F>
void for_each_diagonal_path(int m, std::size_t max_pairs, F&& visit) {
  if (m < 1) throw std::invalid_argument("diagonal paths need m >= 1");
  std::vector<std::vector<IndexPair>> chains;
  std::vector<IndexPair> scratch;
  detail::nested_chains(m, max_pairs, scratch, chains);
  DiagonalPath path;
  for (const auto& low : chains) {
    for (const auto& high : chains) {
      if (low.empty() && high.empty()) continue;
      if (low.size() + high.size() > max_pairs) continue;
      if (!low.empty() && !high.empty() && low.front().second > high.front().first) continue;
      path.pairs = low;
      path.pairs.insert(path.pairs.end(), high.begin(), high.end());
      path.split = static_cast<int>(low.size());
      visit(static_cast<const DiagonalPath&>(path));
    }
  }
}

inline std::vector<DiagonalPath> diagonal_paths(int m, std::size_t max_pairs) {
  std::vector<DiagonalPath> out;
  for_each_diagonal_path(m, max_pairs, [&](const DiagonalPath& p) { out.push_back(p); });
  return out;
}

/// Number of factors at degree -d-1.
inline int split_of(const ColoredPartition& term, DegreeWindow w) {
  int b = 0;
  for (const auto& f : term.factors()) b += f.degree == w.lower() ? 1 : 0;
  return b;
}

/// {x_theta(-d-1)^{k+1-a} x_theta(-d)^a : 1 <= a <= k+1}. The pure power at
/// -d-1 is left to window d+1.
inline std::vector<ColoredPartition> base_leading_terms(int k, DegreeWindow w,
                                                        Alphabet alphabet = Alphabet::upper(1)) {
  if (k < 1) throw std::invalid_argument("level must be >= 1");
  const Color top = x_theta(alphabet);
  std::vector<ColoredPartition> out;
  for (int a = 1; a <= k + 1; ++a) {
    ColoredPartition p(alphabet);
    p.insert(Factor{top, w.upper()}, a);
    if (k + 1 - a > 0) p.insert(Factor{top, w.lower()}, k + 1 - a);
    out.push_back(std::move(p));
  }
  sort_unique(out);
  return out;
}

/// All leading terms of relations for the grade-one subspace of C_m in one
/// window, every split 0..k+1 included. Sorted ascending.
inline std::vector<ColoredPartition> fs_leading_terms(int m, int k, DegreeWindow w) {
  if (k < 1) throw std::invalid_argument("level must be >= 1");
  const Alphabet alphabet = Alphabet::upper(m);
  std::vector<ColoredPartition> out;
  std::vector<int> parts;
  for_each_diagonal_path(m, static_cast<std::size_t>(k + 1), [&](const DiagonalPath& path) {
    detail::positive_compositions(k + 1, path.size(), parts, [&](const std::vector<int>& exps) {
      ColoredPartition term(alphabet);
      for (std::size_t p = 0; p < path.size(); ++p) {
        const int degree = static_cast<int>(p) < path.split ? w.lower() : w.upper();
        term.insert(Factor{Color(alphabet, path.pairs[p].first, path.pairs[p].second), degree},
                    exps[p]);
      }
      out.push_back(std::move(term));
    });
  });
  sort_unique(out);
  return out;
}

/// Leading terms with exactly `split` factors at degree -d-1.
inline std::vector<ColoredPartition> fs_leading_terms_at_split(int m, int k, DegreeWindow w,
                                                               int split) {
  std::vector<ColoredPartition> out;
  for (auto& t : fs_leading_terms(m, k, w)) {
    if (split_of(t, w) == split) out.push_back(std::move(t));
  }
  return out;
}

/// fs_leading_terms(2l, k, d) transported into B(C_l).
inline std::vector<ColoredPartition> std_leading_terms(int ell, int k, DegreeWindow w) {
  std::vector<ColoredPartition> out;
  for (const auto& t : fs_leading_terms(2 * ell, k, w)) out.push_back(transport_partition(t, ell));
  sort_unique(out);
  return out;
}

/// Visits every multiset of `size` elements over {1..m} as a multiplicity vector.
template <class F>
void for_each_multiset(int m, int size, F&& visit) {
  if (m < 1 || size < 0) throw std::invalid_argument("invalid multiset parameters");
  Multiset mult(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == m - 1) {
      mult[static_cast<std::size_t>(pos)] = left;
      visit(static_cast<const Multiset&>(mult));
      return;
    }
    for (int x = left; x >= 0; --x) {
      mult[static_cast<std::size_t>(pos)] = x;
      rec(pos + 1, left - x);
    }
  };
  rec(0, size);
}

/// The leading term of the relation indexed by multiset M at total degree n.
///
/// With b = -n - d(k+1) factors at -d-1, the 2b smallest indices of M go to
/// degree -d-1 and the rest to -d; inside each block the sorted indices
/// e_1 <= .. <= e_2c are paired as (e_1, e_2c), (e_2, e_2c-1), ...
inline ColoredPartition leading_term_for_multiset(const Multiset& multiset, DegreeWindow w,
                                                  long n) {
  const int m = static_cast<int>(multiset.size());
  std::vector<int> sorted;
  for (int i = 0; i < m; ++i) {
    if (multiset[static_cast<std::size_t>(i)] < 0) {
      throw std::invalid_argument("negative multiplicity in multiset");
    }
    sorted.insert(sorted.end(), static_cast<std::size_t>(multiset[static_cast<std::size_t>(i)]),
                  i + 1);
  }
  if (sorted.size() < 4 || sorted.size() % 2 != 0) {
    throw std::invalid_argument("multiset size must be 2(k+1) with k >= 1");
  }
  const long terms = static_cast<long>(sorted.size()) / 2;
  const long b = -n - static_cast<long>(w.d) * terms;
  if (b < 0 || b > terms) {
    throw std::invalid_argument("no leading term of degree " + std::to_string(n) +
                                " in window d=" + std::to_string(w.d));
  }
  const Alphabet alphabet = Alphabet::upper(m);
  std::vector<Factor> factors;
  auto pair_block = [&](std::size_t from, std::size_t to, int degree) {
    for (std::size_t lo = from, hi = to; lo < hi; ++lo) {
      --hi;
      factors.push_back(Factor{Color(alphabet, sorted[lo], sorted[hi]), degree});
    }
  };
  const auto cut = static_cast<std::size_t>(2 * b);
  pair_block(0, cut, w.lower());
  pair_block(cut, sorted.size(), w.upper());
  return ColoredPartition(alphabet, std::move(factors));
}

/// The same set as fs_leading_terms(m, k, d), built from multisets instead of paths.
inline std::vector<ColoredPartition> leading_terms_by_multiset(int m, int k, DegreeWindow w) {
  if (k < 1) throw std::invalid_argument("level must be >= 1");
  std::vector<ColoredPartition> out;
  for_each_multiset(m, 2 * (k + 1), [&](const Multiset& mult) {
    for (int b = 0; b <= k + 1; ++b) {
      out.push_back(leading_term_for_multiset(mult, w, -static_cast<long>(w.d) * (k + 1) - b));
    }
  });
  sort_unique(out);
  return out;
}

}  // namespace affcomb
