#pragma once

// Brute-force leading terms: the minimum, in the well order, of the support of
// one z-coefficient of a relation. Coefficients are not tracked; every pairing
// of the multiset and every degree composition is assumed to occur.

#include "affcomb/leading.hpp"
#include "affcomb/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace affcomb {

struct RelationSupport {
  Multiset multiset;
  long degree = 0;
  std::vector<ColoredPartition> partitions;  // ascending, no duplicates
};

namespace detail {

// Pairings of a sorted list into unordered pairs (a <= b), repeated values
// collapsed so each pairing is produced once.
inline void pairings(std::vector<int>& rest, std::vector<IndexPair>& acc,
                     std::vector<std::vector<IndexPair>>& out) {
  if (rest.empty()) {
    out.push_back(acc);
    return;
  }
  const int first = rest.front();
  for (std::size_t idx = 1; idx < rest.size(); ++idx) {
    if (idx > 1 && rest[idx] == rest[idx - 1]) continue;
    const int partner = rest[idx];
    std::vector<int> next;
    next.reserve(rest.size() - 2);
    for (std::size_t q = 1; q < rest.size(); ++q) {
      if (q != idx) next.push_back(rest[q]);
    }
    acc.emplace_back(first, partner);
    pairings(next, acc, out);
    acc.pop_back();
  }
}

// Ordered compositions of n into `parts` integers, each <= -1.
inline void negative_compositions(long n, int parts, std::vector<int>& acc,
                                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    if (n <= -1) {
      acc.push_back(static_cast<int>(n));
      out.push_back(acc);
      acc.pop_back();
    }
    return;
  }
  for (long x = -1; x >= n + (parts - 1); --x) {
    acc.push_back(static_cast<int>(x));
    negative_compositions(n - x, parts - 1, acc, out);
    acc.pop_back();
  }
}

inline int level_of(const Multiset& multiset) {
  const int total = std::accumulate(multiset.begin(), multiset.end(), 0);
  if (total < 4 || total % 2 != 0) {
    throw std::invalid_argument("multiset size must be 2(k+1) with k >= 1, got " +
                                std::to_string(total));
  }
  return total / 2 - 1;
}

}  // namespace detail

/// All colored partitions X_{i1 j1}(n1) ... X_{i_{k+1} j_{k+1}}(n_{k+1}) whose
/// index pairs partition the multiset and whose degrees are negative and sum to n.
inline RelationSupport relation_support(const Multiset& multiset, long n, int k, int m) {
  if (static_cast<int>(multiset.size()) != m) {
    throw std::invalid_argument("multiset has " + std::to_string(multiset.size()) +
                                " entries, rank is " + std::to_string(m));
  }
  if (detail::level_of(multiset) != k) {
    throw std::invalid_argument("multiset size does not match level " + std::to_string(k));
  }
  if (n > -(k + 1)) {
    throw std::invalid_argument("degree " + std::to_string(n) +
                                " leaves no support with negative parts");
  }
  std::vector<int> sorted;
  for (int i = 0; i < m; ++i) {
    sorted.insert(sorted.end(), static_cast<std::size_t>(multiset[static_cast<std::size_t>(i)]),
                  i + 1);
  }
  std::vector<std::vector<IndexPair>> pairs;
  std::vector<IndexPair> acc;
  detail::pairings(sorted, acc, pairs);
  std::vector<std::vector<int>> comps;
  std::vector<int> scratch;
  detail::negative_compositions(n, k + 1, scratch, comps);

  const Alphabet alphabet = Alphabet::upper(m);
  RelationSupport support{multiset, n, {}};
  for (const auto& pairing : pairs) {
    for (const auto& comp : comps) {
      std::vector<Factor> factors;
      for (std::size_t p = 0; p < pairing.size(); ++p) {
        factors.push_back(Factor{Color(alphabet, pairing[p].first, pairing[p].second), comp[p]});
      }
      support.partitions.emplace_back(alphabet, std::move(factors));
    }
  }
  if (support.partitions.empty()) throw std::invalid_argument("empty relation support");
  sort_unique(support.partitions);
  return support;
}

/// Minimum of a support under the well order.
inline ColoredPartition minimum_of(const std::vector<ColoredPartition>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty relation support");
  return *std::min_element(parts.begin(), parts.end(), PartitionLess{});
}

inline ColoredPartition brute_leading_term(const Multiset& multiset, long n, int k, int m) {
  return minimum_of(relation_support(multiset, n, k, m).partitions);
}

struct AuditMismatch {
  int window = 0;
  Multiset multiset;
  long degree = 0;
  std::string reason;
  std::string term;
};

struct AuditReport {
  int rank = 0;
  int level = 0;
  int max_window = 0;
  std::size_t supports_checked = 0;
  std::vector<AuditMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Compares the brute-force minima against fs_leading_terms window by window.
inline AuditReport audit_windows(int m, int k, int d_max) {
  if (m < 1 || k < 1 || d_max < 1) throw std::invalid_argument("audit needs m, k, d_max >= 1");
  AuditReport report{m, k, d_max, 0, {}};
  for (int d = 1; d <= d_max; ++d) {
    const DegreeWindow w(d);
    std::vector<ColoredPartition> minima;
    for_each_multiset(m, 2 * (k + 1), [&](const Multiset& mult) {
      for (long n = -static_cast<long>(d + 1) * (k + 1); n <= -static_cast<long>(d) * (k + 1);
           ++n) {
        ColoredPartition best = brute_leading_term(mult, n, k, m);
        ++report.supports_checked;
        if (best.min_degree() < w.lower() || best.max_degree() > w.upper()) {
          report.mismatches.push_back({d, mult, n, "minimum leaves the window", best.str()});
        }
        minima.push_back(std::move(best));
      }
    });
    sort_unique(minima);
    const auto closed = fs_leading_terms(m, k, w);
    std::vector<ColoredPartition> missing;
    std::vector<ColoredPartition> extra;
    std::set_difference(minima.begin(), minima.end(), closed.begin(), closed.end(),
                        std::back_inserter(missing), PartitionLess{});
    std::set_difference(closed.begin(), closed.end(), minima.begin(), minima.end(),
                        std::back_inserter(extra), PartitionLess{});
    for (const auto& t : missing) {
      report.mismatches.push_back({d, {}, t.degree(), "brute minimum not generated", t.str()});
    }
    for (const auto& t : extra) {
      report.mismatches.push_back({d, {}, t.degree(), "generated term is no minimum", t.str()});
    }
  }
  return report;
}

}  // namespace affcomb
