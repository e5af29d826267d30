#pragma once

// Colors from the triangular basis schemes of C_l, colored partitions, and the
// well order on colored partitions.
//
// Indices are stored as integers 1..n. In the full scheme of C_l (n = 2l) an
// index p > l stands for the barred index of 2l+1-p, so the index order
// 1 > 2 > ... > l > l-bar > ... > 1-bar is strictly decreasing in p.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace affcomb {

/// Which basis a color is drawn from: the upper triangle B_1 of C_rank (the
/// grade-one part of the minuscule grading) or the full triangle B of C_rank.
enum class Scheme : std::uint8_t { Upper, Full };

struct Alphabet {
  Scheme scheme = Scheme::Upper;
  std::int16_t rank = 1;

  static Alphabet upper(int rank) { return make(Scheme::Upper, rank); }
  static Alphabet full(int rank) { return make(Scheme::Full, rank); }

  /// Number of index values, n.
  int index_count() const { return scheme == Scheme::Upper ? rank : 2 * rank; }
  /// Number of colors, n(n+1)/2.
  int size() const { return index_count() * (index_count() + 1) / 2; }

  std::string name() const {
    return std::string(scheme == Scheme::Upper ? "B1(C" : "B(C") + std::to_string(rank) + ")";
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  static Alphabet make(Scheme s, int rank) {
    if (rank < 1 || rank > 64) throw std::invalid_argument("rank must lie in [1, 64]");
    return Alphabet{s, static_cast<std::int16_t>(rank)};
  }
};

inline std::string format_index(const Alphabet& alphabet, int p) {
  if (alphabet.scheme == Scheme::Full && p > alphabet.rank) {
    return "_" + std::to_string(2 * alphabet.rank + 1 - p);
  }
  return std::to_string(p);
}

/// Basis element X_ab, column a and row b, with a <= b as internal indices.
struct Color {
  Alphabet alphabet;
  std::int16_t a = 1;
  std::int16_t b = 1;

  Color() = default;
  Color(Alphabet alpha, int column, int row)
      : alphabet(alpha), a(static_cast<std::int16_t>(column)), b(static_cast<std::int16_t>(row)) {
    if (column < 1 || column > row || row > alpha.index_count()) {
      throw std::invalid_argument("X_{" + std::to_string(column) + "," + std::to_string(row) +
                                  "} is not a color of " + alpha.name());
    }
  }

  /// Position in ascending order, 0 for the smallest color.
  int position() const {
    const int n = alphabet.index_count();
    // colors strictly above X_ab: whole columns left of a, then rows above b in column a
    const int above = (a - 1) * n - (a - 1) * (a - 2) / 2 + (b - a);
    return alphabet.size() - 1 - above;
  }

  static Color from_position(Alphabet alpha, int pos) {
    const int n = alpha.index_count();
    int above = alpha.size() - 1 - pos;
    for (int col = 1; col <= n; ++col) {
      const int height = n - col + 1;
      if (above < height) return Color(alpha, col, col + above);
      above -= height;
    }
    throw std::out_of_range("color position out of range");
  }

  std::string str() const { return format_index(alphabet, a) + format_index(alphabet, b); }

  friend bool operator==(const Color&, const Color&) = default;
};

/// The highest color X_11, i.e. x_theta.
inline Color x_theta(Alphabet alpha) { return Color(alpha, 1, 1); }

/// X_ab > X_a'b' iff a > a', or a = a' and b > b' (index order, not integer order).
inline std::strong_ordering compare_colors(const Color& x, const Color& y) {
  if (!(x.alphabet == y.alphabet)) {
    throw std::invalid_argument("cannot compare colors of " + x.alphabet.name() + " and " +
                                y.alphabet.name());
  }
  if (x.a != y.a) return y.a <=> x.a;
  return y.b <=> x.b;
}

/// x(n) as a formal symbol.
struct Factor {
  Color color;
  int degree = 0;

  std::string str() const { return color.str() + "(" + std::to_string(degree) + ")"; }
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// x(n) < y(m) iff n < m, or n = m and x < y.
inline std::strong_ordering compare_factors(const Factor& f, const Factor& g) {
  if (f.degree != g.degree) {
    if (!(f.color.alphabet == g.color.alphabet)) {
      throw std::invalid_argument("cannot compare factors of different alphabets");
    }
    return f.degree <=> g.degree;
  }
  return compare_colors(f.color, g.color);
}

/// A finite multiset of factors, kept in ascending factor order.
class ColoredPartition {
 public:
  explicit ColoredPartition(Alphabet alphabet) : alphabet_(alphabet) {}

  ColoredPartition(Alphabet alphabet, std::vector<Factor> factors)
      : alphabet_(alphabet), factors_(std::move(factors)) {
    for (const auto& f : factors_) {
      if (!(f.color.alphabet == alphabet_)) {
        throw std::invalid_argument("factor " + f.str() + " is not over " + alphabet_.name());
      }
    }
    canonicalize();
  }

  ColoredPartition(Alphabet alphabet, std::initializer_list<Factor> factors)
      : ColoredPartition(alphabet, std::vector<Factor>(factors)) {}

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t length() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  long degree() const {
    long sum = 0;
    for (const auto& f : factors_) sum += f.degree;
    return sum;
  }

  /// Most negative degree, 0 for the empty partition.
  int min_degree() const { return factors_.empty() ? 0 : factors_.front().degree; }
  int max_degree() const { return factors_.empty() ? 0 : factors_.back().degree; }

  /// Member of P_{<0} (all degrees negative).
  bool strictly_negative() const { return factors_.empty() || factors_.back().degree < 0; }

  std::vector<int> plain_partition() const {
    std::vector<int> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) out.push_back(f.degree);
    return out;
  }

  /// Appends factors and restores ascending order.
  void insert(const Factor& f, int multiplicity = 1) {
    if (!(f.color.alphabet == alphabet_)) {
      throw std::invalid_argument("factor " + f.str() + " is not over " + alphabet_.name());
    }
    factors_.insert(factors_.end(), static_cast<std::size_t>(multiplicity), f);
    canonicalize();
  }

  bool is_canonical() const {
    return std::is_sorted(factors_.begin(), factors_.end(), [](const Factor& x, const Factor& y) {
      return compare_factors(x, y) < 0;
    });
  }

  std::string str() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += ' ';
      out += factors_[i].str();
    }
    return out;
  }

  friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;

 private:
  void canonicalize() {
    std::stable_sort(factors_.begin(), factors_.end(), [](const Factor& x, const Factor& y) {
      return compare_factors(x, y) < 0;
    });
  }

  Alphabet alphabet_;
  std::vector<Factor> factors_;
};

namespace detail {

inline void require_same_alphabet(const ColoredPartition& p, const ColoredPartition& q) {
  if (!(p.alphabet() == q.alphabet())) {
    throw std::invalid_argument("partitions over " + p.alphabet().name() + " and " +
                                q.alphabet().name() + " cannot be combined");
  }
}

}  // namespace detail

/// The well order: longer is lower, then lower degree is lower, then plain
/// partitions in reverse lexicographic order, then colorings likewise.
///
/// Reverse lexicographic means the ascending sequences are compared from the
/// last (largest) entry leftwards; the smaller entry at the first difference
/// gives the smaller partition.
inline std::strong_ordering compare_partitions(const ColoredPartition& p,
                                               const ColoredPartition& q) {
  detail::require_same_alphabet(p, q);
  if (p.length() != q.length()) return q.length() <=> p.length();
  if (auto c = p.degree() <=> q.degree(); c != 0) return c;
  const auto& x = p.factors();
  const auto& y = q.factors();
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i].degree != y[i].degree) return x[i].degree <=> y[i].degree;
  }
  for (std::size_t i = x.size(); i-- > 0;) {
    if (auto c = compare_colors(x[i].color, y[i].color); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

/// Strict weak ordering adaptor for std containers and algorithms.
struct PartitionLess {
  bool operator()(const ColoredPartition& p, const ColoredPartition& q) const {
    return compare_partitions(p, q) < 0;
  }
};

/// Multiset inclusion of factors; the empty partition divides everything.
inline bool divides(const ColoredPartition& rho, const ColoredPartition& pi) {
  detail::require_same_alphabet(rho, pi);
  auto same = [](const Factor& x, const Factor& y) { return compare_factors(x, y) < 0; };
  return std::includes(pi.factors().begin(), pi.factors().end(), rho.factors().begin(),
                       rho.factors().end(), same);
}

/// Monoid product: multiset union.
inline ColoredPartition multiply(const ColoredPartition& p, const ColoredPartition& q) {
  detail::require_same_alphabet(p, q);
  std::vector<Factor> merged;
  merged.reserve(p.length() + q.length());
  std::merge(p.factors().begin(), p.factors().end(), q.factors().begin(), q.factors().end(),
             std::back_inserter(merged),
             [](const Factor& x, const Factor& y) { return compare_factors(x, y) < 0; });
  return ColoredPartition(p.alphabet(), std::move(merged));
}

/// Sorts and deduplicates a list of partitions in ascending well order.
inline void sort_unique(std::vector<ColoredPartition>& parts) {
  std::sort(parts.begin(), parts.end(), PartitionLess{});
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
}

}  // namespace affcomb
