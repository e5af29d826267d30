#include "affcomb/partitions.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

namespace {

using namespace affcomb;

const Alphabet kUpper2 = Alphabet::upper(2);
const Alphabet kFull2 = Alphabet::full(2);

Factor F(Alphabet a, int i, int j, int degree) { return Factor{Color(a, i, j), degree}; }

// Every partition with negative degrees and |degree| <= max_degree.
std::vector<ColoredPartition> all_partitions(Alphabet alphabet, int max_degree) {
  std::vector<Factor> slots;
  for (int d = 1; d <= max_degree; ++d) {
    for (int p = 0; p < alphabet.size(); ++p) slots.push_back({Color::from_position(alphabet, p), -d});
  }
  std::vector<ColoredPartition> out;
  std::vector<Factor> acc;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int budget) {
    out.emplace_back(alphabet, acc);
    for (std::size_t s = from; s < slots.size(); ++s) {
      if (-slots[s].degree > budget) continue;
      acc.push_back(slots[s]);
      rec(s, budget + slots[s].degree);
      acc.pop_back();
    }
  };
  rec(0, max_degree);
  return out;
}

TEST(Color, PositionsAreABijectionInAscendingOrder) {
  for (const Alphabet a : {Alphabet::upper(1), Alphabet::upper(4), Alphabet::full(1), Alphabet::full(3)}) {
    for (int p = 0; p < a.size(); ++p) {
      const Color c = Color::from_position(a, p);
      EXPECT_EQ(c.position(), p);
      if (p > 0) EXPECT_TRUE(compare_colors(Color::from_position(a, p - 1), c) < 0);
    }
    EXPECT_EQ(Color::from_position(a, a.size() - 1), x_theta(a));
  }
}

TEST(Color, RejectsInvalid) {
  EXPECT_THROW(Color(kUpper2, 2, 1), std::invalid_argument);
  EXPECT_THROW(Color(kUpper2, 1, 3), std::invalid_argument);
  EXPECT_NO_THROW(Color(kFull2, 1, 4));
}

TEST(Color, Rendering) {
  EXPECT_EQ(Color(Alphabet::full(3), 2, 4).str(), "2_3");
  EXPECT_EQ(Color(Alphabet::full(1), 2, 2).str(), "_1_1");
  EXPECT_EQ(Color(kUpper2, 1, 2).str(), "12");
}

TEST(CompareColors, Examples) {
  EXPECT_TRUE(compare_colors(Color(kUpper2, 1, 1), Color(kUpper2, 1, 2)) > 0);
  EXPECT_TRUE(compare_colors(Color(kUpper2, 1, 2), Color(kUpper2, 2, 2)) > 0);
  // rank 2 full scheme: X_{2 2bar} vs X_{2bar 2bar}; 2bar is internal 3
  EXPECT_TRUE(compare_colors(Color(kFull2, 2, 3), Color(kFull2, 3, 3)) > 0);
  EXPECT_THROW(compare_colors(Color(kUpper2, 1, 1), Color(kFull2, 1, 1)), std::invalid_argument);
}

TEST(CompareColors, FullSchemeColumnMajorAudit) {
  // X_11 is the maximum; every column lies above everything to its right
  for (int p = 0; p < kFull2.size(); ++p) {
    const Color c = Color::from_position(kFull2, p);
    if (!(c == x_theta(kFull2))) EXPECT_TRUE(compare_colors(c, x_theta(kFull2)) < 0);
    for (int q = 0; q < kFull2.size(); ++q) {
      const Color e = Color::from_position(kFull2, q);
      if (c.a < e.a) EXPECT_TRUE(compare_colors(c, e) > 0);
      if (c.a == e.a && c.b < e.b) EXPECT_TRUE(compare_colors(c, e) > 0);
    }
  }
}

TEST(CompareFactors, Examples) {
  EXPECT_TRUE(compare_factors(F(kUpper2, 1, 1, -2), F(kUpper2, 2, 2, -1)) < 0);
  EXPECT_TRUE(compare_factors(F(kUpper2, 2, 2, -1), F(kUpper2, 1, 1, -1)) < 0);
  EXPECT_TRUE(compare_factors(F(kUpper2, 1, 2, -3), F(kUpper2, 1, 2, -3)) == 0);
}

TEST(ColoredPartition, CanonicalOrderAndStatistics) {
  const ColoredPartition p(kUpper2, {F(kUpper2, 1, 1, -1), F(kUpper2, 2, 2, -2), F(kUpper2, 1, 2, -1)});
  EXPECT_TRUE(p.is_canonical());
  EXPECT_EQ(p.str(), "22(-2) 12(-1) 11(-1)");
  EXPECT_EQ(p.length(), 3u);
  EXPECT_EQ(p.degree(), -4);
  EXPECT_EQ(p.plain_partition(), (std::vector<int>{-2, -1, -1}));
  EXPECT_EQ(ColoredPartition(kUpper2).str(), "1");
}

TEST(ColoredPartition, CanonicalFormIsIdempotent) {
  for (const auto& p : all_partitions(kUpper2, 5)) {
    EXPECT_TRUE(p.is_canonical());
    EXPECT_EQ(ColoredPartition(p.alphabet(), p.factors()), p);
  }
}

TEST(ComparePartitions, PlainPartitionReverseLex) {
  const Alphabet a = Alphabet::upper(1);
  const ColoredPartition balanced(a, {F(a, 1, 1, -1), F(a, 1, 1, -1)});
  const ColoredPartition spread(a, {F(a, 1, 1, -2), F(a, 1, 1, 0)});
  EXPECT_TRUE(compare_partitions(balanced, spread) < 0);
}

TEST(ComparePartitions, ShorterIsHigher) {
  const Alphabet a = Alphabet::upper(1);
  const ColoredPartition one(a, {F(a, 1, 1, -2)});
  const ColoredPartition two(a, {F(a, 1, 1, -1), F(a, 1, 1, -1)});
  EXPECT_TRUE(compare_partitions(two, one) < 0);
}

TEST(ComparePartitions, GreaterDegreeIsHigher) {
  const Alphabet a = Alphabet::upper(1);
  const ColoredPartition low(a, {F(a, 1, 1, -3)});
  const ColoredPartition high(a, {F(a, 1, 1, -2)});
  EXPECT_TRUE(compare_partitions(low, high) < 0);
}

TEST(ComparePartitions, ColoringReverseLex) {
  const ColoredPartition p(kUpper2, {F(kUpper2, 2, 2, -1), F(kUpper2, 1, 1, -1)});
  const ColoredPartition q(kUpper2, {F(kUpper2, 1, 2, -1), F(kUpper2, 1, 2, -1)});
  EXPECT_TRUE(compare_partitions(q, p) < 0);
}

TEST(ComparePartitions, RejectsMixedAlphabets) {
  EXPECT_THROW(compare_partitions(ColoredPartition(kUpper2), ColoredPartition(kFull2)),
               std::invalid_argument);
}

void expect_total_order(const std::vector<ColoredPartition>& parts) {
  std::vector<ColoredPartition> sorted = parts;
  std::sort(sorted.begin(), sorted.end(), PartitionLess{});
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    EXPECT_TRUE(compare_partitions(sorted[i], sorted[i]) == 0);
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      // antisymmetry and a strict chain after sorting imply transitivity
      ASSERT_TRUE(compare_partitions(sorted[i], sorted[j]) < 0) << sorted[i].str() << " | " << sorted[j].str();
      ASSERT_TRUE(compare_partitions(sorted[j], sorted[i]) > 0);
    }
  }
}

TEST(ComparePartitions, TotalOrderExhaustive) {
  expect_total_order(all_partitions(Alphabet::upper(1), 6));
  expect_total_order(all_partitions(Alphabet::upper(2), 6));
  expect_total_order(all_partitions(Alphabet::full(1), 6));
  expect_total_order(all_partitions(Alphabet::full(2), 4));
}

TEST(ComparePartitions, MultiplicationIsMonotone) {
  for (const Alphabet a : {Alphabet::upper(2), Alphabet::full(1)}) {
    const auto parts = all_partitions(a, 3);
    for (const auto& kappa : parts) {
      for (const auto& lambda : parts) {
        if (compare_partitions(kappa, lambda) > 0) continue;
        for (const auto& pi : parts) {
          ASSERT_TRUE(compare_partitions(multiply(kappa, pi), multiply(lambda, pi)) <= 0)
              << kappa.str() << " | " << lambda.str() << " | " << pi.str();
        }
      }
    }
  }
}

TEST(Divides, Examples) {
  const Alphabet a = kUpper2;
  const ColoredPartition rho(a, {F(a, 1, 1, -1), F(a, 1, 1, -1)});
  EXPECT_TRUE(divides(rho, ColoredPartition(a, {F(a, 1, 1, -1), F(a, 1, 1, -1), F(a, 1, 2, -2)})));
  EXPECT_FALSE(divides(rho, ColoredPartition(a, {F(a, 1, 1, -1), F(a, 1, 2, -1)})));
  EXPECT_TRUE(divides(ColoredPartition(a), rho));
  EXPECT_THROW(divides(ColoredPartition(kFull2), rho), std::invalid_argument);
}

TEST(Divides, MutualDivisibilityIsEquality) {
  const auto parts = all_partitions(kUpper2, 4);
  for (const auto& p : parts) {
    for (const auto& q : parts) {
      EXPECT_EQ(divides(p, q) && divides(q, p), p == q);
    }
  }
}

TEST(Multiply, Examples) {
  const Alphabet a = kUpper2;
  const ColoredPartition p(a, {F(a, 1, 1, -1)});
  EXPECT_EQ(multiply(p, ColoredPartition(a)), p);
  EXPECT_EQ(multiply(p, ColoredPartition(a, {F(a, 2, 2, -2)})).str(), "22(-2) 11(-1)");
  EXPECT_THROW(multiply(p, ColoredPartition(kFull2)), std::invalid_argument);
}

TEST(Multiply, LengthAndDegreeAreAdditive) {
  std::mt19937 rng(20261015);
  const auto parts = all_partitions(kFull2, 4);
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto& p = parts[pick(rng)];
    const auto& q = parts[pick(rng)];
    const auto pq = multiply(p, q);
    EXPECT_EQ(pq.degree(), p.degree() + q.degree());
    EXPECT_EQ(pq.length(), p.length() + q.length());
    EXPECT_TRUE(pq.is_canonical());
    EXPECT_TRUE(divides(p, pq));
    EXPECT_TRUE(divides(q, pq));
    EXPECT_EQ(pq, multiply(q, p));
  }
}

}  // namespace
