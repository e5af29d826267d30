#include "affcomb/ident.hpp"
#include "affcomb/leading.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace {

using namespace affcomb;

TEST(Iota, RankThreeTableRow) {
  // 14 24 34 44  ->  1 3bar, 2 3bar, 3 3bar, 3bar 3bar
  EXPECT_EQ(iota({1, 4}, 3).str(), "1_3");
  EXPECT_EQ(iota({2, 4}, 3).str(), "2_3");
  EXPECT_EQ(iota({3, 4}, 3).str(), "3_3");
  EXPECT_EQ(iota({4, 4}, 3).str(), "_3_3");
  EXPECT_EQ(iota({1, 6}, 3).str(), "1_1");
  EXPECT_EQ(iota({5, 6}, 3).str(), "_2_1");
}

TEST(Iota, RankOne) {
  EXPECT_EQ(iota({1, 1}, 1).str(), "11");
  EXPECT_EQ(iota({1, 2}, 1).str(), "1_1");
  EXPECT_EQ(iota({2, 2}, 1).str(), "_1_1");
}

TEST(Iota, RankTwo) { EXPECT_EQ(iota({3, 4}, 2).str(), "_2_1"); }

TEST(Iota, RejectsOutOfRange) {
  EXPECT_THROW(iota({2, 1}, 2), std::invalid_argument);
  EXPECT_THROW(iota({1, 5}, 2), std::invalid_argument);
  EXPECT_THROW(iota({0, 1}, 2), std::invalid_argument);
}

TEST(IotaInverse, Examples) {
  EXPECT_EQ(iota_inverse(Color(Alphabet::full(3), 3, 4), 3), (IndexPair{3, 4}));
  EXPECT_EQ(iota_inverse(Color(Alphabet::full(1), 1, 2), 1), (IndexPair{1, 2}));
  EXPECT_THROW(iota_inverse(Color(Alphabet::upper(2), 1, 2), 1), std::invalid_argument);
}

TEST(Iota, BijectiveAndOrderPreserving) {
  for (int ell = 1; ell <= 8; ++ell) {
    const Alphabet source = Alphabet::upper(2 * ell);
    const Alphabet target = Alphabet::full(ell);
    ASSERT_EQ(source.size(), target.size());
    ASSERT_EQ(target.size(), ell * (2 * ell + 1));
    std::set<int> image;
    for (int p = 0; p < source.size(); ++p) {
      const Color x = Color::from_position(source, p);
      const Color ix = iota({x.a, x.b}, ell);
      image.insert(ix.position());
      EXPECT_EQ(iota_inverse(ix, ell), (IndexPair{x.a, x.b}));
      for (int q = 0; q < source.size(); ++q) {
        const Color y = Color::from_position(source, q);
        EXPECT_EQ(compare_colors(x, y), compare_colors(ix, iota({y.a, y.b}, ell)));
      }
    }
    EXPECT_EQ(image.size(), static_cast<std::size_t>(target.size()));
    for (int p = 0; p < target.size(); ++p) {
      const Color c = Color::from_position(target, p);
      EXPECT_EQ(iota(iota_inverse(c, ell), ell), c);
    }
  }
}

TEST(TransportPartition, Examples) {
  const Alphabet src = Alphabet::upper(6);
  EXPECT_EQ(transport_partition(ColoredPartition(src), 3), ColoredPartition(Alphabet::full(3)));
  const ColoredPartition p(src, {Factor{Color(src, 1, 4), -2}, Factor{Color(src, 2, 2), -1}});
  EXPECT_EQ(transport_partition(p, 3).str(), "1_3(-2) 22(-1)");
  EXPECT_THROW(transport_partition(p, 2), std::invalid_argument);
}

ColoredPartition random_partition(Alphabet a, std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 6), deg(-4, -1), col(0, a.size() - 1);
  ColoredPartition p(a);
  const int n = len(rng);
  for (int i = 0; i < n; ++i) p.insert(Factor{Color::from_position(a, col(rng)), deg(rng)});
  return p;
}

TEST(TransportPartition, PreservesOrderAndProducts) {
  std::mt19937 rng(42);
  for (int ell = 1; ell <= 3; ++ell) {
    const Alphabet src = Alphabet::upper(2 * ell);
    for (int trial = 0; trial < 500; ++trial) {
      const auto p = random_partition(src, rng);
      const auto q = random_partition(src, rng);
      const auto tp = transport_partition(p, ell);
      const auto tq = transport_partition(q, ell);
      EXPECT_EQ(compare_partitions(p, q), compare_partitions(tp, tq));
      EXPECT_EQ(transport_partition(multiply(p, q), ell), multiply(tp, tq));
      EXPECT_EQ(tp.degree(), p.degree());
      EXPECT_EQ(tp.length(), p.length());
      EXPECT_EQ(tp.plain_partition(), p.plain_partition());
    }
  }
}

TEST(TransportPartition, CarriesFsLeadingTermsOntoStdLeadingTerms) {
  for (int ell = 1; ell <= 2; ++ell) {
    for (int k = 1; k <= 2; ++k) {
      const DegreeWindow w(2);
      std::vector<ColoredPartition> image;
      for (const auto& t : fs_leading_terms(2 * ell, k, w)) image.push_back(transport_partition(t, ell));
      sort_unique(image);
      EXPECT_EQ(image, std_leading_terms(ell, k, w));
    }
  }
}

}  // namespace
