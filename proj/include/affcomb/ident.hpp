#pragma once

// Identification of the upper triangle B_1 of C_{2l} with the full triangular
// basis B of C_l.

#include "affcomb/partitions.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affcomb {

/// (i, j) with 1 <= i <= j <= 2l maps to X_ab where an index p > l becomes the
/// barred index of 2l+1-p. With the internal encoding of the full scheme this
/// keeps the integers unchanged, so the map is order preserving.
inline Color iota(std::pair<int, int> pair, int ell) {
  const auto [i, j] = pair;
  if (ell < 1 || i < 1 || i > j || j > 2 * ell) {
    throw std::invalid_argument("(" + std::to_string(i) + "," + std::to_string(j) +
                                ") is not an index pair of B1(C" + std::to_string(2 * ell) + ")");
  }
  return Color(Alphabet::full(ell), i, j);
}

inline std::pair<int, int> iota_inverse(const Color& color, int ell) {
  if (!(color.alphabet == Alphabet::full(ell))) {
    throw std::invalid_argument("color " + color.str() + " is not in B(C" + std::to_string(ell) +
                                ")");
  }
  return {color.a, color.b};
}

/// Color-wise image under iota; degrees, length and order are preserved.
inline ColoredPartition transport_partition(const ColoredPartition& p, int ell) {
  if (!(p.alphabet() == Alphabet::upper(2 * ell))) {
    throw std::invalid_argument("transport expects a partition over B1(C" +
                                std::to_string(2 * ell) + "), got " + p.alphabet().name());
  }
  std::vector<Factor> image;
  image.reserve(p.length());
  for (const auto& f : p.factors()) {
    image.push_back(Factor{iota({f.color.a, f.color.b}, ell), f.degree});
  }
  return ColoredPartition(Alphabet::full(ell), std::move(image));
}

}  // namespace affcomb
