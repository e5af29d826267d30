#pragma once

// Classical root systems in the epsilon basis, Weyl dimensions in exact
// arithmetic, and the minuscule grading of type C.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace affcomb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Family { A, B, C, D };

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

inline Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw std::invalid_argument("unknown root system family '" + s + "'");
}

/// A classical root system X_r. Construction rejects degenerate ranks
/// (B needs r >= 2, D needs r >= 3).
class RootSystemSpec {
 public:
  RootSystemSpec(Family family, int rank) : family_(family), rank_(rank) {
    int min_rank = 1;
    if (family == Family::B) min_rank = 2;
    if (family == Family::D) min_rank = 3;
    if (rank < min_rank) {
      throw std::invalid_argument(std::string("rank ") + std::to_string(rank) +
                                  " is not valid for family " + family_letter(family));
    }
  }

  Family family() const { return family_; }
  int rank() const { return rank_; }

  /// Number of epsilon coordinates: A_r lives in r+1 coordinates, the others in r.
  std::size_t dimension() const {
    return family_ == Family::A ? static_cast<std::size_t>(rank_) + 1
                                : static_cast<std::size_t>(rank_);
  }

  /// Scale of <e_i, e_i>, chosen so that the highest root has square length 2.
  Rational epsilon_norm() const {
    return family_ == Family::C ? Rational(1, 2) : Rational(1);
  }

  std::string name() const { return family_letter(family_) + std::to_string(rank_); }

  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;

 private:
  Family family_;
  int rank_;
};

/// A vector in epsilon coordinates.
struct Weight {
  std::vector<Rational> coords;

  static Weight zero(std::size_t n) { return Weight{std::vector<Rational>(n)}; }

  static Weight epsilon(std::size_t n, std::size_t i, Rational scale = 1) {
    Weight w = zero(n);
    w.coords.at(i) = scale;
    return w;
  }

  std::size_t size() const { return coords.size(); }

  Weight& operator+=(const Weight& o) {
    if (o.size() != size()) throw std::invalid_argument("weight length mismatch");
    for (std::size_t i = 0; i < size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator*(const Rational& s, Weight w) {
    for (auto& c : w.coords) c *= s;
    return w;
  }
  friend bool operator==(const Weight&, const Weight&) = default;
};

inline std::string to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += w.coords[i].str();
  }
  return out + ")";
}

namespace detail {

inline Weight root(std::size_t n, std::size_t i, int si, std::size_t j, int sj) {
  Weight w = Weight::zero(n);
  w.coords.at(i) += si;
  w.coords.at(j) += sj;
  return w;
}

inline void check_length(const RootSystemSpec& spec, const Weight& w) {
  if (w.size() != spec.dimension()) {
    throw std::invalid_argument("weight " + to_string(w) + " has " + std::to_string(w.size()) +
                                " coordinates, " + spec.name() + " needs " +
                                std::to_string(spec.dimension()));
  }
}

}  // namespace detail

/// Bilinear form on epsilon coordinates, normalised so <theta, theta> = 2.
inline Rational inner_product(const RootSystemSpec& spec, const Weight& x, const Weight& y) {
  detail::check_length(spec, x);
  detail::check_length(spec, y);
  Rational sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += x.coords[i] * y.coords[i];
  return sum * spec.epsilon_norm();
}

/// Standard (Bourbaki) positive roots.
inline std::vector<Weight> positive_roots(const RootSystemSpec& spec) {
  const std::size_t n = spec.dimension();
  std::vector<Weight> roots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      roots.push_back(detail::root(n, i, 1, j, -1));
      if (spec.family() != Family::A) roots.push_back(detail::root(n, i, 1, j, 1));
    }
  }
  if (spec.family() == Family::B) {
    for (std::size_t i = 0; i < n; ++i) roots.push_back(Weight::epsilon(n, i));
  }
  if (spec.family() == Family::C) {
    for (std::size_t i = 0; i < n; ++i) roots.push_back(Weight::epsilon(n, i, 2));
  }
  return roots;
}

inline std::vector<Weight> simple_roots(const RootSystemSpec& spec) {
  const std::size_t n = spec.dimension();
  const std::size_t r = static_cast<std::size_t>(spec.rank());
  std::vector<Weight> simple;
  for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(detail::root(n, i, 1, i + 1, -1));
  switch (spec.family()) {
    case Family::A: break;
    case Family::B: simple.push_back(Weight::epsilon(n, r - 1)); break;
    case Family::C: simple.push_back(Weight::epsilon(n, r - 1, 2)); break;
    case Family::D: simple.push_back(detail::root(n, r - 2, 1, r - 1, 1)); break;
  }
  return simple;
}

inline Weight highest_root(const RootSystemSpec& spec) {
  const std::size_t n = spec.dimension();
  switch (spec.family()) {
    case Family::A: return detail::root(n, 0, 1, n - 1, -1);
    case Family::C: return Weight::epsilon(n, 0, 2);
    default: return detail::root(n, 0, 1, 1, 1);
  }
}

/// Half the sum of the positive roots.
inline Weight rho(const RootSystemSpec& spec) {
  Weight sum = Weight::zero(spec.dimension());
  for (const auto& a : positive_roots(spec)) sum += a;
  return Rational(1, 2) * sum;
}

/// <lambda, alpha^vee> for every simple root alpha.
inline std::vector<Rational> dynkin_labels(const RootSystemSpec& spec, const Weight& lambda) {
  std::vector<Rational> labels;
  for (const auto& a : simple_roots(spec)) {
    labels.push_back(2 * inner_product(spec, lambda, a) / inner_product(spec, a, a));
  }
  return labels;
}

inline bool is_dominant_integral(const RootSystemSpec& spec, const Weight& lambda) {
  for (const auto& c : dynkin_labels(spec, lambda)) {
    if (c < 0 || denominator(c) != 1) return false;
  }
  return true;
}

/// Dimension of the irreducible module with highest weight lambda:
/// prod over positive alpha of <lambda+rho, alpha> / <rho, alpha>.
inline BigInt weyl_dim(const RootSystemSpec& spec, const Weight& lambda) {
  detail::check_length(spec, lambda);
  if (!is_dominant_integral(spec, lambda)) {
    throw std::invalid_argument("weight " + to_string(lambda) +
                                " is not dominant integral for " + spec.name());
  }
  const Weight r = rho(spec);
  const Weight shifted = lambda + r;
  Rational dim = 1;
  for (const auto& a : positive_roots(spec)) {
    const Rational num = inner_product(spec, shifted, a);
    const Rational den = inner_product(spec, r, a);
    if (num <= 0 || den <= 0) {
      throw std::logic_error("non-positive factor in Weyl product for " + spec.name());
    }
    dim *= num / den;
  }
  if (denominator(dim) != 1) throw std::logic_error("Weyl product is not an integer");
  return numerator(dim);
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

struct BranchingReport {
  int ell = 0;
  int m = 0;
  BigInt symplectic_dim;  // dim L_{C_ell}(m theta)
  BigInt linear_dim;      // dim L_{A_{2ell-1}}(2m omega_1)
  BigInt symmetric_power_dim;  // binom(2ell+2m-1, 2m)

  bool holds() const { return symplectic_dim == linear_dim && linear_dim == symmetric_power_dim; }
};

inline BranchingReport branching_dimensions(int ell, int m) {
  if (ell < 1 || m < 1) throw std::invalid_argument("branching needs ell >= 1 and m >= 1");
  const RootSystemSpec symplectic(Family::C, ell);
  const RootSystemSpec linear(Family::A, 2 * ell - 1);
  BranchingReport report;
  report.ell = ell;
  report.m = m;
  report.symplectic_dim = weyl_dim(symplectic, Rational(m) * highest_root(symplectic));
  report.linear_dim =
      weyl_dim(linear, Weight::epsilon(linear.dimension(), 0, Rational(2 * m)));
  report.symmetric_power_dim = binomial(2L * ell + 2L * m - 1, 2L * m);
  return report;
}

/// Restriction of S^{2m}(C^{2ell}) from sl_{2ell} to sp_{2ell} stays irreducible
/// iff the three dimensions agree.
inline bool verify_branching(int ell, int m) { return branching_dimensions(ell, m).holds(); }

/// Minuscule coweight omega and Gamma = {alpha : omega(alpha) = 1}.
struct MinusculeData {
  Weight omega;
  std::vector<Weight> gamma;
};

/// omega(alpha) for a coweight written in epsilon coordinates.
inline Rational coweight_pairing(const Weight& omega, const Weight& alpha) {
  if (omega.size() != alpha.size()) throw std::invalid_argument("weight length mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < omega.size(); ++i) sum += omega.coords[i] * alpha.coords[i];
  return sum;
}

/// Only type C is supported: omega = (e_1 + ... + e_l) / 2 and
/// Gamma = {e_i + e_j | i <= j}, listed row by row of the upper triangle.
inline MinusculeData minuscule_gamma(const RootSystemSpec& spec) {
  if (spec.family() != Family::C) {
    throw std::invalid_argument("minuscule grading is only implemented for type C, got " +
                                spec.name());
  }
  const std::size_t n = spec.dimension();
  MinusculeData data;
  data.omega = Weight{std::vector<Rational>(n, Rational(1, 2))};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i <= j; ++i) data.gamma.push_back(detail::root(n, i, 1, j, 1));
  }
  return data;
}

}  // namespace affcomb
