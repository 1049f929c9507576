#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mudeg {

using Point = std::uint32_t;

/// A bijection on {0, ..., n-1}.
///
/// Products are read left to right: (p * q)(i) = q(p(i)), i.e. "apply p, then
/// q". Conjugation follows the same convention, x^g = g^-1 * x * g.
class Permutation {
 public:
  /// The identity on zero points.
  Permutation() = default;

  /// The identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Builds a permutation from disjoint cycles on `degree` points.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  /// Parses 0-based cycle notation such as "(0 1 2)(3 4)" or "()".
  static Permutation parse_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Any integer exponent; negative powers go through the inverse.
  Permutation pow(long long exponent) const;

  /// Non-trivial cycles, each starting at its least point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// 0-based cycle notation, "()" for the identity.
  std::string to_string() const;

  /// Same permutation acting on the points [offset, offset + degree) of a
  /// larger set of `new_degree` points; all other points are fixed.
  Permutation shifted(std::size_t offset, std::size_t new_degree) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(Trusted, std::vector<Point> images) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::vector<Point> images_;
};

/// "Apply p, then q". Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// g^-1 * x * g.
Permutation conjugate(const Permutation& x, const Permutation& g);

/// Least k >= 1 with p^k = 1, the lcm of the cycle lengths.
std::uint64_t element_order(const Permutation& p);

/// p^-1 q^-1 p q.
Permutation commutator(const Permutation& p, const Permutation& q);

bool commute(const Permutation& p, const Permutation& q);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace mudeg
