#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace subnorm {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, stored as its image sequence.
///
/// Products compose left to right: (p * q)[i] == q[p[i]], i.e. apply p, then q.
class Permutation {
 public:
  Permutation() = default;

  /// Throws DomainError unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// No bijection check; the caller guarantees validity.
  static Permutation from_images_unchecked(std::vector<Point> images);

  /// Builds from 0-based disjoint cycles. Throws DomainError on repeated or
  /// out-of-range points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  /// Parses 1-based cycle notation such as "(1,2,3)(4,5)" or "(1 2 3)".
  static Permutation parse_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;

  /// Least k > 0 with p^k = 1, the lcm of the cycle lengths.
  std::uint64_t order() const;

  /// Nontrivial cycles, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// 1-based cycle notation; the identity prints as "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Apply p, then q. Throws DomainError on degree mismatch.
Permutation operator*(const Permutation& p, const Permutation& q);

/// g^-1 x g
Permutation conjugate(const Permutation& x, const Permutation& g);

/// g^-1 h^-1 g h
Permutation commutator(const Permutation& g, const Permutation& h);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace subnorm
