#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "subnorm/permutation.hpp"

namespace subnorm {

/// Stabilizer chain over the full base 0, 1, ..., n-1 (Knuth's variant of
/// Schreier-Sims). Level k holds coset representatives of G_(0..k) in G_(0..k-1).
class StabChain {
 public:
  StabChain(std::size_t degree, const std::vector<Permutation>& generators);

  std::size_t degree() const noexcept { return degree_; }

  /// Product of the basic orbit lengths; saturates at UINT64_MAX.
  std::uint64_t order() const noexcept;

  bool contains(const Permutation& g) const;

  /// Points with a nontrivial basic orbit. Only the identity fixes all of them.
  std::vector<Point> base() const;

  std::size_t orbit_size(std::size_t level) const { return orbit_[level].size(); }

  /// Every group element, unordered. The caller is responsible for size caps.
  std::vector<Permutation> elements() const;

 private:
  struct Entry {
    Permutation t;
    Permutation t_inv;
  };

  void add(std::size_t level, const Permutation& g);
  void extend(std::size_t level, const Permutation& t);
  bool sifts(std::size_t level, Permutation g) const;

  std::size_t degree_;
  std::vector<std::vector<std::optional<Entry>>> table_;
  std::vector<std::vector<Permutation>> strong_;
  std::vector<std::vector<Point>> orbit_;
};

}  // namespace subnorm
