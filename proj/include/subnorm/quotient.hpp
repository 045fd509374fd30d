#pragma once

#include <cstddef>
#include <vector>

#include "subnorm/group.hpp"

namespace subnorm {

/// G acting on the right cosets of a normal subgroup N; the image is a
/// faithful permutation representation of G/N.
class QuotientAction {
 public:
  QuotientAction(Group ambient, Group image, std::vector<std::size_t> coset_of,
                 std::vector<Index> representatives);

  const Group& ambient() const noexcept { return ambient_; }
  const Group& image() const noexcept { return image_; }
  std::size_t coset_count() const noexcept { return representatives_.size(); }
  std::size_t coset_of(Index g) const { return coset_of_[g]; }

  /// The element map g -> gN as a permutation of the cosets.
  Permutation image_of(Index g) const;
  Permutation image_of(const Permutation& g) const;

 private:
  Group ambient_;
  Group image_;
  std::vector<std::size_t> coset_of_;
  std::vector<Index> representatives_;
};

/// DomainError unless N is normal in G.
QuotientAction quotient_action(const Group& g, const Group& n);

}  // namespace subnorm
