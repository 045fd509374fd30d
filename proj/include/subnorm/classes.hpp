#pragma once

#include <cstdint>
#include <vector>

#include "subnorm/group.hpp"

namespace subnorm {

struct ConjugacyClass {
  Permutation representative;  // lexicographically least member
  Index representative_index;
  std::uint64_t size;
  std::uint64_t centralizer_order;
  std::uint64_t element_order;
  std::vector<Index> members;  // sorted store indices of the ambient group
};

/// All classes, ordered by (element order, size, representative).
/// Needs the element store.
std::vector<ConjugacyClass> conjugacy_classes(const Group& g);

/// x^G as sorted store indices.
std::vector<Index> conjugacy_class_of(const Group& g, Index x);

}  // namespace subnorm
