#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "subnorm/element_store.hpp"

namespace subnorm {

/// A subgroup of a stored group, held as element indices of that store.
///
/// Grown one generator at a time; each step closes under right
/// multiplication by the generators, touching only the new elements.
class Subgroup {
 public:
  /// The trivial subgroup.
  explicit Subgroup(const ElementStore& store);
  Subgroup(const ElementStore& store, std::span<const Index> generators);

  /// Returns false (and changes nothing) when g is already a member.
  bool add_generator(Index g);

  bool contains(Index i) const { return member_[i] != 0; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Index>& elements() const noexcept { return elements_; }
  const std::vector<Index>& generators() const noexcept { return generators_; }
  const ElementStore& store() const noexcept { return *store_; }

  std::vector<Index> sorted_elements() const;

  /// Subgroup with exactly the given element set; throws DomainError if the
  /// set is not closed.
  static Subgroup from_element_set(const ElementStore& store, std::span<const Index> elements);

 private:
  const ElementStore* store_;
  std::vector<Index> elements_;
  std::vector<Index> generators_;
  std::vector<char> member_;
};

/// Smallest subgroup containing `seeds` that is normalized by every element of
/// `ambient_generators`.
Subgroup normal_closure(const ElementStore& store, std::span<const Index> ambient_generators,
                        std::span<const Index> seeds);

/// K' as the normal closure in K of the commutators of K's generators.
Subgroup derived_subgroup(const Subgroup& k);

bool is_solvable(const Subgroup& k);

/// Nilpotent iff for every prime p the p-elements number exactly |K|_p
/// (each Sylow subgroup is then unique, hence normal).
bool is_nilpotent(const Subgroup& k);

}  // namespace subnorm
