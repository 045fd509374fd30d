#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "subnorm/config.hpp"
#include "subnorm/element_store.hpp"
#include "subnorm/permutation.hpp"
#include "subnorm/stab_chain.hpp"

namespace subnorm {

/// Immutable permutation group. Copies share state.
///
/// Always carries a stabilizer chain (exact order, membership). Groups of order
/// at most Config::max_exhaustive also carry a complete ElementStore, which
/// the class, centralizer and subnormalizer machinery requires.
class Group {
 public:
  /// Throws DomainError on empty or mixed-degree input and CapError when the
  /// order exceeds Config::max_order.
  static Group from_generators(std::vector<Permutation> generators, const Config& caps = {});

  static Group trivial(std::size_t degree, const Config& caps = {});

  std::size_t degree() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  std::uint64_t order() const noexcept;
  const Config& caps() const noexcept;

  bool has_store() const noexcept;
  /// Throws CapError when the group is beyond the exhaustive cap.
  const ElementStore& store() const;
  const StabChain& chain() const noexcept;

  bool contains(const Permutation& g) const;

  /// Store index of g; DomainError if g is not an element.
  Index index_of(const Permutation& g) const;
  std::vector<Index> generator_indices() const;

 private:
  struct State;
  explicit Group(std::shared_ptr<const State> state) : state_(std::move(state)) {}
  std::shared_ptr<const State> state_;
};

}  // namespace subnorm
