#pragma once

#include <cstdint>
#include <vector>

#include "subnorm/group.hpp"

namespace subnorm {

/// The Sylow p-subgroups of a stored group.
struct SylowSystem {
  std::uint64_t prime;
  Group one_sylow;
  /// n_p(G)
  std::uint64_t count;
  /// Each Sylow as sorted store indices of the ambient group; all_sylows[0] is one_sylow.
  std::vector<std::vector<Index>> all_sylows;
  /// |N_G(P)| for P = one_sylow, computed by filtering.
  std::uint64_t normalizer_order;

  /// Number of Sylows containing the element (lambda for p-elements).
  std::uint64_t containing(Index x) const;
};

/// Grows a p-subgroup by p-elements of its normalizer until it reaches |G|_p,
/// then takes the conjugation orbit. For p not dividing |G| the system is the
/// trivial subgroup with count 1. DomainError when p is not prime.
SylowSystem sylow(const Group& g, std::uint64_t p);

/// O_p(G) as the intersection of all Sylow p-subgroups, as sorted indices.
std::vector<Index> p_core_indices(const SylowSystem& system);

Group p_core(const Group& g, std::uint64_t p);

}  // namespace subnorm
