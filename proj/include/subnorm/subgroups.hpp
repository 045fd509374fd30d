#pragma once

#include <span>
#include <vector>

#include "subnorm/group.hpp"
#include "subnorm/subgroup.hpp"

namespace subnorm {

bool is_subgroup(const Group& h, const Group& g);
bool is_normal(const Group& n, const Group& g);

/// Group generated by a subset of G's store; generators chosen greedily in
/// index order, so the result is deterministic.
Group group_from_indices(const Group& g, std::span<const Index> elements);
Group group_from_subgroup(const Group& g, const Subgroup& s);

/// H's elements as a Subgroup of G's store. DomainError unless H <= G.
Subgroup embed(const Group& h, const Group& g);

/// C_G(x) by filtering the element store. DomainError unless x is in G.
Group centralizer(const Group& g, const Permutation& x);

/// N_G(H) by filtering. DomainError unless H <= G.
Group normalizer(const Group& g, const Group& h);

Group center(const Group& g);

/// Smallest subgroup of K containing X and normalized by K.
/// DomainError unless X is contained in K. Works without an element store.
Group normal_closure(const Group& k, const std::vector<Permutation>& xs);

}  // namespace subnorm
