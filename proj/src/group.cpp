#include "subnorm/group.hpp"

#include <optional>
#include <string>

#include "subnorm/errors.hpp"

namespace subnorm {

struct Group::State {
  std::size_t degree;
  std::vector<Permutation> generators;
  Config caps;
  StabChain chain;
  std::uint64_t order;
  std::optional<ElementStore> store;
};

Group Group::from_generators(std::vector<Permutation> generators, const Config& caps) {
  if (generators.empty()) throw DomainError("a group needs at least one generator");
  const std::size_t degree = generators.front().degree();
  if (degree == 0) throw DomainError("degree must be positive");
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw DomainError("generators have mixed degrees " + std::to_string(degree) + " and " +
                        std::to_string(g.degree()));
    }
  }
  StabChain chain(degree, generators);
  const std::uint64_t order = chain.order();
  if (order > caps.max_order) {
    throw CapError("group too large: order exceeds the hard cap of " +
                   std::to_string(caps.max_order) + " (--max-order)");
  }
  auto state = std::make_shared<State>(
      State{degree, std::move(generators), caps, std::move(chain), order, std::nullopt});
  if (order <= caps.max_exhaustive) state->store.emplace(state->chain);
  return Group(std::move(state));
}

Group Group::trivial(std::size_t degree, const Config& caps) {
  return from_generators({Permutation::identity(degree)}, caps);
}

std::size_t Group::degree() const noexcept { return state_->degree; }
const std::vector<Permutation>& Group::generators() const noexcept { return state_->generators; }
std::uint64_t Group::order() const noexcept { return state_->order; }
const Config& Group::caps() const noexcept { return state_->caps; }
bool Group::has_store() const noexcept { return state_->store.has_value(); }
const StabChain& Group::chain() const noexcept { return state_->chain; }

const ElementStore& Group::store() const {
  if (!state_->store) {
    throw CapError("operation needs the element store, but order " + std::to_string(order()) +
                   " exceeds the exhaustive cap of " + std::to_string(caps().max_exhaustive) +
                   " (--max-exhaustive)");
  }
  return *state_->store;
}

bool Group::contains(const Permutation& g) const {
  if (g.degree() != degree()) return false;
  if (state_->store) return state_->store->index_of(g) != kNoIndex;
  return state_->chain.contains(g);
}

Index Group::index_of(const Permutation& g) const {
  Index i = g.degree() == degree() ? store().index_of(g) : kNoIndex;
  if (i == kNoIndex) throw DomainError(g.to_cycle_string() + " is not an element of the group");
  return i;
}

std::vector<Index> Group::generator_indices() const {
  std::vector<Index> result;
  for (const auto& g : generators()) result.push_back(index_of(g));
  return result;
}

}  // namespace subnorm
