#include "subnorm/sylow.hpp"

#include <algorithm>
#include <map>

#include "subnorm/errors.hpp"
#include "subnorm/numtheory.hpp"
#include "subnorm/subgroup.hpp"
#include "subnorm/subgroups.hpp"

namespace subnorm {

namespace {

bool normalizes(const ElementStore& store, const Subgroup& p, Index g) {
  for (Index s : p.generators()) {
    if (!p.contains(store.conj(s, g))) return false;
  }
  return true;
}

}  // namespace

std::uint64_t SylowSystem::containing(Index x) const {
  std::uint64_t n = 0;
  for (const auto& s : all_sylows) {
    if (std::binary_search(s.begin(), s.end(), x)) ++n;
  }
  return n;
}

SylowSystem sylow(const Group& g, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const auto& store = g.store();
  const std::uint64_t target = p_part(g.order(), p);

  Subgroup current(store);
  while (current.size() < target) {
    Index found = kNoIndex;
    for (Index i = 0; i < store.size(); ++i) {
      if (current.contains(i) || !is_power_of(store.order_of(i), p)) continue;
      if (normalizes(store, current, i)) {
        found = i;
        break;
      }
    }
    if (found == kNoIndex) throw Error("Sylow growth found no p-element in the normalizer");
    current.add_generator(found);
  }

  std::uint64_t normalizer_order = 0;
  for (Index i = 0; i < store.size(); ++i) {
    if (normalizes(store, current, i)) ++normalizer_order;
  }

  auto gens = g.generator_indices();
  std::vector<std::vector<Index>> orbit{current.sorted_elements()};
  std::map<std::vector<Index>, std::size_t> seen{{orbit.front(), 0}};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (Index s : gens) {
      std::vector<Index> image;
      image.reserve(orbit[i].size());
      for (Index h : orbit[i]) image.push_back(store.conj(h, s));
      std::sort(image.begin(), image.end());
      if (seen.emplace(image, orbit.size()).second) orbit.push_back(std::move(image));
    }
  }

  return SylowSystem{p, group_from_subgroup(g, current), orbit.size(), std::move(orbit),
                     normalizer_order};
}

std::vector<Index> p_core_indices(const SylowSystem& system) {
  std::vector<Index> core = system.all_sylows.front();
  for (std::size_t i = 1; i < system.all_sylows.size(); ++i) {
    std::vector<Index> next;
    const auto& s = system.all_sylows[i];
    std::set_intersection(core.begin(), core.end(), s.begin(), s.end(), std::back_inserter(next));
    core = std::move(next);
  }
  return core;
}

Group p_core(const Group& g, std::uint64_t p) {
  return group_from_indices(g, p_core_indices(sylow(g, p)));
}

}  // namespace subnorm
