#include "subnorm/subgroup.hpp"

#include <algorithm>
#include <map>

#include "subnorm/errors.hpp"
#include "subnorm/numtheory.hpp"

namespace subnorm {

Subgroup::Subgroup(const ElementStore& store)
    : store_(&store), elements_{0}, member_(store.size(), 0) {
  member_[0] = 1;
}

Subgroup::Subgroup(const ElementStore& store, std::span<const Index> generators)
    : Subgroup(store) {
  for (Index g : generators) add_generator(g);
}

bool Subgroup::add_generator(Index g) {
  if (member_[g]) return false;
  generators_.push_back(g);
  const std::size_t old_size = elements_.size();
  auto visit = [&](Index e) {
    if (!member_[e]) {
      member_[e] = 1;
      elements_.push_back(e);
    }
  };
  for (std::size_t i = 0; i < old_size; ++i) visit(store_->mul(elements_[i], g));
  for (std::size_t i = old_size; i < elements_.size(); ++i) {
    for (Index s : generators_) visit(store_->mul(elements_[i], s));
  }
  return true;
}

std::vector<Index> Subgroup::sorted_elements() const {
  std::vector<Index> result = elements_;
  std::sort(result.begin(), result.end());
  return result;
}

Subgroup Subgroup::from_element_set(const ElementStore& store, std::span<const Index> elements) {
  Subgroup s(store);
  for (Index e : elements) s.add_generator(e);
  if (s.size() != elements.size()) {
    throw DomainError("element set of size " + std::to_string(elements.size()) +
                      " is not a subgroup (closure has size " + std::to_string(s.size()) + ")");
  }
  return s;
}

Subgroup normal_closure(const ElementStore& store, std::span<const Index> ambient_generators,
                        std::span<const Index> seeds) {
  Subgroup m(store, seeds);
  for (std::size_t i = 0; i < m.generators().size(); ++i) {
    Index gen = m.generators()[i];
    for (Index k : ambient_generators) {
      Index c = store.conj(gen, k);
      if (!m.contains(c)) m.add_generator(c);
    }
  }
  return m;
}

Subgroup derived_subgroup(const Subgroup& k) {
  const auto& store = k.store();
  const auto& gens = k.generators();
  std::vector<Index> commutators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Index a = gens[i], b = gens[j];
      commutators.push_back(
          store.mul(store.mul(store.inv(a), store.inv(b)), store.mul(a, b)));
    }
  }
  return normal_closure(store, gens, commutators);
}

bool is_solvable(const Subgroup& k) {
  Subgroup current = k;
  // Each step strictly shrinks the term, so |K| bounds the series length.
  for (std::size_t step = 0; step <= k.size(); ++step) {
    if (current.size() == 1) return true;
    Subgroup next = derived_subgroup(current);
    if (next.size() == current.size()) return false;
    current = std::move(next);
  }
  throw Error("derived series exceeded its length cap");
}

bool is_nilpotent(const Subgroup& k) {
  const auto& store = k.store();
  std::map<std::uint64_t, std::uint64_t> p_elements;
  auto primes = prime_divisors(k.size());
  for (Index e : k.elements()) {
    std::uint64_t ord = store.order_of(e);
    for (auto p : primes) {
      if (is_power_of(ord, p)) ++p_elements[p];
    }
  }
  for (auto p : primes) {
    if (p_elements[p] != p_part(k.size(), p)) return false;
  }
  return true;
}

}  // namespace subnorm
