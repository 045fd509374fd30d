#include "subnorm/classes.hpp"

#include <algorithm>
#include <tuple>

namespace subnorm {

namespace {

std::vector<Index> orbit(const ElementStore& store, const std::vector<Index>& gens, Index x,
                         std::vector<char>& seen) {
  std::vector<Index> members{x};
  seen[x] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Index s : gens) {
      Index c = store.conj(members[i], s);
      if (!seen[c]) {
        seen[c] = 1;
        members.push_back(c);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

std::vector<ConjugacyClass> conjugacy_classes(const Group& g) {
  const auto& store = g.store();
  auto gens = g.generator_indices();
  std::vector<char> seen(store.size(), 0);
  std::vector<ConjugacyClass> result;
  for (Index i = 0; i < store.size(); ++i) {
    if (seen[i]) continue;
    auto members = orbit(store, gens, i, seen);
    ConjugacyClass c;
    c.representative_index = members.front();
    c.representative = store.element(members.front());
    c.size = members.size();
    c.centralizer_order = g.order() / c.size;
    c.element_order = store.order_of(members.front());
    c.members = std::move(members);
    result.push_back(std::move(c));
  }
  std::sort(result.begin(), result.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    return std::tie(a.element_order, a.size, a.representative_index) <
           std::tie(b.element_order, b.size, b.representative_index);
  });
  return result;
}

std::vector<Index> conjugacy_class_of(const Group& g, Index x) {
  const auto& store = g.store();
  std::vector<char> seen(store.size(), 0);
  return orbit(store, g.generator_indices(), x, seen);
}

}  // namespace subnorm
