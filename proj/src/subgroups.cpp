#include "subnorm/subgroups.hpp"

#include "subnorm/errors.hpp"

namespace subnorm {

bool is_subgroup(const Group& h, const Group& g) {
  if (h.degree() != g.degree()) return false;
  for (const auto& x : h.generators()) {
    if (!g.contains(x)) return false;
  }
  return true;
}

bool is_normal(const Group& n, const Group& g) {
  if (!is_subgroup(n, g)) return false;
  for (const auto& x : n.generators()) {
    for (const auto& s : g.generators()) {
      if (!n.contains(conjugate(x, s))) return false;
    }
  }
  return true;
}

Group group_from_indices(const Group& g, std::span<const Index> elements) {
  const auto& store = g.store();
  Subgroup s(store);
  for (Index e : elements) s.add_generator(e);
  return group_from_subgroup(g, s);
}

Group group_from_subgroup(const Group& g, const Subgroup& s) {
  std::vector<Permutation> gens;
  for (Index i : s.generators()) gens.push_back(s.store().element(i));
  if (gens.empty()) gens.push_back(Permutation::identity(g.degree()));
  return Group::from_generators(std::move(gens), g.caps());
}

Subgroup embed(const Group& h, const Group& g) {
  if (!is_subgroup(h, g)) throw DomainError("not a subgroup of the ambient group");
  const auto& store = g.store();
  std::vector<Index> gens;
  for (const auto& x : h.generators()) gens.push_back(store.index_of(x));
  return Subgroup(store, gens);
}

Group centralizer(const Group& g, const Permutation& x) {
  const auto& store = g.store();
  Index xi = g.index_of(x);
  std::vector<Index> elems;
  for (Index i = 0; i < store.size(); ++i) {
    if (store.mul(i, xi) == store.mul(xi, i)) elems.push_back(i);
  }
  return group_from_indices(g, elems);
}

Group normalizer(const Group& g, const Group& h) {
  Subgroup hs = embed(h, g);
  const auto& store = g.store();
  std::vector<Index> elems;
  for (Index i = 0; i < store.size(); ++i) {
    bool normalizes = true;
    for (Index s : hs.generators()) {
      if (!hs.contains(store.conj(s, i))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) elems.push_back(i);
  }
  return group_from_indices(g, elems);
}

Group center(const Group& g) {
  const auto& store = g.store();
  auto gens = g.generator_indices();
  std::vector<Index> elems;
  for (Index i = 0; i < store.size(); ++i) {
    bool central = true;
    for (Index s : gens) {
      if (store.mul(i, s) != store.mul(s, i)) {
        central = false;
        break;
      }
    }
    if (central) elems.push_back(i);
  }
  return group_from_indices(g, elems);
}

Group normal_closure(const Group& k, const std::vector<Permutation>& xs) {
  for (const auto& x : xs) {
    if (!k.contains(x)) throw DomainError(x.to_cycle_string() + " is not in the ambient group");
  }
  if (k.has_store()) {
    const auto& store = k.store();
    std::vector<Index> seeds;
    for (const auto& x : xs) seeds.push_back(store.index_of(x));
    auto gens = k.generator_indices();
    return group_from_subgroup(k, normal_closure(store, gens, seeds));
  }
  // Chain-based fallback: conjugate generators until membership stabilizes.
  std::vector<Permutation> gens;
  for (const auto& x : xs) {
    if (!x.is_identity()) gens.push_back(x);
  }
  if (gens.empty()) return Group::trivial(k.degree(), k.caps());
  StabChain chain(k.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& s : k.generators()) {
      Permutation c = conjugate(gens[i], s);
      if (!chain.contains(c)) {
        gens.push_back(c);
        chain = StabChain(k.degree(), gens);
      }
    }
  }
  return Group::from_generators(std::move(gens), k.caps());
}

}  // namespace subnorm
