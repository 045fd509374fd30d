#include "subnorm/quotient.hpp"

#include "subnorm/errors.hpp"
#include "subnorm/subgroups.hpp"

namespace subnorm {

namespace {

constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

Permutation coset_permutation(const ElementStore& store, const std::vector<std::size_t>& coset_of,
                              const std::vector<Index>& reps, Index g) {
  std::vector<Point> images(reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) {
    images[c] = static_cast<Point>(coset_of[store.mul(reps[c], g)]);
  }
  return Permutation::from_images_unchecked(std::move(images));
}

}  // namespace

QuotientAction::QuotientAction(Group ambient, Group image, std::vector<std::size_t> coset_of,
                               std::vector<Index> representatives)
    : ambient_(std::move(ambient)),
      image_(std::move(image)),
      coset_of_(std::move(coset_of)),
      representatives_(std::move(representatives)) {}

Permutation QuotientAction::image_of(Index g) const {
  return coset_permutation(ambient_.store(), coset_of_, representatives_, g);
}

Permutation QuotientAction::image_of(const Permutation& g) const {
  return image_of(ambient_.index_of(g));
}

QuotientAction quotient_action(const Group& g, const Group& n) {
  if (!is_normal(n, g)) throw DomainError("quotient_action: N is not normal in G");
  const auto& store = g.store();
  Subgroup ns = embed(n, g);

  std::vector<std::size_t> coset_of(store.size(), kUnassigned);
  std::vector<Index> reps;
  for (Index i = 0; i < store.size(); ++i) {
    if (coset_of[i] != kUnassigned) continue;
    for (Index h : ns.elements()) coset_of[store.mul(h, i)] = reps.size();
    reps.push_back(i);
  }

  std::vector<Permutation> gens;
  for (Index s : g.generator_indices()) gens.push_back(coset_permutation(store, coset_of, reps, s));
  Group image = Group::from_generators(std::move(gens), g.caps());
  return QuotientAction(g, std::move(image), std::move(coset_of), std::move(reps));
}

}  // namespace subnorm
