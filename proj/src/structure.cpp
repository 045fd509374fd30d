#include "subnorm/structure.hpp"

#include "subnorm/errors.hpp"
#include "subnorm/numtheory.hpp"
#include "subnorm/subgroup.hpp"
#include "subnorm/subgroups.hpp"
#include "subnorm/sylow.hpp"

namespace subnorm {

namespace {

// Iterates term -> next(term) until trivial (true) or fixed (false).
template <typename Next>
bool series_reaches_trivial(const Group& g, Next next) {
  Group term = g;
  for (std::uint64_t step = 0; step <= g.order(); ++step) {
    if (term.order() == 1) return true;
    Group following = next(term);
    if (following.order() == term.order()) return false;
    term = std::move(following);
  }
  throw Error("series exceeded its length cap of |G|");
}

}  // namespace

StructureReport structure_tests(const Group& g) {
  if (g.has_store()) {
    Subgroup whole(g.store(), g.generator_indices());
    bool nilpotent = true;
    for (auto p : prime_divisors(g.order())) {
      if (sylow(g, p).count != 1) {
        nilpotent = false;
        break;
      }
    }
    return {is_solvable(whole), nilpotent};
  }

  auto derived = [](const Group& h) {
    std::vector<Permutation> comms;
    const auto& gens = h.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
    }
    if (comms.empty()) comms.push_back(Permutation::identity(h.degree()));
    return normal_closure(h, comms);
  };
  auto lower_central = [&g](const Group& h) {
    std::vector<Permutation> comms;
    for (const auto& a : h.generators()) {
      for (const auto& b : g.generators()) comms.push_back(commutator(a, b));
    }
    return normal_closure(g, comms);
  };
  return {series_reaches_trivial(g, derived), series_reaches_trivial(g, lower_central)};
}

}  // namespace subnorm
