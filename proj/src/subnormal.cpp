#include "subnorm/subnormal.hpp"

#include <algorithm>

#include "subnorm/classes.hpp"
#include "subnorm/errors.hpp"
#include "subnorm/numtheory.hpp"
#include "subnorm/subgroups.hpp"

namespace subnorm {

bool is_subnormal(const Subgroup& k, Index x) {
  if (!k.contains(x)) throw DomainError("x is not an element of the subgroup");
  const auto& store = k.store();
  const std::uint64_t target = store.order_of(x);
  if (k.size() == target || prime_of_prime_power(k.size())) return true;

  const Index seed[] = {x};
  std::size_t previous = k.size();
  Subgroup current = normal_closure(store, k.generators(), seed);
  // Strictly decreasing until it stalls, so at most log2|K| rounds.
  while (current.size() != previous) {
    if (current.size() == target) return true;
    previous = current.size();
    current = normal_closure(store, current.generators(), seed);
  }
  return current.size() == target;
}

bool is_subnormal(const Permutation& x, const Group& h) {
  if (!h.contains(x)) throw DomainError("x is not an element of H");
  if (h.has_store()) {
    Subgroup whole(h.store(), h.generator_indices());
    return is_subnormal(whole, h.index_of(x));
  }
  const std::uint64_t target = x.order();
  Group current = h;
  while (true) {
    if (current.order() == target) return true;
    Group next = normal_closure(current, {x});
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
}

std::vector<Index> pair_orbits(const ElementStore& store, Index x) {
  const std::size_t n = store.size();
  Subgroup centralizer(store);
  for (Index c = 0; c < n; ++c) {
    if (!centralizer.contains(c) && store.mul(x, c) == store.mul(c, x)) {
      centralizer.add_generator(c);
    }
  }

  std::vector<Index> rep(n, kNoIndex);
  std::vector<Index> queue;
  for (Index s = 0; s < n; ++s) {
    if (rep[s] != kNoIndex) continue;
    rep[s] = s;
    queue.assign(1, s);
    auto visit = [&](Index e) {
      if (rep[e] == kNoIndex) {
        rep[e] = s;
        queue.push_back(e);
      }
    };
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Index h = queue[q];
      visit(store.inv(h));
      visit(store.mul(x, h));
      visit(store.mul(h, x));
      for (Index c : centralizer.generators()) visit(store.conj(h, c));
    }
  }
  return rep;
}

std::vector<Index> subnormalizer_bruteforce(const Group& g, Index x,
                                            const BruteForceOptions& options) {
  const auto& store = g.store();
  const std::size_t n = store.size();
  std::vector<Index> rep;
  if (options.use_symmetry) rep = pair_orbits(store, x);

  // -1 unknown, 0 no, 1 yes
  std::vector<signed char> verdict(n, -1);
  signed char whole = -1;
  for (Index i = 0; i < n; ++i) {
    if (verdict[i] >= 0) continue;
    if (options.use_symmetry && rep[i] != i) {
      verdict[i] = verdict[rep[i]];
      continue;
    }
    Subgroup k(store);
    k.add_generator(x);
    k.add_generator(i);
    bool sn;
    if (k.size() == n) {
      if (whole < 0) whole = is_subnormal(k, x) ? 1 : 0;
      sn = whole == 1;
    } else {
      sn = is_subnormal(k, x);
    }
    verdict[i] = sn ? 1 : 0;
    // <x> sn K = <x,g> gives <x> sn <x,h> for every h in K.
    if (sn && options.use_symmetry) {
      for (Index e : k.elements()) verdict[e] = 1;
    }
  }

  std::vector<Index> result;
  for (Index i = 0; i < n; ++i) {
    if (verdict[i] == 1) result.push_back(i);
  }
  return result;
}

std::vector<Index> subnormalizer_bruteforce(const Group& g, const Permutation& x,
                                            const BruteForceOptions& options) {
  return subnormalizer_bruteforce(g, g.index_of(x), options);
}

SubnormalEngine::SubnormalEngine(Group g) : group_(std::move(g)) {
  (void)group_.store();
}

const SylowSystem& SubnormalEngine::sylow_system(std::uint64_t p) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = sylows_.find(p);
  if (it == sylows_.end()) {
    it = sylows_.emplace(p, std::make_unique<SylowSystem>(sylow(group_, p))).first;
  }
  return *it->second;
}

std::uint64_t SubnormalEngine::order_fast(Index x) const {
  const auto& store = group_.store();
  const std::uint64_t ord = store.order_of(x);
  if (ord == 1) return group_.order();
  if (auto p = prime_of_prime_power(ord)) {
    const auto& sys = sylow_system(*p);
    return sys.containing(x) * sys.normalizer_order;
  }
  return subnormalizer_bruteforce(group_, x).size();
}

SubnormalizerReport SubnormalEngine::casolo(Index x, std::uint64_t p) const {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const auto& store = group_.store();
  if (!is_power_of(store.order_of(x), p)) {
    throw DomainError("x has order " + std::to_string(store.order_of(x)) + ", not a power of " +
                      std::to_string(p));
  }
  const auto& sys = sylow_system(p);
  auto cls = conjugacy_class_of(group_, x);
  const auto& first = sys.all_sylows.front();

  SubnormalizerReport r;
  r.x = store.element(x);
  r.prime = p;
  r.lambda = sys.containing(x);
  r.alpha = static_cast<std::uint64_t>(std::count_if(cls.begin(), cls.end(), [&](Index c) {
    return std::binary_search(first.begin(), first.end(), c);
  }));
  r.n_p = sys.count;
  r.normalizer_order = sys.normalizer_order;
  r.centralizer_order = group_.order() / cls.size();
  r.subnormalizer_order_bruteforce = subnormalizer_bruteforce(group_, x).size();
  r.identities_hold = r.subnormalizer_order_bruteforce == r.lambda * r.normalizer_order &&
                      r.subnormalizer_order_bruteforce == r.alpha * r.centralizer_order;
  return r;
}

SubnormalizerReport casolo_report(const Group& g, const Permutation& x, std::uint64_t p) {
  SubnormalEngine engine(g);
  return engine.casolo(g.index_of(x), p);
}

std::uint64_t subnormalizer_order_fast(const Group& g, const Permutation& x) {
  SubnormalEngine engine(g);
  return engine.order_fast(g.index_of(x));
}

}  // namespace subnorm
