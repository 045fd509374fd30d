#include "subnorm/spr.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "subnorm/classes.hpp"
#include "subnorm/errors.hpp"
#include "subnorm/numtheory.hpp"
#include "subnorm/products.hpp"
#include "subnorm/quotient.hpp"
#include "subnorm/subgroups.hpp"

namespace subnorm {

namespace {

ExactRatio ratio(std::uint64_t num, std::uint64_t den) {
  return ExactRatio(ExactRatio::Integer(num), ExactRatio::Integer(den));
}

struct PairCounts {
  std::uint64_t nilpotent = 0;
  std::uint64_t subnormal = 0;
  std::uint64_t solvable = 0;
  std::uint64_t violations = 0;
};

PairCounts classify_pairs(const ElementStore& store, Index x) {
  const std::size_t n = store.size();
  auto rep = pair_orbits(store, x);
  std::vector<std::uint64_t> weight(n, 0);
  for (Index i = 0; i < n; ++i) ++weight[rep[i]];

  PairCounts counts;
  struct Verdict {
    bool nil, sn, sol;
  };
  std::optional<Verdict> whole;
  for (Index y = 0; y < n; ++y) {
    if (rep[y] != y) continue;
    Subgroup k(store);
    k.add_generator(x);
    k.add_generator(y);
    Verdict v;
    if (k.size() == n && whole) {
      v = *whole;
    } else {
      v = {is_nilpotent(k), is_subnormal(k, x), is_solvable(k)};
      if (k.size() == n) whole = v;
    }
    const auto w = weight[y];
    if (v.nil) counts.nilpotent += w;
    if (v.sn) counts.subnormal += w;
    if (v.sol) counts.solvable += w;
    if ((v.nil && !v.sn) || (v.sn && !v.sol)) counts.violations += w;
  }
  return counts;
}

// Runs body(i) for i in [0, count) on `jobs` threads.
template <typename Body>
void parallel_for(std::size_t count, unsigned jobs, Body body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, count); ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

ExactRatio spr_element(const SubnormalEngine& engine, Index x) {
  return ratio(engine.order_fast(x), engine.group().order());
}

ExactRatio spr_element(const Group& g, const Permutation& x) {
  SubnormalEngine engine(g);
  return spr_element(engine, g.index_of(x));
}

bool SprReport::chain_ordering_holds() const {
  return pairs && pairs->dn <= spr_total && spr_total <= pairs->ds;
}

bool SprReport::prose_ordering_holds() const {
  return pairs && pairs->ds <= spr_total && spr_total <= pairs->dn;
}

SprReport spr_group(const Group& g, const SprOptions& options, std::string group_id) {
  const auto& store = g.store();
  if (options.pair_degrees && g.order() > g.caps().max_pairs) {
    throw CapError("pair enumeration needs |G| <= " + std::to_string(g.caps().max_pairs) +
                   " (--max-pairs), got " + std::to_string(g.order()));
  }
  SubnormalEngine engine(g);
  auto classes = conjugacy_classes(g);

  std::vector<std::uint64_t> sizes(classes.size());
  std::vector<PairCounts> pair_counts(classes.size());
  parallel_for(classes.size(), g.caps().jobs, [&](std::size_t i) {
    sizes[i] = engine.order_fast(classes[i].representative_index);
    if (options.pair_degrees) pair_counts[i] = classify_pairs(store, classes[i].representative_index);
  });

  SprReport report;
  report.group_id = std::move(group_id);
  report.order = g.order();
  ExactRatio::Integer weighted = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    report.rows.push_back(
        {c.representative, c.representative_index, c.size, c.element_order, ratio(sizes[i], g.order())});
    weighted += ExactRatio::Integer(c.size) * sizes[i];
  }
  const ExactRatio::Integer n = g.order();
  report.spr_total = ExactRatio(weighted, n * n);

  if (options.pair_degrees) {
    ExactRatio::Integer nil = 0, sol = 0;
    PairCensus census;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const ExactRatio::Integer size = classes[i].size;
      nil += size * pair_counts[i].nilpotent;
      sol += size * pair_counts[i].solvable;
      census.implication_violations += classes[i].size * pair_counts[i].violations;
      census.subnormal_pairs += classes[i].size * pair_counts[i].subnormal;
    }
    census.dn = ExactRatio(nil, n * n);
    census.ds = ExactRatio(sol, n * n);
    report.pairs = census;
  }
  return report;
}

ExactRatio fpr(const Group& g, const Group& h, const Permutation& x) {
  if (!is_subgroup(h, g)) throw DomainError("H is not a subgroup of G");
  auto cls = conjugacy_class_of(g, g.index_of(x));
  const auto& store = g.store();
  std::uint64_t inside = 0;
  for (Index c : cls) {
    if (h.contains(store.element(c))) ++inside;
  }
  return ratio(inside, cls.size());
}

ExactRatio fpr_on_cosets(const Group& g, const Group& h, const Permutation& x) {
  if (!is_subgroup(h, g)) throw DomainError("H is not a subgroup of G");
  const auto& store = g.store();
  Index xi = g.index_of(x);
  auto member = embed(h, g);
  // Hg is fixed by x iff g x g^-1 lies in H.
  std::uint64_t hits = 0;
  for (Index i = 0; i < store.size(); ++i) {
    if (member.contains(store.mul(store.mul(i, xi), store.inv(i)))) ++hits;
  }
  return ratio(hits, g.order());
}

std::vector<OpViolation> check_op_criterion(const Group& g) {
  SubnormalEngine engine(g);
  const auto& store = g.store();
  std::vector<OpViolation> violations;
  for (const auto& c : conjugacy_classes(g)) {
    auto p = prime_of_prime_power(c.element_order);
    if (!p) continue;
    const Index x = c.representative_index;
    const auto spr = spr_element(engine, x);
    auto core = p_core_indices(engine.sylow_system(*p));
    std::uint64_t r = 0;
    for (std::uint64_t q = c.element_order; q > 1; q /= *p) ++r;
    std::uint64_t pk = 1;
    for (std::uint64_t k = 1; k <= r; ++k) {
      const std::uint64_t previous = pk;  // p^(k-1)
      pk *= *p;
      if (spr <= ratio(1, pk + 1)) continue;
      if (!std::binary_search(core.begin(), core.end(), store.pow(x, previous))) {
        violations.push_back({c.representative, *p, k});
      }
    }
  }
  return violations;
}

MonotonicityVerdict check_monotonicity(const Group& g, const Group& h) {
  if (!is_subgroup(h, g)) throw DomainError("H is not a subgroup of G");
  MonotonicityVerdict verdict;
  verdict.h_normal = is_normal(h, g);
  SubnormalEngine eg(g);
  SubnormalEngine eh(h);
  for (const auto& c : conjugacy_classes(h)) {
    if (c.element_order != 1 && !prime_of_prime_power(c.element_order)) continue;
    const auto spr_g = spr_element(eg, g.index_of(c.representative));
    const auto spr_h = spr_element(eh, c.representative_index);
    ++verdict.elements_checked;
    const bool ok = verdict.h_normal ? spr_g == spr_h : spr_g <= spr_h;
    if (!ok) verdict.failures.push_back({c.representative, spr_g, spr_h});
  }
  return verdict;
}

QuotientVerdict check_quotient_lemmas(const Group& g, const Group& n) {
  auto q = quotient_action(g, n);
  QuotientVerdict verdict;
  verdict.spr_g = spr_group(g).spr_total;
  verdict.spr_quotient = spr_group(q.image()).spr_total;

  auto z = center(g);
  verdict.central = is_subgroup(n, z);
  if (verdict.central) {
    SubnormalEngine eg(g);
    SubnormalEngine eq(q.image());
    for (const auto& c : conjugacy_classes(g)) {
      if (c.element_order != 1 && !prime_of_prime_power(c.element_order)) continue;
      const auto image = q.image_of(c.representative_index);
      ++verdict.elements_matched;
      if (spr_element(eg, c.representative_index) !=
          spr_element(eq, q.image().index_of(image))) {
        verdict.mismatches.push_back(c.representative);
      }
    }
  }
  return verdict;
}

Permutation p_power_part(const Permutation& x, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const std::uint64_t ord = x.order();
  return x.pow(static_cast<std::int64_t>(ord / p_part(ord, p)));
}

WreathCycleVerdict wreath_cycle_bound_check(const Group& l, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  std::vector<Point> cycle(p);
  for (std::size_t i = 0; i < p; ++i) cycle[i] = static_cast<Point>(i);
  const auto sigma = Permutation::from_cycles(p, {cycle});
  const auto top = Group::from_generators({sigma}, l.caps());
  const auto g = power_wreath(l, p, top);

  WreathCycleVerdict v;
  v.group_order = g.order();
  v.x = wreath_top_element(l.degree(), sigma);
  v.spr = spr_element(g, v.x);
  ExactRatio::Integer denom = 1;
  const auto n_p = sylow(l, p).count;
  for (std::uint64_t i = 1; i < p; ++i) denom *= n_p;
  v.bound = ExactRatio(1, denom);
  v.holds = v.spr <= v.bound;
  return v;
}

}  // namespace subnorm
