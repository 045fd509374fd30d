#include "subnorm/counting.hpp"

#include <algorithm>

#include "subnorm/classes.hpp"
#include "subnorm/errors.hpp"
#include "subnorm/numtheory.hpp"
#include "subnorm/products.hpp"
#include "subnorm/quotient.hpp"
#include "subnorm/structure.hpp"
#include "subnorm/subgroup.hpp"
#include "subnorm/subgroups.hpp"
#include "subnorm/subnormal.hpp"
#include "subnorm/sylow.hpp"

namespace subnorm {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

bool normalizes(const Group& n, const Permutation& g) {
  for (const auto& s : n.generators()) {
    if (!n.contains(conjugate(s, g))) return false;
  }
  return true;
}

std::uint64_t coset_p_elements(const Group& n, const Permutation& g, std::uint64_t p) {
  const auto& store = n.store();
  std::uint64_t count = 0;
  for (Index i = 0; i < store.size(); ++i) {
    if (is_power_of((store.element(i) * g).order(), p)) ++count;
  }
  return count;
}

// Why `factors` is not a direct decomposition of N into g-invariant parts,
// or empty when it is.
std::string factorization_problem(const Group& n, const Permutation& g,
                                  const std::vector<Group>& factors) {
  std::uint64_t product = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    if (f.degree() != n.degree() || !is_subgroup(f, n)) {
      return "factor " + std::to_string(i + 1) + " is not a subgroup of N";
    }
    if (!normalizes(f, g)) return "factor " + std::to_string(i + 1) + " is not g-invariant";
    product *= f.order();
    for (std::size_t j = 0; j < i; ++j) {
      for (const auto& a : f.generators()) {
        for (const auto& b : factors[j].generators()) {
          if (a * b != b * a) {
            return "factors " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                   " do not commute";
          }
        }
      }
    }
  }
  if (product != n.order()) return "factor orders do not multiply to |N|";
  return {};
}

std::uint64_t upow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

}  // namespace

PElementCensus count_p_elements(const Group& g, std::uint64_t p) {
  require_prime(p);
  const auto& store = g.store();
  PElementCensus c;
  c.prime = p;
  for (Index i = 0; i < store.size(); ++i) {
    if (is_power_of(store.order_of(i), p)) ++c.count;
  }
  c.p_part = p_part(g.order(), p);
  c.ratio = ExactRatio(ExactRatio::Integer(c.count), ExactRatio::Integer(c.p_part));
  return c;
}

SumIdentity sum_identity_check(const Group& g, std::uint64_t p) {
  require_prime(p);
  SubnormalEngine engine(g);
  SumIdentity s;
  for (const auto& c : conjugacy_classes(g)) {
    if (!is_power_of(c.element_order, p)) continue;
    s.lhs += c.size * engine.order_fast(c.representative_index);
  }
  s.rhs = p_part(g.order(), p) * g.order();
  s.holds = s.lhs == s.rhs;
  return s;
}

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::subgroup_sylow: return "subgroup-sylow";
    case BoundKind::cycle: return "cycle";
    case BoundKind::mixed_cycle: return "mixed-cycle";
  }
  return "unknown";
}

CosetCensus coset_count(const Group& n, const Permutation& g, std::uint64_t p,
                        const std::vector<Group>& factors) {
  require_prime(p);
  if (g.degree() != n.degree()) throw DomainError("g and N act on different point sets");
  if (!is_power_of(g.order(), p)) throw DomainError("g is not a p-element");
  if (!normalizes(n, g)) throw DomainError("g does not normalize N");

  CosetCensus census;
  census.count = coset_p_elements(n, g, p);
  census.bound = p_part(n.order(), p);
  census.bound_kind = BoundKind::subgroup_sylow;
  if (!factors.empty()) {
    census.notice = factorization_problem(n, g, factors);
    if (census.notice.empty()) {
      std::uint64_t product = 1;
      for (const auto& f : factors) product *= coset_p_elements(f, g, p);
      census.factor_product = product;
    } else {
      census.notice = "product check skipped: " + census.notice;
    }
  }
  return census;
}

CosetCensus wreath_coset_bound_check(const Group& l, const Group& top,
                                     const Permutation& v_sigma) {
  const std::size_t d = l.degree();
  const std::size_t k = top.degree();
  const auto g = power_wreath(l, k, top);
  if (!g.contains(v_sigma)) throw DomainError("v sigma is not an element of L wr top");
  auto parts = split_wreath_element(d, k, v_sigma);
  if (!parts) throw DomainError("v sigma does not preserve the blocks");
  if (parts->top.is_identity()) throw DomainError("sigma must be nontrivial");
  if (!is_power_of(v_sigma.order(), 2)) throw DomainError("v sigma is not a 2-element");

  const auto base = power_wreath(l, k, Group::trivial(k, l.caps()));
  CosetCensus census = coset_count(base, v_sigma, 2);

  std::vector<Point> longest;
  for (auto& c : parts->top.cycles()) {
    if (c.size() > longest.size()) longest = std::move(c);
  }
  const std::uint64_t s = longest.size();
  // v sigma sends block i to block sigma(i) acting as v_i, so following the
  // cycle from its first point multiplies the components in this order.
  Permutation u = Permutation::identity(d);
  for (Point i : longest) u = u * parts->base[i];

  const auto& store = l.store();
  const Index ui = store.index_of(u);
  if (ui == kNoIndex) throw DomainError("cycle product is not an element of L");
  std::vector<std::uint64_t> class_size(store.size(), 0);
  for (const auto& c : conjugacy_classes(l)) {
    for (Index m : c.members) class_size[m] = c.size;
  }
  const auto p0 = sylow(l, 2).all_sylows.front();
  std::uint64_t best = 0;
  const std::uint64_t rest = upow(p0.size(), k - s);
  for (Index a : p0) {
    Index au = store.mul(a, ui);
    if (!is_power_of(store.order_of(au), 2)) continue;
    // |L|^s / |C_L(au)| = |L|^(s-1) * |au^L|
    best = std::max(best, upow(l.order(), s - 1) * class_size[au] * rest);
  }
  census.bound = best;
  census.bound_kind = s == k ? BoundKind::cycle : BoundKind::mixed_cycle;
  return census;
}

ExactRatio phi_ratio(const Group& l, const Group& aut_l) {
  if (!is_normal(l, aut_l)) throw DomainError("L is not a normal subgroup of the given Aut(L)");
  const auto census = count_p_elements(l, 2);
  return ExactRatio(ExactRatio::Integer(census.count),
                    ExactRatio::Integer(p_part(aut_l.order(), 2)));
}

CentralizerRatio max_centralizer_ratio(const Group& l, const Group& aut_l) {
  if (!is_normal(l, aut_l)) throw DomainError("L is not a normal subgroup of the given Aut(L)");
  if (aut_l.order() == 1) throw DomainError("Aut(L) has no nontrivial element");
  const auto& store = aut_l.store();
  const auto members = embed(l, aut_l).sorted_elements();
  CentralizerRatio result;
  // |C_L(x)| is constant on Aut(L)-classes because L is normal.
  for (const auto& c : conjugacy_classes(aut_l)) {
    if (c.element_order == 1) continue;
    const Index x = c.representative_index;
    std::uint64_t commuting = 0;
    for (Index m : members) {
      if (store.mul(m, x) == store.mul(x, m)) ++commuting;
    }
    result.c = std::max(result.c, commuting);
  }
  result.ratio = ExactRatio(ExactRatio::Integer(l.order()), ExactRatio::Integer(result.c));
  return result;
}

SteinbergCheck steinberg_instance_check(const Group& g, std::uint64_t p) {
  const auto census = count_p_elements(g, p);
  SteinbergCheck s;
  s.count = census.count;
  s.square = census.p_part * census.p_part;
  s.holds = s.count == s.square;
  return s;
}

std::vector<LyonsRow> lyons_instance_check(const Group& g) {
  std::vector<LyonsRow> rows;
  for (auto p : prime_divisors(g.order())) {
    const auto part = p_part(g.order(), p);
    rows.push_back({p, part, part * part < g.order()});
  }
  return rows;
}

MonolithReport monolith_analysis(const Group& g) {
  MonolithReport report;
  report.solvable = structure_tests(g).is_solvable;
  if (g.order() == 1) return report;

  const auto& store = g.store();
  const auto gens = g.generator_indices();
  std::vector<char> in_all(store.size(), 1);
  for (const auto& c : conjugacy_classes(g)) {
    if (c.element_order == 1) continue;
    const Index seed[] = {c.representative_index};
    auto closure = normal_closure(store, gens, seed);
    for (Index i = 0; i < store.size(); ++i) {
      if (!closure.contains(i)) in_all[i] = 0;
    }
  }
  std::vector<Index> common;
  for (Index i = 0; i < store.size(); ++i) {
    if (in_all[i]) common.push_back(i);
  }
  if (common.size() == 1) return report;

  report.monolith = group_from_indices(g, common);
  if (!report.solvable) {
    const auto q = quotient_action(g, *report.monolith);
    report.minimal_nonsolvable_monolithic = structure_tests(q.image()).is_solvable;
  }
  return report;
}

bool is_exception_socle(const Group& m) {
  switch (m.order()) {
    case 60:
    case 168:
    case 3600:
    case 4080:
      return true;
    default:
      return false;
  }
}

}  // namespace subnorm
