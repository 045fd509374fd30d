#include <doctest.h>

#include "subnorm/counting.hpp"
#include "subnorm/errors.hpp"
#include "subnorm/products.hpp"
#include "subnorm/quotient.hpp"
#include "subnorm/subgroups.hpp"
#include "subnorm/sylow.hpp"

using namespace subnorm;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(n, cycles);
}

Group a5() { return Group::from_generators({cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1, 2, 3, 4}})}); }
Group s4() { return Group::from_generators({cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}); }
Group s5() { return Group::from_generators({cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})}); }
Group c2() { return Group::from_generators({cyc(2, {{0, 1}})}); }
Group klein() {
  return Group::from_generators({cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
}

}  // namespace

TEST_CASE("p-element counts") {
  auto c = count_p_elements(a5(), 2);
  CHECK(c.count == 16);
  CHECK(c.p_part == 4);
  CHECK(c.ratio == ExactRatio(4));
  CHECK(count_p_elements(Group::trivial(3), 5).count == 1);
  CHECK(count_p_elements(a5(), 7).count == 1);
  CHECK(count_p_elements(s4(), 2).count == 16);  // 1 + 6 + 3 + 6
  CHECK_THROWS_AS(count_p_elements(a5(), 6), DomainError);
}

TEST_CASE("sum of subnormalizers over p-elements") {
  auto s = sum_identity_check(a5(), 2);
  CHECK(s.lhs == 240);
  CHECK(s.rhs == 240);
  CHECK(s.holds);
  for (auto p : {2u, 3u}) CHECK(sum_identity_check(s4(), p).holds);
  for (auto p : {2u, 3u, 5u}) CHECK(sum_identity_check(s5(), p).holds);
  auto d8 = sylow(s4(), 2).one_sylow;
  s = sum_identity_check(d8, 2);
  CHECK(s.lhs == 64);
  CHECK(s.holds);
}

TEST_CASE("coset counts") {
  auto n = a5();
  auto c = coset_count(n, Permutation::identity(5), 2);
  CHECK(c.count == 16);
  CHECK(c.bound == 4);
  CHECK(c.holds());

  // Transposition normalizes A5 inside S5: 2-elements in the odd coset.
  auto t = cyc(5, {{0, 1}});
  c = coset_count(n, t, 2);
  CHECK(c.count == 10 + 30);  // transpositions and 4-cycles
  CHECK(c.count >= c.bound);

  CHECK_THROWS_AS(coset_count(n, cyc(5, {{0, 1, 2}}), 2), DomainError);
  CHECK_THROWS_AS(coset_count(Group::from_generators({cyc(4, {{0, 1}})}), cyc(4, {{1, 2}}), 2),
                  DomainError);
}

TEST_CASE("coset counts factor over g-invariant direct factors") {
  auto a = a5();
  auto n = direct_product(a, a);
  auto l1 = Group::from_generators({wreath_base_element({cyc(5, {{0, 1, 2}}), Permutation::identity(5)}),
                                    wreath_base_element({cyc(5, {{0, 1, 2, 3, 4}}), Permutation::identity(5)})});
  auto l2 = Group::from_generators({wreath_base_element({Permutation::identity(5), cyc(5, {{0, 1, 2}})}),
                                    wreath_base_element({Permutation::identity(5), cyc(5, {{0, 1, 2, 3, 4}})})});
  auto g = wreath_base_element({cyc(5, {{0, 1}, {2, 3}}), cyc(5, {{1, 2}, {3, 4}})});
  auto c = coset_count(n, g, 2, {l1, l2});
  REQUIRE(c.factor_product.has_value());
  CHECK(*c.factor_product == c.count);
  CHECK(c.count == 16 * 16);
  CHECK(c.holds());

  // The swap does not leave the factors invariant.
  auto swap = wreath_top_element(5, cyc(2, {{0, 1}}));
  c = coset_count(n, swap, 2, {l1, l2});
  CHECK_FALSE(c.factor_product.has_value());
  CHECK(c.notice.find("not g-invariant") != std::string::npos);
  CHECK(c.count == 960);
}

TEST_CASE("wreath coset bound") {
  auto top = Group::from_generators({cyc(2, {{0, 1}})});
  auto swap = wreath_top_element(5, cyc(2, {{0, 1}}));
  auto c = wreath_coset_bound_check(a5(), top, swap);
  CHECK(c.count == 960);
  CHECK(c.bound == 900);
  CHECK(c.bound_kind == BoundKind::cycle);
  CHECK(c.holds());

  auto toy = wreath_coset_bound_check(c2(), top, wreath_top_element(2, cyc(2, {{0, 1}})));
  CHECK(toy.count == 4);
  CHECK(toy.bound == 2);
  CHECK(toy.holds());

  // A nontrivial v with v sigma still a 2-element.
  auto v = wreath_base_element({cyc(5, {{0, 1}, {2, 3}}), Permutation::identity(5)});
  c = wreath_coset_bound_check(a5(), top, v * swap);
  CHECK(c.holds());

  CHECK_THROWS_AS(wreath_coset_bound_check(a5(), top, Permutation::identity(10)), DomainError);
  auto odd = wreath_base_element({cyc(5, {{0, 1, 2}}), Permutation::identity(5)}) * swap;
  CHECK_THROWS_AS(wreath_coset_bound_check(a5(), top, odd), DomainError);

  auto s3 = Group::from_generators({cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})});
  auto s3top = wreath_top_element(2, cyc(3, {{0, 1}}));
  auto mixed = wreath_coset_bound_check(c2(), s3, s3top);
  CHECK(mixed.bound_kind == BoundKind::mixed_cycle);
  CHECK(mixed.holds());
}

TEST_CASE("phi and centralizer ratios") {
  CHECK(phi_ratio(a5(), s5()) == ExactRatio(2));
  auto cr = max_centralizer_ratio(a5(), s5());
  CHECK(cr.c == 6);
  CHECK(cr.ratio == ExactRatio(10));
  CHECK_THROWS_AS(phi_ratio(s4(), s5()), DomainError);

  auto cr2 = max_centralizer_ratio(klein(), klein());
  CHECK(cr2.c == 4);
  CHECK(cr2.ratio == ExactRatio(1));
}

TEST_CASE("Steinberg and Lyons instances") {
  auto s = steinberg_instance_check(a5(), 2);
  CHECK(s.count == 16);
  CHECK(s.square == 16);
  CHECK(s.holds);
  CHECK_FALSE(steinberg_instance_check(s5(), 2).holds);

  for (const auto& row : lyons_instance_check(a5())) CHECK(row.holds);
  CHECK_FALSE(lyons_instance_check(s4()).front().holds);  // 8^2 > 24
}

TEST_CASE("Frobenius ratio monotonicity") {
  // P <= H <= G with P a Sylow 2-subgroup of G.
  auto g = s5();
  auto p = sylow(g, 2).one_sylow;
  auto h = normalizer(g, p);
  auto rg = count_p_elements(g, 2).ratio;
  CHECK(rg >= count_p_elements(h, 2).ratio);
  CHECK(rg >= count_p_elements(p, 2).ratio);

  auto q = quotient_action(s4(), klein()).image();
  CHECK(count_p_elements(q, 2).ratio <= count_p_elements(s4(), 2).ratio);

  auto c2a5 = direct_product(c2(), a5());
  auto z = center(c2a5);
  auto qz = quotient_action(c2a5, z).image();
  CHECK(count_p_elements(qz, 2).ratio == count_p_elements(c2a5, 2).ratio);
}

TEST_CASE("monolith analysis") {
  auto m = monolith_analysis(a5());
  CHECK(m.minimal_nonsolvable_monolithic);
  REQUIRE(m.monolith.has_value());
  CHECK(m.monolith->order() == 60);
  CHECK(is_exception_socle(*m.monolith));

  m = monolith_analysis(s5());
  CHECK(m.minimal_nonsolvable_monolithic);
  CHECK(m.monolith->order() == 60);

  m = monolith_analysis(direct_product(c2(), a5()));
  CHECK_FALSE(m.monolith.has_value());
  CHECK_FALSE(m.minimal_nonsolvable_monolithic);

  m = monolith_analysis(s4());
  CHECK(m.solvable);
  CHECK(m.monolith->order() == 4);
  CHECK_FALSE(m.minimal_nonsolvable_monolithic);

  auto top = Group::from_generators({cyc(2, {{0, 1}})});
  m = monolith_analysis(power_wreath(a5(), 2, top));
  CHECK(m.minimal_nonsolvable_monolithic);
  CHECK(m.monolith->order() == 3600);
}
