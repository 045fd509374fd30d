#include <doctest.h>

#include "subnorm/classes.hpp"
#include "subnorm/errors.hpp"
#include "subnorm/numtheory.hpp"
#include "subnorm/products.hpp"
#include "subnorm/spr.hpp"
#include "subnorm/subgroups.hpp"
#include "subnorm/sylow.hpp"

using namespace subnorm;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(n, cycles);
}

ExactRatio r(std::int64_t a, std::int64_t b) { return ExactRatio(a) / ExactRatio(b); }

Group a5() { return Group::from_generators({cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1, 2, 3, 4}})}); }
Group s4() { return Group::from_generators({cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}); }
Group s5() { return Group::from_generators({cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})}); }
Group s3() { return Group::from_generators({cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})}); }
Group c2() { return Group::from_generators({cyc(2, {{0, 1}})}); }
Group klein() {
  return Group::from_generators({cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
}

}  // namespace

TEST_CASE("spr of A5 by classes") {
  auto report = spr_group(a5(), {true}, "A5");
  CHECK(report.spr_total == r(1, 6));
  CHECK(report.spr_total.str() == "1/6");
  REQUIRE(report.rows.size() == 5);
  std::vector<std::string> values;
  for (const auto& row : report.rows) values.push_back(row.value.str());
  CHECK(values == std::vector<std::string>{"1", "1/5", "1/10", "1/6", "1/6"});
  REQUIRE(report.pairs.has_value());
  CHECK(report.pairs->implication_violations == 0);
  CHECK(report.chain_ordering_holds());
  CHECK(report.pairs->subnormal_pairs == 600);  // 60 * 60 / 6
}

TEST_CASE("spr_element") {
  CHECK(spr_element(a5(), cyc(5, {{0, 1, 2}})) == r(1, 10));
  CHECK(spr_element(a5(), cyc(5, {{0, 1, 2, 3, 4}})) == r(1, 6));
  CHECK(spr_element(a5(), Permutation::identity(5)) == ExactRatio(1));
}

TEST_CASE("spr of nilpotent groups is 1") {
  CHECK(spr_group(klein()).spr_total == ExactRatio(1));
  CHECK(spr_group(sylow(s4(), 2).one_sylow).spr_total == ExactRatio(1));
  CHECK(spr_group(direct_product(c2(), Group::from_generators({cyc(3, {{0, 1, 2}})}))).spr_total ==
        ExactRatio(1));
}

TEST_CASE("pair degrees bracket spr on S4 and S5") {
  for (const auto& g : {s4(), s5(), s3()}) {
    auto report = spr_group(g, {true});
    REQUIRE(report.pairs.has_value());
    CHECK(report.pairs->implication_violations == 0);
    CHECK(report.chain_ordering_holds());
    ExactRatio::Integer n = g.order();
    CHECK(ExactRatio(ExactRatio::Integer(report.pairs->subnormal_pairs), n * n) == report.spr_total);
  }
  // S4: (1 + 6/3 + 3 + 8/4 + 6/3) / 24
  CHECK(spr_group(s4()).spr_total == r(5, 12));
}

TEST_CASE("pair enumeration respects its cap") {
  Config caps;
  caps.max_pairs = 50;
  auto g = Group::from_generators(a5().generators(), caps);
  CHECK_THROWS_AS(spr_group(g, {true}), CapError);
  CHECK(spr_group(g).spr_total == r(1, 6));
}

TEST_CASE("thread count does not change the report") {
  Config caps;
  caps.jobs = 3;
  auto g = Group::from_generators(s5().generators(), caps);
  auto a = spr_group(g, {true});
  auto b = spr_group(s5(), {true});
  CHECK(a.spr_total == b.spr_total);
  CHECK(a.pairs->dn == b.pairs->dn);
  CHECK(a.pairs->ds == b.pairs->ds);
  for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].value == b.rows[i].value);
}

TEST_CASE("fixed point ratios") {
  auto g = a5();
  auto x = cyc(5, {{0, 1, 2, 3, 4}});
  auto h = normalizer(g, Group::from_generators({x}));
  CHECK(h.order() == 10);
  CHECK(fpr(g, h, x) == r(1, 6));
  CHECK(fpr(g, h, x) == spr_element(g, x));
  CHECK(fpr_on_cosets(g, h, x) == r(1, 6));
  CHECK(fpr(g, h, Permutation::identity(5)) == ExactRatio(1));
  CHECK(fpr(g, h, cyc(5, {{0, 1, 2}})) == ExactRatio(0));
  CHECK_THROWS_AS(fpr(g, s5(), x), DomainError);

  // On the Sylow normalizer action, fpr equals spr for p-elements.
  for (auto p : {2u, 3u, 5u}) {
    auto sys = sylow(s5(), p);
    auto np = normalizer(s5(), sys.one_sylow);
    for (const auto& c : conjugacy_classes(s5())) {
      if (c.element_order == 1 || !is_power_of(c.element_order, p)) continue;
      CHECK(fpr(s5(), np, c.representative) == spr_element(s5(), c.representative));
      CHECK(fpr_on_cosets(s5(), np, c.representative) == fpr(s5(), np, c.representative));
    }
  }
}

TEST_CASE("O_p criterion") {
  CHECK(check_op_criterion(a5()).empty());
  CHECK(check_op_criterion(s4()).empty());
  CHECK(check_op_criterion(s5()).empty());
  CHECK(check_op_criterion(sylow(s4(), 2).one_sylow).empty());
}

TEST_CASE("monotonicity over subgroups") {
  auto v = check_monotonicity(s5(), a5());
  CHECK(v.h_normal);
  CHECK(v.holds());
  CHECK(v.elements_checked > 0);

  auto p = sylow(a5(), 2).one_sylow;
  v = check_monotonicity(a5(), p);
  CHECK_FALSE(v.h_normal);
  CHECK(v.holds());
  CHECK(spr_element(a5(), cyc(5, {{0, 1}, {2, 3}})) == r(1, 5));

  v = check_monotonicity(a5(), a5());
  CHECK(v.holds());
}

TEST_CASE("quotient lemmas") {
  auto v = check_quotient_lemmas(s4(), klein());
  CHECK(v.holds());
  CHECK_FALSE(v.central);
  CHECK(v.spr_quotient == ExactRatio(2) / ExactRatio(3));  // S3: (1 + 3/3 + 2)/6 with spr(transposition) = 1/3
  CHECK(v.spr_g == r(5, 12));

  auto c2a5 = direct_product(c2(), a5());
  auto z = center(c2a5);
  CHECK(z.order() == 2);
  v = check_quotient_lemmas(c2a5, z);
  CHECK(v.central);
  CHECK(v.holds());
  CHECK(v.elements_matched > 0);
  CHECK(v.spr_quotient == r(1, 6));

  v = check_quotient_lemmas(a5(), Group::trivial(5));
  CHECK(v.spr_g == v.spr_quotient);
  CHECK_THROWS_AS(check_quotient_lemmas(s4(), Group::from_generators({cyc(4, {{0, 1}})})),
                  DomainError);
}

TEST_CASE("p-power parts") {
  auto x = cyc(5, {{0, 1, 2}, {3, 4}});
  CHECK(p_power_part(x, 3).order() == 3);
  CHECK(p_power_part(x, 3) == x.pow(2));
  auto y = cyc(7, {{0, 1, 2, 3}, {4, 5, 6}});
  CHECK(p_power_part(y, 2) == y.pow(3));
  CHECK(p_power_part(y, 2).order() == 4);
  CHECK(p_power_part(cyc(3, {{0, 1, 2}}), 3) == cyc(3, {{0, 1, 2}}));
}

TEST_CASE("wreath cycle bound") {
  auto v = wreath_cycle_bound_check(s3(), 2);
  CHECK(v.group_order == 72);
  CHECK(v.bound == r(1, 3));
  CHECK(v.holds);

  v = wreath_cycle_bound_check(Group::from_generators({cyc(3, {{0, 1, 2}})}), 2);
  CHECK(v.bound == ExactRatio(1));
  CHECK(v.holds);

  v = wreath_cycle_bound_check(a5(), 2);
  CHECK(v.group_order == 7200);
  CHECK(v.bound == r(1, 5));
  CHECK(v.holds);
}
