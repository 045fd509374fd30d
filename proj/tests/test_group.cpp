#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "subnorm/classes.hpp"
#include "subnorm/errors.hpp"
#include "subnorm/group.hpp"
#include "subnorm/products.hpp"
#include "subnorm/quotient.hpp"
#include "subnorm/structure.hpp"
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
Group klein() {
  return Group::from_generators({cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
}
Group cyclic(std::size_t n) {
  std::vector<Point> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>(i);
  return Group::from_generators({Permutation::from_cycles(n, {c})});
}

std::vector<std::uint64_t> class_sizes(const Group& g) {
  std::vector<std::uint64_t> sizes;
  for (const auto& c : conjugacy_classes(g)) sizes.push_back(c.size);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Closure by breadth-first multiplication, independent of the chain.
std::size_t closure_order(const std::vector<Permutation>& gens) {
  std::vector<Permutation> seen{Permutation::identity(gens.front().degree())};
  std::set<Permutation> known(seen.begin(), seen.end());
  for (std::size_t i = 0; i < seen.size(); ++i) {
    for (const auto& g : gens) {
      auto h = seen[i] * g;
      if (known.insert(h).second) seen.push_back(h);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("orders from generators") {
  CHECK(a5().order() == 60);
  CHECK(s4().order() == 24);
  CHECK(Group::from_generators({Permutation::identity(3)}).order() == 1);
  CHECK(closure_order(a5().generators()) == 60);
  CHECK(closure_order(s4().generators()) == 24);

  auto m = Group::from_generators({cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{0, 1}})});
  CHECK(m.order() == 5040);
  CHECK(m.has_store());
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Group::from_generators({}), DomainError);
  CHECK_THROWS_AS(Group::from_generators({cyc(3, {{0, 1}}), cyc(4, {{0, 1}})}), DomainError);
  Config tight;
  tight.max_order = 100;
  try {
    Group::from_generators(s5().generators(), tight);
    FAIL("expected a cap error");
  } catch (const CapError& e) {
    CHECK(std::string(e.what()).find("group too large") != std::string::npos);
    CHECK(std::string(e.what()).find("100") != std::string::npos);
  }
  Config no_store;
  no_store.max_exhaustive = 10;
  auto g = Group::from_generators(a5().generators(), no_store);
  CHECK(g.order() == 60);
  CHECK_FALSE(g.has_store());
  CHECK(g.contains(cyc(5, {{0, 1}, {2, 3}})));
  CHECK_FALSE(g.contains(cyc(5, {{0, 1}})));
  CHECK_THROWS_AS(g.store(), CapError);
  CHECK_THROWS_AS(conjugacy_classes(g), CapError);
}

TEST_CASE("element store closure and indices") {
  auto g = s4();
  const auto& st = g.store();
  CHECK(st.size() == 24);
  CHECK(st.element(0).is_identity());
  for (Index a = 0; a < st.size(); ++a) {
    CHECK(st.mul(a, st.inv(a)) == 0);
    for (Index b = 0; b < st.size(); ++b) {
      CHECK(st.element(st.mul(a, b)) == st.element(a) * st.element(b));
    }
  }
  CHECK(st.index_of(cyc(5, {{0, 1}})) == kNoIndex);
}

TEST_CASE("conjugacy classes") {
  CHECK(class_sizes(a5()) == std::vector<std::uint64_t>{1, 12, 12, 15, 20});
  CHECK(class_sizes(s4()) == std::vector<std::uint64_t>{1, 3, 6, 6, 8});
  CHECK(class_sizes(cyclic(3)) == std::vector<std::uint64_t>{1, 1, 1});

  auto classes = conjugacy_classes(a5());
  for (const auto& c : classes) {
    CHECK(c.size * c.centralizer_order == 60);
    for (auto m : c.members) CHECK(a5().store().order_of(m) == c.element_order);
  }
  CHECK(classes.front().element_order == 1);
  CHECK(classes.back().element_order == 5);
}

TEST_CASE("centralizers and normalizers") {
  auto g = a5();
  CHECK(centralizer(g, cyc(5, {{0, 1, 2}})).order() == 3);
  CHECK(centralizer(g, Permutation::identity(5)).order() == 60);
  CHECK_THROWS_AS(centralizer(g, cyc(5, {{0, 1}})), DomainError);

  auto sys = sylow(g, 2);
  CHECK(normalizer(g, sys.one_sylow).order() == 12);
  CHECK_THROWS_AS(normalizer(g, Group::from_generators({cyc(5, {{0, 1}})})), DomainError);
  CHECK(center(s4()).order() == 1);
}

TEST_CASE("Sylow systems") {
  auto g = a5();
  auto s2 = sylow(g, 2);
  CHECK(s2.one_sylow.order() == 4);
  CHECK(s2.count == 5);
  CHECK(s2.normalizer_order == 12);
  CHECK(sylow(g, 3).count == 10);
  CHECK(sylow(g, 5).count == 6);
  CHECK(sylow(g, 7).count == 1);
  CHECK(sylow(g, 7).one_sylow.order() == 1);
  CHECK(sylow(cyclic(6), 3).count == 1);
  CHECK_THROWS_AS(sylow(g, 4), DomainError);

  for (auto p : {2u, 3u}) {
    auto sys = sylow(s4(), p);
    CHECK(sys.count % p == 1);
    CHECK(sys.count * sys.normalizer_order == 24);
    for (const auto& s : sys.all_sylows) CHECK(s.size() == sys.one_sylow.order());
  }
}

TEST_CASE("p-cores") {
  CHECK(p_core(a5(), 2).order() == 1);
  auto o2 = p_core(s4(), 2);
  CHECK(o2.order() == 4);
  CHECK(is_normal(o2, s4()));
  auto d8 = sylow(s4(), 2).one_sylow;
  CHECK(p_core(d8, 2).order() == 8);
}

TEST_CASE("normal closures") {
  CHECK(normal_closure(a5(), {cyc(5, {{0, 1, 2}})}).order() == 60);
  CHECK(normal_closure(s4(), {cyc(4, {{0, 1}, {2, 3}})}).order() == 4);
  CHECK(normal_closure(cyclic(6), {cyc(6, {{0, 2, 4}, {1, 3, 5}})}).order() == 3);
  CHECK_THROWS_AS(normal_closure(a5(), {cyc(5, {{0, 1}})}), DomainError);

  Config no_store;
  no_store.max_exhaustive = 1;
  auto big = Group::from_generators(s4().generators(), no_store);
  CHECK(normal_closure(big, {cyc(4, {{0, 1}, {2, 3}})}).order() == 4);
}

TEST_CASE("quotient actions") {
  auto q = quotient_action(s4(), klein());
  CHECK(q.image().order() == 6);
  CHECK(q.image().degree() == 6);

  std::mt19937 rng(7);
  auto g = s4();
  const auto& st = g.store();
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(st.size() - 1));
  for (int i = 0; i < 50; ++i) {
    Index a = pick(rng);
    Index b = pick(rng);
    CHECK(q.image_of(st.mul(a, b)) == q.image_of(a) * q.image_of(b));
  }

  CHECK(quotient_action(a5(), Group::trivial(5)).image().order() == 60);
  CHECK(quotient_action(a5(), a5()).image().order() == 1);
  CHECK_THROWS_AS(quotient_action(s4(), Group::from_generators({cyc(4, {{0, 1}})})),
                  DomainError);
}

TEST_CASE("products") {
  CHECK(direct_product(a5(), a5()).order() == 3600);
  auto w = power_wreath(a5(), 2, cyclic(2));
  CHECK(w.order() == 7200);
  CHECK(w.degree() == 10);
  CHECK(power_wreath(a5(), 1, Group::trivial(1)).order() == 60);
  CHECK_THROWS_AS(power_wreath(a5(), 3, cyclic(2)), DomainError);

  auto swap = wreath_top_element(5, cyc(2, {{0, 1}}));
  CHECK(w.contains(swap));
  auto parts = split_wreath_element(5, 2, wreath_base_element({cyc(5, {{0, 1, 2}}), Permutation::identity(5)}) * swap);
  REQUIRE(parts.has_value());
  CHECK(parts->base[0] == cyc(5, {{0, 1, 2}}));
  CHECK(parts->top == cyc(2, {{0, 1}}));
}

TEST_CASE("structure tests") {
  auto r = structure_tests(a5());
  CHECK_FALSE(r.is_solvable);
  CHECK_FALSE(r.is_nilpotent);
  r = structure_tests(s4());
  CHECK(r.is_solvable);
  CHECK_FALSE(r.is_nilpotent);
  r = structure_tests(sylow(s4(), 2).one_sylow);
  CHECK(r.is_solvable);
  CHECK(r.is_nilpotent);

  Config no_store;
  no_store.max_exhaustive = 1;
  r = structure_tests(Group::from_generators(s4().generators(), no_store));
  CHECK(r.is_solvable);
  CHECK_FALSE(r.is_nilpotent);
  r = structure_tests(Group::from_generators(a5().generators(), no_store));
  CHECK_FALSE(r.is_solvable);
  r = structure_tests(Group::from_generators(sylow(s4(), 2).one_sylow.generators(), no_store));
  CHECK(r.is_nilpotent);
}
