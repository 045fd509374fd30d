#include <doctest.h>

#include <algorithm>

#include "subnorm/catalog.hpp"
#include "subnorm/classes.hpp"
#include "subnorm/errors.hpp"
#include "subnorm/structure.hpp"
#include "subnorm/subgroups.hpp"

using namespace subnorm;

namespace {

bool is_nonabelian_simple(const Group& g) {
  if (g.order() == 1 || structure_tests(g).is_nilpotent) return false;
  for (const auto& c : conjugacy_classes(g)) {
    if (c.representative.is_identity()) continue;
    if (normal_closure(g, {c.representative}).order() != g.order()) return false;
  }
  return true;
}

std::vector<std::uint64_t> class_sizes(const Group& g) {
  std::vector<std::uint64_t> sizes;
  for (const auto& c : conjugacy_classes(g)) sizes.push_back(c.size);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("every manifest entry builds with its stated order") {
  const auto& entries = catalog_entries();
  CHECK(entries.size() >= 40);
  for (const auto& e : entries) {
    CAPTURE(e.key);
    auto g = build_recipe(e.recipe);
    CHECK(g.order() == e.expected_order);
    if (!e.flags.aut.empty()) {
      REQUIRE(find_entry(e.flags.aut) != nullptr);
      auto aut = build_named(e.flags.aut);
      CHECK(is_normal(g, aut));
    }
  }
}

TEST_CASE("simple flags agree with the groups") {
  for (const auto& e : catalog_entries()) {
    if (e.expected_order > 5000) continue;
    CAPTURE(e.key);
    CHECK(is_nonabelian_simple(build_named(e.key)) == e.flags.simple);
  }
}

TEST_CASE("projective linear groups") {
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    CAPTURE(q);
    auto g = psl2(q);
    CHECK(g.degree() == q + 1);
    CHECK(g.order() == psl2_order(q));
    CHECK(g.chain().orbit_size(0) == q + 1);
    CHECK(g.chain().orbit_size(1) == q);
    CHECK(is_nonabelian_simple(g));
    auto pg = pgl2(q);
    CHECK(pg.order() == std::uint64_t(q) * (q * q - 1));
    CHECK(is_normal(g, pg));
  }
  auto g16 = build_named("psl2:16");
  CHECK(g16.degree() == 17);
  CHECK(g16.order() == 4080);
  CHECK(build_named("psl2:7").degree() == 8);
  CHECK(class_sizes(psl2(4)) == class_sizes(alternating_group(5)));
  CHECK(class_sizes(psl2(5)) == class_sizes(alternating_group(5)));
  CHECK(class_sizes(psl2(9)) == class_sizes(alternating_group(6)));
  CHECK(pgaml2(9).order() == 1440);
  CHECK(pgaml2(7).order() == 336);
}

TEST_CASE("small families") {
  CHECK(cyclic_group(1).order() == 1);
  CHECK(cyclic_group(6).order() == 6);
  CHECK(dihedral_group(4).order() == 8);
  CHECK(alternating_group(8).order() == 20160);
  CHECK(symmetric_group(2).order() == 2);
  CHECK(build_named("wreath:C2,3,S3").order() == 48);
  CHECK(build_named("direct:S3,C2").order() == 12);
}

TEST_CASE("bad names and recipes") {
  CHECK_THROWS_AS(build_named("NoSuchGroup"), DomainError);
  CHECK_THROWS_AS(build_named("psl2:6"), DomainError);
  CHECK_THROWS_AS(build_named("psl2:x"), DomainError);
  CHECK_THROWS_AS(build_named("psl2:7,2"), DomainError);
  CHECK_THROWS_AS(build_named("frob:21"), DomainError);
  CHECK_THROWS_AS(build_named("dihedral:2"), DomainError);
  CHECK_THROWS_AS(build_named("direct:A5,Nope"), DomainError);
}

TEST_CASE("manifest parsing") {
  auto entries = parse_manifest("# comment\n\nX cyclic:3 3 -  # trailing\nY symmetric:3 6 simple,lie=2,aut=X\n");
  REQUIRE(entries.size() == 2);
  CHECK(entries[1].flags.simple);
  CHECK(entries[1].flags.lie_characteristics == std::vector<std::uint64_t>{2});
  CHECK(entries[1].flags.aut == "X");

  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_manifest(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("A cyclic:2 2 -\nB cyclic:2\n") == 2);
  CHECK(line_of("\n\nA cyclic:2 two -\n") == 3);
  CHECK(line_of("A cyclic:2 2 shiny\n") == 1);
  CHECK(line_of("A cyclic:2 2 -\nA cyclic:2 2 -\n") == 2);
  CHECK(line_of("A cyclic:2 2 lie=p\n") == 1);
}
