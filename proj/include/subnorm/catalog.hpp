#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "subnorm/config.hpp"
#include "subnorm/group.hpp"

namespace subnorm {

struct CatalogFlags {
  /// Nonabelian simple.
  bool simple = false;
  /// Characteristics in which the group is of Lie type.
  std::vector<std::uint64_t> lie_characteristics;
  /// Isomorphic to one of A5, A5 x A5, PSL(2,7), PSL(2,16).
  bool exception = false;
  /// Key of a catalog group realizing Aut of this one, or empty.
  std::string aut;
};

struct CatalogEntry {
  std::string key;
  /// "family" or "family:param,param,..."
  std::string recipe;
  std::uint64_t expected_order = 0;
  CatalogFlags flags;
};

/// Parses the manifest format: one entry per line, `key recipe order flags`,
/// with '#' comments and blank lines ignored. ParseError carries the line.
std::vector<CatalogEntry> parse_manifest(std::string_view text);

/// The manifest shipped in data/catalog.txt, compiled into the library.
const std::vector<CatalogEntry>& catalog_entries();

/// nullptr when the key is unknown.
const CatalogEntry* find_entry(std::string_view key);

/// Families: trivial, cyclic:n, dihedral:n (order 2n on n points),
/// alternating:n, symmetric:n, psl2:q, pgl2:q, pgaml2:q (on the q+1 points of
/// the projective line), direct:A,B and wreath:L,k,TOP (A, B, L, TOP catalog
/// keys; TOP of degree k). DomainError on unknown families or bad parameters.
Group build(std::string_view family, const std::vector<std::string>& params,
            const Config& caps = {});

Group build_recipe(std::string_view recipe, const Config& caps = {});

/// A catalog key (order checked against the manifest; Error on mismatch) or a recipe.
Group build_named(std::string_view name, const Config& caps = {});

Group cyclic_group(std::size_t n, const Config& caps = {});
Group dihedral_group(std::size_t n, const Config& caps = {});
Group alternating_group(std::size_t n, const Config& caps = {});
Group symmetric_group(std::size_t n, const Config& caps = {});

/// Point 0 is infinity and point 1+c is the field element with code c.
/// PSL(2,q) is generated by z+1, a^2 z and -1/z, PGL(2,q) by z+1, a z and
/// -1/z (a the primitive element), and PGammaL(2,q) adds z -> z^p.
Group psl2(std::uint32_t q, const Config& caps = {});
Group pgl2(std::uint32_t q, const Config& caps = {});
Group pgaml2(std::uint32_t q, const Config& caps = {});

/// q(q^2-1)/gcd(2,q-1)
std::uint64_t psl2_order(std::uint64_t q);

}  // namespace subnorm
