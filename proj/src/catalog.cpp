#include "subnorm/catalog.hpp"

#include <charconv>
#include <functional>
#include <optional>
#include <sstream>

#include "subnorm/catalog_manifest.hpp"
#include "subnorm/errors.hpp"
#include "subnorm/field.hpp"
#include "subnorm/products.hpp"

namespace subnorm {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::optional<std::uint64_t> to_number(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::uint64_t number_param(std::string_view family, const std::string& s) {
  auto v = to_number(s);
  if (!v) throw DomainError(std::string(family) + ": expected a number, got '" + s + "'");
  return *v;
}

void require_arity(std::string_view family, const std::vector<std::string>& params, std::size_t n) {
  if (params.size() != n) {
    throw DomainError(std::string(family) + " takes " + std::to_string(n) + " parameter(s), got " +
                      std::to_string(params.size()));
  }
}

Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t last) {
  std::vector<Point> c;
  for (std::size_t i = first; i <= last; ++i) c.push_back(static_cast<Point>(i));
  return Permutation::from_cycles(degree, {c});
}

// A Moebius-type map on the projective line, given on field codes; nullopt is infinity.
using LineMap = std::function<std::optional<FiniteField::Element>(std::optional<FiniteField::Element>)>;

Permutation on_line(const FiniteField& f, const LineMap& map) {
  const std::uint32_t q = f.order();
  auto point = [](std::optional<FiniteField::Element> z) {
    return z ? static_cast<Point>(*z + 1) : Point{0};
  };
  std::vector<Point> images(q + 1);
  images[0] = point(map(std::nullopt));
  for (FiniteField::Element z = 0; z < q; ++z) images[z + 1] = point(map(z));
  return Permutation(std::move(images));
}

std::vector<Permutation> line_generators(const FiniteField& f, FiniteField::Element scale) {
  std::vector<Permutation> gens;
  gens.push_back(on_line(f, [&](auto z) -> std::optional<FiniteField::Element> {
    if (!z) return std::nullopt;
    return f.add(*z, 1);
  }));
  gens.push_back(on_line(f, [&](auto z) -> std::optional<FiniteField::Element> {
    if (!z) return std::nullopt;
    return f.mul(scale, *z);
  }));
  gens.push_back(on_line(f, [&](auto z) -> std::optional<FiniteField::Element> {
    if (!z) return FiniteField::Element{0};
    if (*z == 0) return std::nullopt;
    return f.neg(f.inv(*z));
  }));
  return gens;
}

CatalogFlags parse_flags(std::size_t line, const std::string& text) {
  CatalogFlags flags;
  if (text == "-") return flags;
  for (const auto& flag : split(text, ',')) {
    if (flag == "simple") {
      flags.simple = true;
    } else if (flag == "exception") {
      flags.exception = true;
    } else if (flag.rfind("lie=", 0) == 0) {
      auto p = to_number(std::string_view(flag).substr(4));
      if (!p) throw ParseError(line, "bad characteristic in flag '" + flag + "'");
      flags.lie_characteristics.push_back(*p);
    } else if (flag.rfind("aut=", 0) == 0 && flag.size() > 4) {
      flags.aut = flag.substr(4);
    } else {
      throw ParseError(line, "unknown flag '" + flag + "'");
    }
  }
  return flags;
}

}  // namespace

std::uint64_t psl2_order(std::uint64_t q) { return q * (q * q - 1) / (q % 2 == 1 ? 2 : 1); }

Group cyclic_group(std::size_t n, const Config& caps) {
  if (n == 0) throw DomainError("cyclic group needs n >= 1");
  if (n == 1) return Group::trivial(1, caps);
  return Group::from_generators({cycle_on(n, 0, n - 1)}, caps);
}

Group dihedral_group(std::size_t n, const Config& caps) {
  if (n < 3) throw DomainError("dihedral group on n points needs n >= 3");
  std::vector<Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<Point>((n - i) % n);
  return Group::from_generators({cycle_on(n, 0, n - 1), Permutation(reflection)}, caps);
}

Group alternating_group(std::size_t n, const Config& caps) {
  if (n == 0) throw DomainError("alternating group needs n >= 1");
  if (n < 3) return Group::trivial(n, caps);
  std::vector<Permutation> gens{cycle_on(n, 0, 2)};
  if (n > 3) gens.push_back(n % 2 == 1 ? cycle_on(n, 0, n - 1) : cycle_on(n, 1, n - 1));
  return Group::from_generators(std::move(gens), caps);
}

Group symmetric_group(std::size_t n, const Config& caps) {
  if (n == 0) throw DomainError("symmetric group needs n >= 1");
  if (n == 1) return Group::trivial(1, caps);
  if (n == 2) return Group::from_generators({cycle_on(2, 0, 1)}, caps);
  return Group::from_generators({cycle_on(n, 0, 1), cycle_on(n, 0, n - 1)}, caps);
}

Group psl2(std::uint32_t q, const Config& caps) {
  FiniteField f(q);
  const auto a = f.primitive();
  return Group::from_generators(line_generators(f, f.mul(a, a)), caps);
}

Group pgl2(std::uint32_t q, const Config& caps) {
  FiniteField f(q);
  return Group::from_generators(line_generators(f, f.primitive()), caps);
}

Group pgaml2(std::uint32_t q, const Config& caps) {
  FiniteField f(q);
  auto gens = line_generators(f, f.primitive());
  auto frob = on_line(f, [&](auto z) -> std::optional<FiniteField::Element> {
    if (!z) return std::nullopt;
    return f.frobenius(*z);
  });
  if (!frob.is_identity()) gens.push_back(frob);
  return Group::from_generators(std::move(gens), caps);
}

Group build(std::string_view family, const std::vector<std::string>& params, const Config& caps) {
  if (family == "trivial") {
    if (!params.empty()) require_arity(family, params, 0);
    return Group::trivial(1, caps);
  }
  if (family == "cyclic" || family == "dihedral" || family == "alternating" ||
      family == "symmetric") {
    require_arity(family, params, 1);
    const auto n = number_param(family, params[0]);
    if (n > 64) throw DomainError(std::string(family) + ": degree " + params[0] + " is too large");
    if (family == "cyclic") return cyclic_group(n, caps);
    if (family == "dihedral") return dihedral_group(n, caps);
    if (family == "alternating") return alternating_group(n, caps);
    return symmetric_group(n, caps);
  }
  if (family == "psl2" || family == "pgl2" || family == "pgaml2") {
    require_arity(family, params, 1);
    const auto q = number_param(family, params[0]);
    if (q > 16) throw DomainError(std::string(family) + ": unsupported q " + params[0]);
    if (family == "psl2") return psl2(static_cast<std::uint32_t>(q), caps);
    if (family == "pgl2") return pgl2(static_cast<std::uint32_t>(q), caps);
    return pgaml2(static_cast<std::uint32_t>(q), caps);
  }
  if (family == "direct") {
    require_arity(family, params, 2);
    return direct_product(build_named(params[0], caps), build_named(params[1], caps));
  }
  if (family == "wreath") {
    require_arity(family, params, 3);
    const auto k = number_param(family, params[1]);
    return power_wreath(build_named(params[0], caps), k, build_named(params[2], caps));
  }
  throw DomainError("unknown group family '" + std::string(family) + "'");
}

Group build_recipe(std::string_view recipe, const Config& caps) {
  auto colon = recipe.find(':');
  if (colon == std::string_view::npos) return build(recipe, {}, caps);
  return build(recipe.substr(0, colon), split(recipe.substr(colon + 1), ','), caps);
}

Group build_named(std::string_view name, const Config& caps) {
  if (const auto* entry = find_entry(name)) {
    Group g = build_recipe(entry->recipe, caps);
    if (g.order() != entry->expected_order) {
      throw Error("catalog entry " + entry->key + " has order " + std::to_string(g.order()) +
                  ", manifest says " + std::to_string(entry->expected_order));
    }
    return g;
  }
  if (name.find(':') == std::string_view::npos && name != "trivial") {
    throw DomainError("unknown group '" + std::string(name) + "'");
  }
  return build_recipe(name, caps);
}

std::vector<CatalogEntry> parse_manifest(std::string_view text) {
  std::vector<CatalogEntry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string w; fields >> w;) f.push_back(w);
    if (f.empty()) continue;
    if (f.size() != 4) throw ParseError(number, "expected 4 fields: key recipe order flags");
    auto order = to_number(f[2]);
    if (!order || *order == 0) throw ParseError(number, "bad order '" + f[2] + "'");
    for (const auto& e : entries) {
      if (e.key == f[0]) throw ParseError(number, "duplicate key '" + f[0] + "'");
    }
    entries.push_back({f[0], f[1], *order, parse_flags(number, f[3])});
  }
  return entries;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = parse_manifest(kCatalogManifest);
  return entries;
}

const CatalogEntry* find_entry(std::string_view key) {
  for (const auto& e : catalog_entries()) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

}  // namespace subnorm
