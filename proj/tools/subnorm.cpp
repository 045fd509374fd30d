// Command-line front end: group invariants, subnormalizer ratios, census
// records and the acceptance run.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subnorm/catalog.hpp"
#include "subnorm/census.hpp"
#include "subnorm/classes.hpp"
#include "subnorm/counting.hpp"
#include "subnorm/errors.hpp"
#include "subnorm/group_io.hpp"
#include "subnorm/numtheory.hpp"
#include "subnorm/spr.hpp"
#include "subnorm/subnormal.hpp"
#include "subnorm/sylow.hpp"
#include "subnorm/verify.hpp"

namespace {

using namespace subnorm;
using Row = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string name;
  std::string file;
  std::string format = "tsv";
  std::string census_file;
  std::string element;
  std::string aut;
  std::uint64_t prime = 0;
  bool rows = false;
  std::vector<int> criteria;
  Config caps;
};

std::string cell(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  if (v.is_null()) return "-";
  return v.dump();
}

// tsv: one line per row, tab separated, with a '#' header when there is more
// than one column. json-lines: one object per row.
void emit(const std::vector<Row>& rows, CensusFormat format) {
  if (format == CensusFormat::json_lines) {
    for (const auto& r : rows) std::cout << r.dump() << '\n';
    return;
  }
  if (!rows.empty() && rows.front().size() > 1) {
    std::string header = "#";
    for (const auto& item : rows.front().items()) header += (header.size() > 1 ? "\t" : "") + item.key();
    std::cout << header << '\n';
  }
  for (const auto& r : rows) {
    std::string line;
    for (const auto& item : r.items()) line += (line.empty() ? "" : "\t") + cell(item.value());
    std::cout << line << '\n';
  }
}

Group load_group(const Options& o) {
  if (!o.file.empty()) return read_group_file(o.file, o.caps);
  if (!o.name.empty()) return build_named(o.name, o.caps);
  throw DomainError("give the group with --name or --file");
}

std::string group_label(const Options& o) { return o.file.empty() ? o.name : o.file; }

Permutation parse_element(const Options& o, const Group& g) {
  auto x = Permutation::parse_cycles(g.degree(), o.element);
  if (!g.contains(x)) throw DomainError(x.to_cycle_string() + " is not in the group");
  return x;
}

int cmd_order(const Options& o) {
  emit({Row{{"order", load_group(o).order()}}}, parse_census_format(o.format));
  return kOk;
}

int cmd_classes(const Options& o) {
  auto g = load_group(o);
  std::vector<Row> rows;
  for (const auto& c : conjugacy_classes(g)) {
    rows.push_back(Row{{"representative", c.representative.to_cycle_string()},
                       {"element_order", c.element_order},
                       {"size", c.size},
                       {"centralizer_order", c.centralizer_order}});
  }
  emit(rows, parse_census_format(o.format));
  return kOk;
}

int cmd_sylow(const Options& o) {
  auto g = load_group(o);
  auto s = sylow(g, o.prime);
  std::string gens;
  for (const auto& x : s.one_sylow.generators()) gens += (gens.empty() ? "" : " ") + x.to_cycle_string();
  emit({Row{{"prime", o.prime},
            {"sylow_order", s.one_sylow.order()},
            {"count", s.count},
            {"normalizer_order", s.normalizer_order},
            {"generators", gens}}},
       parse_census_format(o.format));
  return kOk;
}

int cmd_spr(const Options& o) {
  auto g = load_group(o);
  auto r = spr_group(g, {}, group_label(o));
  const auto fmt = parse_census_format(o.format);
  if (!o.rows) {
    emit({Row{{"spr", r.spr_total.str()}}}, fmt);
    return kOk;
  }
  std::vector<Row> rows;
  for (const auto& row : r.rows) {
    rows.push_back(Row{{"representative", row.representative.to_cycle_string()},
                       {"element_order", row.element_order},
                       {"class_size", row.class_size},
                       {"spr", row.value.str()}});
  }
  rows.push_back(Row{{"representative", "total"},
                     {"element_order", nullptr},
                     {"class_size", g.order()},
                     {"spr", r.spr_total.str()}});
  emit(rows, fmt);
  return kOk;
}

int cmd_spr_element(const Options& o) {
  auto g = load_group(o);
  emit({Row{{"spr", spr_element(g, parse_element(o, g)).str()}}}, parse_census_format(o.format));
  return kOk;
}

int cmd_subnormalizer(const Options& o) {
  auto g = load_group(o);
  auto x = parse_element(o, g);
  Row row{{"x", x.to_cycle_string()},
          {"subnormalizer_order", subnormalizer_bruteforce(g, x).size()},
          {"spr", spr_element(g, x).str()}};
  if (auto p = prime_of_prime_power(x.order())) {
    auto r = casolo_report(g, x, *p);
    row["prime"] = *p;
    row["lambda"] = r.lambda;
    row["normalizer_order"] = r.normalizer_order;
    row["alpha"] = r.alpha;
    row["centralizer_order"] = r.centralizer_order;
    row["identities_hold"] = r.identities_hold;
  }
  emit({row}, parse_census_format(o.format));
  return kOk;
}

int cmd_count(const Options& o) {
  auto c = count_p_elements(load_group(o), o.prime);
  emit({Row{{"prime", c.prime}, {"count", c.count}, {"p_part", c.p_part}, {"ratio", c.ratio.str()}}},
       parse_census_format(o.format));
  return kOk;
}

int cmd_phi(const Options& o) {
  auto l = load_group(o);
  auto aut = build_named(o.aut, o.caps);
  auto c = max_centralizer_ratio(l, aut);
  emit({Row{{"phi", phi_ratio(l, aut).str()}, {"c", c.c}, {"order_over_c", c.ratio.str()}}},
       parse_census_format(o.format));
  return kOk;
}

int cmd_census(const Options& o) {
  const auto fmt = parse_census_format(o.format);
  auto g = load_group(o);
  std::optional<Group> aut;
  if (!o.aut.empty()) aut = build_named(o.aut, o.caps);
  auto record = compute_census_record(g, group_label(o), aut);
  std::cout << format_record(record, fmt) << '\n';
  if (!o.census_file.empty()) append_census(o.census_file, {record}, fmt);
  return kOk;
}

int cmd_verify(const Options& o) {
  auto ids = o.criteria.empty() ? all_criteria() : o.criteria;
  bool ok = true;
  run_criteria(ids, o.caps, [&](const CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    ok = ok && r.passed;
  });
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subnormalizer ratios of finite permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  if (const char* env = std::getenv("SUBNORM_CENSUS")) o.census_file = env;

  auto* source = app.add_option_group("group");
  auto* name = source->add_option("--name", o.name, "Catalog key (A5, PSL2_7, ...) or recipe (psl2:7)");
  auto* file = source->add_option("--file", o.file, "Group file: 'degree n' then image rows")
                   ->check(CLI::ExistingFile);
  name->excludes(file);
  app.add_option("--max-order", o.caps.max_order, "Largest group order accepted")->capture_default_str();
  app.add_option("--max-exhaustive", o.caps.max_exhaustive, "Largest order with a full element table")
      ->capture_default_str();
  app.add_option("--max-pairs", o.caps.max_pairs, "Largest order for pair enumeration")
      ->capture_default_str();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"tsv", "json-lines"}))
      ->capture_default_str();
  app.add_option("--jobs", o.caps.jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  app.add_option("--census-file", o.census_file, "Census file to append to (default $SUBNORM_CENSUS)");

  struct Command {
    CLI::App* app;
    int (*run)(const Options&);
  };
  std::vector<Command> commands;
  auto add = [&](const char* cmd, const char* help, int (*run)(const Options&)) {
    commands.push_back({app.add_subcommand(cmd, help), run});
    return commands.back().app;
  };

  add("order", "Group order", cmd_order);
  add("classes", "Conjugacy classes", cmd_classes);
  add("sylow", "A Sylow p-subgroup and its normalizer", cmd_sylow)
      ->add_option("-p,--prime", o.prime, "Prime")->required();
  add("spr", "Subnormalizer ratio of the group", cmd_spr)
      ->add_flag("--rows", o.rows, "One row per conjugacy class");
  add("spr-element", "spr_G(x)", cmd_spr_element)
      ->add_option("-x,--element", o.element, "Element in 1-based cycle notation")->required();
  add("subnormalizer", "Subnormalizer order of <x>", cmd_subnormalizer)
      ->add_option("-x,--element", o.element, "Element in 1-based cycle notation")->required();
  add("count", "p-elements against the Sylow order", cmd_count)
      ->add_option("-p,--prime", o.prime, "Prime")->required();
  add("phi", "2-elements against a Sylow 2-subgroup of Aut", cmd_phi)
      ->add_option("--aut", o.aut, "Catalog key of the automorphism group")->required();
  add("census", "Compute a census record and append it to the census file", cmd_census)
      ->add_option("--aut", o.aut, "Catalog key of the automorphism group");
  add("verify-paper", "Run the acceptance criteria", cmd_verify)
      ->add_option("--criteria", o.criteria, "Subset of criteria 1-11")
      ->delimiter(',')
      ->check(CLI::Range(1, 11));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  }

  try {
    for (const auto& c : commands) {
      if (c.app->parsed()) return c.run(o);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
