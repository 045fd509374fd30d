#include "subnorm/census.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "subnorm/counting.hpp"
#include "subnorm/errors.hpp"
#include "subnorm/numtheory.hpp"
#include "subnorm/spr.hpp"
#include "subnorm/structure.hpp"

namespace subnorm {

namespace {

using nlohmann::json;

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

std::uint64_t to_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("bad integer '" + std::string(s) + "'");
  }
  return v;
}

std::string tsv_line(const CensusRecord& r) {
  auto field = [](const std::string& s) { return s.empty() ? std::string("-") : s; };
  std::string ratios, checks;
  for (const auto& [p, v] : r.p_ratios) {
    if (!ratios.empty()) ratios += ',';
    ratios += std::to_string(p) + ":" + v.str();
  }
  for (const auto& [name, ok] : r.checks) {
    if (!checks.empty()) checks += ',';
    checks += name + "=" + (ok ? "1" : "0");
  }
  std::ostringstream out;
  out << r.key << '\t' << r.order << '\t' << r.spr_total.str() << '\t' << field(ratios) << '\t'
      << (r.phi ? r.phi->str() : "-") << '\t' << field(checks) << '\t' << field(r.version) << '\t'
      << field(r.timestamp);
  return out.str();
}

CensusRecord from_tsv(std::string_view line) {
  auto f = split(line, '\t');
  if (f.size() != 8) throw DomainError("expected 8 columns");
  auto unfield = [](const std::string& s) { return s == "-" ? std::string() : s; };
  CensusRecord r;
  r.key = f[0];
  if (r.key.empty() || r.key == "-") throw DomainError("missing key");
  r.order = to_u64(f[1]);
  r.spr_total = ExactRatio::parse(f[2]);
  if (f[3] != "-") {
    for (const auto& item : split(f[3], ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos) throw DomainError("bad ratio item");
      r.p_ratios[to_u64(std::string_view(item).substr(0, colon))] =
          ExactRatio::parse(std::string_view(item).substr(colon + 1));
    }
  }
  if (f[4] != "-") r.phi = ExactRatio::parse(f[4]);
  if (f[5] != "-") {
    for (const auto& item : split(f[5], ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) throw DomainError("bad check item");
      auto v = item.substr(eq + 1);
      if (v != "0" && v != "1") throw DomainError("bad check value");
      r.checks[item.substr(0, eq)] = v == "1";
    }
  }
  r.version = unfield(f[6]);
  r.timestamp = unfield(f[7]);
  return r;
}

json to_json(const CensusRecord& r) {
  json ratios = json::object();
  for (const auto& [p, v] : r.p_ratios) ratios[std::to_string(p)] = v.str();
  json checks = json::object();
  for (const auto& [name, ok] : r.checks) checks[name] = ok;
  return json{{"key", r.key},
              {"order", r.order},
              {"spr", r.spr_total.str()},
              {"p_ratios", ratios},
              {"phi", r.phi ? json(r.phi->str()) : json(nullptr)},
              {"checks", checks},
              {"version", r.version},
              {"timestamp", r.timestamp}};
}

CensusRecord from_json(const json& j) {
  CensusRecord r;
  r.key = j.at("key").get<std::string>();
  if (r.key.empty()) throw DomainError("missing key");
  r.order = j.at("order").get<std::uint64_t>();
  r.spr_total = ExactRatio::parse(j.at("spr").get<std::string>());
  for (const auto& [p, v] : j.at("p_ratios").items()) {
    r.p_ratios[to_u64(p)] = ExactRatio::parse(v.get<std::string>());
  }
  if (!j.at("phi").is_null()) r.phi = ExactRatio::parse(j.at("phi").get<std::string>());
  for (const auto& [name, ok] : j.at("checks").items()) r.checks[name] = ok.get<bool>();
  r.version = j.at("version").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  return r;
}

}  // namespace

bool CensusRecord::same_mathematics(const CensusRecord& o) const {
  return key == o.key && order == o.order && spr_total == o.spr_total && p_ratios == o.p_ratios &&
         phi == o.phi && checks == o.checks;
}

CensusFormat parse_census_format(std::string_view text) {
  if (text == "tsv") return CensusFormat::tsv;
  if (text == "json-lines") return CensusFormat::json_lines;
  throw DomainError("unknown format '" + std::string(text) + "' (tsv or json-lines)");
}

std::string format_record(const CensusRecord& record, CensusFormat format) {
  if (format == CensusFormat::tsv) return tsv_line(record);
  return to_json(record).dump();
}

std::optional<CensusRecord> parse_record_line(std::string_view line) {
  try {
    if (!line.empty() && line.front() == '{') return from_json(json::parse(line));
    return from_tsv(line);
  } catch (const json::exception&) {
    return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
}

CensusContents read_census(const std::string& path) {
  CensusContents contents;
  std::ifstream in(path);
  if (!in) return contents;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (auto r = parse_record_line(line)) {
      contents.records.push_back(std::move(*r));
    } else {
      ++contents.warnings;
    }
  }
  return contents;
}

void append_census(const std::string& path, const std::vector<CensusRecord>& records,
                   CensusFormat format) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot append to census file '" + path + "'");
  for (const auto& r : records) out << format_record(r, format) << '\n';
  out.flush();
  if (!out) throw Error("write to census file '" + path + "' failed");
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

CensusRecord compute_census_record(const Group& g, std::string key, const std::optional<Group>& aut) {
  CensusRecord r;
  r.key = std::move(key);
  r.order = g.order();
  r.spr_total = spr_group(g).spr_total;
  bool sums = true;
  for (auto p : prime_divisors(g.order())) {
    r.p_ratios[p] = count_p_elements(g, p).ratio;
    sums = sums && sum_identity_check(g, p).holds;
  }
  if (aut) r.phi = phi_ratio(g, *aut);
  const auto s = structure_tests(g);
  bool bound = true;
  if (!s.is_solvable) bound = r.spr_total <= ExactRatio(1, 6);
  if (s.is_nilpotent) bound = r.spr_total == ExactRatio(1);
  r.checks["sum_identity"] = sums;
  r.checks["op_criterion"] = check_op_criterion(g).empty();
  r.checks["spr_bound"] = bound;
  r.version = std::string(kToolkitVersion);
  r.timestamp = utc_timestamp();
  return r;
}

}  // namespace subnorm
