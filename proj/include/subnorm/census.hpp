#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subnorm/group.hpp"
#include "subnorm/ratio.hpp"

namespace subnorm {

inline constexpr std::string_view kToolkitVersion = "0.1.0";

struct CensusRecord {
  std::string key;
  std::uint64_t order = 0;
  ExactRatio spr_total;
  /// p -> |U_p(G)| / |G|_p for every prime dividing |G|.
  std::map<std::uint64_t, ExactRatio> p_ratios;
  std::optional<ExactRatio> phi;
  std::map<std::string, bool> checks;
  std::string version;
  std::string timestamp;

  /// Equality of everything except version and timestamp.
  bool same_mathematics(const CensusRecord& other) const;
};

enum class CensusFormat { tsv, json_lines };

/// "tsv" or "json-lines"; DomainError otherwise.
CensusFormat parse_census_format(std::string_view text);

/// One line, no trailing newline. TSV columns: key, order, spr, p-ratios
/// ("2:4,3:1"), phi, checks ("name=1,name=0"), version, timestamp; "-" marks
/// an empty field.
std::string format_record(const CensusRecord& record, CensusFormat format);

/// Either format, detected per line. nullopt for malformed lines.
std::optional<CensusRecord> parse_record_line(std::string_view line);

struct CensusContents {
  std::vector<CensusRecord> records;
  /// Malformed lines skipped.
  std::size_t warnings = 0;
};

/// Blank lines and lines starting with '#' are ignored. A missing file reads as empty.
CensusContents read_census(const std::string& path);

/// Appends one line per record. Error when the file cannot be opened for appending.
void append_census(const std::string& path, const std::vector<CensusRecord>& records,
                   CensusFormat format);

/// UTC, "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

/// spr, p-ratios, phi when aut is given, and the checks sum_identity,
/// op_criterion and spr_bound (nonsolvable: spr <= 1/6, nilpotent: spr = 1).
CensusRecord compute_census_record(const Group& g, std::string key,
                                   const std::optional<Group>& aut = std::nullopt);

}  // namespace subnorm
