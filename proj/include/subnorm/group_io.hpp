#pragma once

#include <string>
#include <string_view>

#include "subnorm/config.hpp"
#include "subnorm/group.hpp"

namespace subnorm {

/// Text format: the first non-comment line is `degree n`; every later
/// non-comment line is one generator, given as the images of points 1..n.
/// Lines whose first non-blank character is '#' are comments, blank lines are
/// skipped. Errors are ParseError with the 1-based line number. A file with no
/// generator rows describes the trivial group of degree n.
Group parse_group(std::string_view text, const Config& caps = {});

/// Reads a file; Error when it cannot be opened.
Group read_group_file(const std::string& path, const Config& caps = {});

/// Canonical form: `degree n`, then the distinct generators sorted by image
/// sequence, one per line.
std::string serialize_group(const Group& g);

}  // namespace subnorm
