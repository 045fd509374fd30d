#pragma once

#include "subnorm/group.hpp"

namespace subnorm {

struct StructureReport {
  bool is_solvable;
  bool is_nilpotent;
};

/// Solvable: the derived series reaches 1. Nilpotent: every Sylow subgroup is
/// normal (stored groups) or the lower central series reaches 1 (otherwise).
StructureReport structure_tests(const Group& g);

}  // namespace subnorm
