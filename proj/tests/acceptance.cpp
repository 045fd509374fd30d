// Runs every acceptance criterion and prints one line per criterion.
// Exit status 0 iff all pass.

#include <iostream>

#include "subnorm/verify.hpp"

int main() {
  bool ok = true;
  subnorm::run_criteria(subnorm::all_criteria(), {}, [&](const subnorm::CriterionResult& r) {
    std::cout << subnorm::format_result(r) << std::endl;
    ok = ok && r.passed;
  });
  return ok ? 0 : 1;
}
