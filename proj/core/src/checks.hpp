#pragma once

#include <string>

#include "qaff/verify.hpp"

namespace qaff::verify::detail {

struct Outcome {
  int cases = 0;
  int failures = 0;
  std::string summary;
  std::string witness;

  void fail(const std::string& w) {
    ++failures;
    if (witness.empty()) witness = w;
  }
  bool pass() const { return failures == 0 && cases > 0; }
};

Outcome check_kostant_ideal(Workspace& ws);
Outcome check_fixtures(Workspace& ws);
Outcome check_mapdet(Workspace& ws);
Outcome check_dtoj(Workspace& ws);
Outcome check_main_theorem(Workspace& ws);
Outcome check_jbasis(Workspace& ws, int maxlen);
Outcome check_positivity(Workspace& ws, int maxlen);
Outcome check_hopf(Workspace& ws, int maxlen);
Outcome check_jacobi_trudi(int cutoff, int max_size);

}  // namespace qaff::verify::detail
