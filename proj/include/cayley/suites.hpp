#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cayley/io.hpp"

namespace cayley {

/// Knobs shared by the verification sweeps. Zero / empty means "use the
/// suite's default".
struct SuiteOptions {
  int max_order = 0;
  int max_vertices = 0;
  int max_side = 0;
  int max_size = 0;   // |M|, |D| caps for sumset sweeps
  int max_m = 0;
  int max_d = 0;
  int max_k = -1;
  int j = 0;
  double c = 0;
  int samples = 0;
  std::uint64_t seed = 1;
  int seeds = 0;      // number of master seeds / repetitions
  int retries = 0;
  double alpha = 0;
  int d = 0;
  std::vector<int> ts;
  std::vector<std::pair<int, int>> instances;  // (n, d) for Z_{2n} constructions
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::int64_t checked = 0;
  std::int64_t violations = 0;
  std::vector<std::string> failures;  // first few, for the report
  json details = json::object();

  void violation(const std::string& what);
  json to_json() const;
};

/// Suite names accepted by run_suite, in a stable order.
const std::vector<std::string>& suite_names();

/// Runs one named sweep. Unknown names raise InvalidInput; budget overruns
/// propagate as InstanceTooLarge.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace cayley
