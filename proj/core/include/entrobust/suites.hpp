// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace entrobust::suites {

struct SuiteOptions {
  int samples = 0;  // 0: suite default
  std::uint64_t seed = 0;
  double tol = 1e-8;
  int threads = 0;  // 0: serial
  bool timing = false;
};

struct SuiteCheck {
  std::string name;
  bool passed = false;
  double value = 0.0;  // measured
  double bound = 0.0;  // required
  std::string note;    // "informational" checks never fail the suite
};

/// One evaluated instance: the sampled input and the numbers computed for
/// it. Records are ordered by index, so reports do not depend on how the
/// instances were scheduled.
struct InstanceRecord {
  int index = 0;
  std::string family;
  std::string params;  // JSON text of the sampled parameters
  std::map<std::string, double> values;
  double wall_time_s = 0.0;  // emitted only when timing is requested
};

struct RunReport {
  std::string suite;
  std::uint64_t seed = 0;
  double tol = 0.0;
  int samples = 0;
  std::vector<SuiteCheck> checks;
  std::vector<InstanceRecord> records;
  std::map<std::string, double> metrics;
  double wall_time_s = 0.0;
  bool timing = false;

  bool all_passed() const;
  int passed_count() const;
  int failed_count() const;
};

std::vector<std::string> suite_names();
RunReport run_suite(const std::string& name, const SuiteOptions& options);
std::string report_to_json(const RunReport& report);

}  // namespace entrobust::suites
