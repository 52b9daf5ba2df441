#pragma once

#include "toda/report.hpp"

namespace toda {

// Named verification batteries. Each returns one record per checked identity;
// failures become failing records, never exceptions (errors are captured).
std::vector<CheckRecord> suite_metric(const RunConfig& cfg);
std::vector<CheckRecord> suite_spectrum(const RunConfig& cfg);
std::vector<CheckRecord> suite_formal(const RunConfig& cfg);
std::vector<CheckRecord> suite_integral(const RunConfig& cfg);
std::vector<CheckRecord> suite_specfun(const RunConfig& cfg);
std::vector<CheckRecord> suite_resurgence(const RunConfig& cfg);
std::vector<CheckRecord> suite_stokes(const RunConfig& cfg);

// Executes the selected suites, applies tolerance overrides, and assembles the
// report (exit-code contract: 0 pass / 1 any failure / 2 config error).
Report run_suite(const RunConfig& cfg);

// CSV plot data extracted from dedicated computations.
std::string emit_plot_data(const RunConfig& cfg, const std::string& which);

}  // namespace toda
