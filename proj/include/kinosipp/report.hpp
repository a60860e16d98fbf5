#pragma once

#include <filesystem>
#include <iosfwd>

#include "kinosipp/suite.hpp"

namespace kinosipp {

// Columns: planner,map,density,seed,status,cost_steps,expansions,generations,runtime_ms
void write_csv(const SuiteResult& result, std::ostream& out);
void write_csv(const SuiteResult& result, const std::filesystem::path& path);
SuiteResult read_csv(std::istream& in);
SuiteResult read_csv(const std::filesystem::path& path);

// success_rate.svg (per bucket, one bar per planner) and runtime.svg (mean
// runtime per bucket and planner) under `dir`.
void emit_plots(const SuiteResult& result, const std::filesystem::path& dir);

std::string success_rate_svg(const SuiteResult& result);
std::string runtime_svg(const SuiteResult& result);

}  // namespace kinosipp
