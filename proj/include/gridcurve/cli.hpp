#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gridcurve/lsystem.hpp"

namespace gridcurve {

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // the question was answered "no"
inline constexpr int kExitUsage = 2;

// "PRODUCTION@grid" or "R<order>-<id>@grid". References are looked up in
// <cache>/<grid>-<order>.txt when a cache directory is given, and otherwise
// (or when the file is missing) by running the search, which then fills the
// cache. Throws MalformedSystem for bad specs and unknown IDs.
SimpleLsys resolve_curve(const std::string& spec, const std::optional<std::filesystem::path>& cache = {});

// Worker count from GRIDCURVE_JOBS, else 1.
int default_jobs();

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gridcurve
