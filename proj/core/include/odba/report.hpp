#ifndef ODBA_REPORT_HPP
#define ODBA_REPORT_HPP

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "odba/model.hpp"

namespace odba {

using Json = nlohmann::ordered_json;

enum class Command { kVerify, kSpectrum, kSolveBae, kSolveFunctional };

std::string command_name(Command c);
Command parse_command(const std::string& name);

// A fully resolved run request.  With a fixed rng_seed the produced report
// is byte-identical across invocations; measured wall time is therefore
// only embedded when with_timing is set (it is always printed to the
// console summary).
struct RunConfig {
  Command command = Command::kVerify;
  ModelParams params;
  std::string branch = "both";  // "+", "-", "both"
  std::optional<int> M;         // default: N/2 rounded up per parity policy
  double identity_tolerance = 1e-10;
  double solver_tolerance = 1e-11;
  double match_tolerance = 1e-6;
  int seed_count = 200;
  std::uint64_t rng_seed = 0;
  std::string strategy = "multistart";  // or "homotopy-xi"
  std::string output_path;              // empty: stdout only
  std::string format = "json";          // or "csv"
  bool with_timing = false;
  bool use_cache = true;
};

// Default sector size: N/2 for even N, (N+1)/2 for odd N.
int default_sector(int N);

// Parse and validate a config document.  Unknown fields, malformed values,
// and model-constraint violations throw std::invalid_argument with the
// offending field named.
RunConfig parse_config(const Json& doc);
RunConfig parse_config_file(const std::string& path);
Json config_to_json(const RunConfig& config);

struct RunOutcome {
  Json report;      // top-level keys: config, results, failures, timing, version
  int exit_code;    // 0 iff every requested check passed / solve converged
};

// Execute the run and assemble the report.  Results are cached under a
// hash of the canonical config (directory from ODBA_CACHE_DIR, falling
// back to $HOME/.cache/odba); cache writes are atomic renames.
RunOutcome run(const RunConfig& config);

// Serialize a report for --format csv: flattens the tabular parts.
std::string report_to_csv(const Json& report);

// JSON helpers shared with the CLI.
Json cplx_to_json(Cplx z);
Cplx cplx_from_json(const Json& j);

}  // namespace odba

#endif
