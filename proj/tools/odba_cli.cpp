// Command-line front end: verify | spectrum | solve-bae | solve-functional.
//
// Model parameters come from --config <json> or inline flags; inline flags
// override config-file values.  Reports are JSON (or flattened CSV) with
// top-level keys config, results, failures, timing, version.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "odba/report.hpp"
#include "odba/version.hpp"

namespace {

// "0.2,-0.4" or "homogeneous" -> config theta entry.
odba::Json theta_json(const std::string& text) {
  if (text == "homogeneous") return odba::Json("homogeneous");
  odba::Json arr = odba::Json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      arr.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--theta", "not a number: '" + item + "'");
    }
  }
  return arr;
}

struct CliOptions {
  std::string config_path;
  int N = -1;
  double p = std::numeric_limits<double>::quiet_NaN();
  double q = std::numeric_limits<double>::quiet_NaN();
  double xi = std::numeric_limits<double>::quiet_NaN();
  std::string theta;
  std::string branch;
  std::string M;
  std::string strategy;
  int seeds = -1;
  long long rng_seed = -1;
  std::string out;
  std::string format;
  bool with_timing = false;
  bool no_cache = false;
};

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--config", opt.config_path, "JSON config file");
  cmd->add_option("--N", opt.N, "chain length");
  cmd->add_option("--p", opt.p, "boundary parameter p");
  cmd->add_option("--q", opt.q, "boundary parameter q");
  cmd->add_option("--xi", opt.xi, "off-diagonal boundary strength xi");
  cmd->add_option("--theta", opt.theta,
                  "comma-separated inhomogeneities, or 'homogeneous'");
  cmd->add_option("--branch", opt.branch, "+, -, or both");
  cmd->add_option("--M", opt.M, "sector size, or 'default'");
  cmd->add_option("--strategy", opt.strategy, "multistart or homotopy-xi");
  cmd->add_option("--seeds", opt.seeds, "solver seed count");
  cmd->add_option("--rng-seed", opt.rng_seed, "RNG seed (determinism contract)");
  cmd->add_option("--out", opt.out, "report output path");
  cmd->add_option("--format", opt.format, "json or csv");
  cmd->add_flag("--timing", opt.with_timing,
                "embed measured wall time in the report (breaks byte-identical "
                "reports across runs)");
  cmd->add_flag("--no-cache", opt.no_cache, "bypass the result cache");
}

odba::RunConfig build_config(const std::string& command, const CliOptions& opt) {
  odba::Json doc;
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) {
      throw std::invalid_argument("cannot open config file: " + opt.config_path);
    }
    in >> doc;
  } else {
    doc = odba::Json::object();
  }
  doc["command"] = command;
  if (opt.N > 0) doc["N"] = opt.N;
  if (!std::isnan(opt.p)) doc["p"] = opt.p;
  if (!std::isnan(opt.q)) doc["q"] = opt.q;
  if (!std::isnan(opt.xi)) doc["xi"] = opt.xi;
  if (!opt.theta.empty()) doc["theta"] = theta_json(opt.theta);
  if (!opt.branch.empty()) doc["branch"] = opt.branch;
  if (!opt.M.empty()) {
    if (opt.M == "default") {
      doc["M"] = "default";
    } else {
      doc["M"] = std::stoi(opt.M);
    }
  }
  if (!opt.strategy.empty()) doc["strategy"] = opt.strategy;
  if (opt.seeds > 0) doc["seed_count"] = opt.seeds;
  if (opt.rng_seed >= 0) doc["rng_seed"] = opt.rng_seed;
  if (!opt.out.empty()) doc["output_path"] = opt.out;
  if (!opt.format.empty()) doc["format"] = opt.format;
  if (opt.with_timing) doc["with_timing"] = true;
  if (opt.no_cache) doc["use_cache"] = false;
  return odba::parse_config(doc);
}

int execute(const std::string& command, const CliOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const odba::RunConfig config = build_config(command, opt);
  const odba::RunOutcome outcome = odba::run(config);
  const auto t1 = std::chrono::steady_clock::now();
  const double wall_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();

  const std::string rendered =
      config.format == "csv" ? odba::report_to_csv(outcome.report)
                             : outcome.report.dump(2) + "\n";
  if (!config.output_path.empty()) {
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << config.output_path << "\n";
      return 2;
    }
    out << rendered;
  } else {
    std::cout << rendered;
  }

  const auto& failures = outcome.report.at("failures");
  std::cerr << command << ": " << (failures.empty() ? "ok" : "FAILURES") << " ("
            << failures.size() << " failure(s), " << wall_ms << " ms)\n";
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Open XXX chain with unparallel boundary fields: identity "
               "verification, eigenvalue extraction, and Bethe-equation "
               "solving"};
  app.set_version_flag("--version", odba::kVersion);
  app.require_subcommand(1);

  CliOptions opt;
  for (const char* name :
       {"verify", "spectrum", "solve-bae", "solve-functional"}) {
    add_common_flags(app.add_subcommand(name), opt);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    return execute(app.get_subcommands().front()->get_name(), opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
