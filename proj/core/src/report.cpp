#include "odba/report.hpp"

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "odba/bae_solve.hpp"
#include "odba/lambda_solve.hpp"
#include "odba/verify.hpp"
#include "odba/version.hpp"

namespace odba {

namespace {

constexpr double kLambdaTolerance = 1e-8;

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw std::invalid_argument("config field '" + field + "': " + why);
}

Cplx number_field(const Json& j, const std::string& field) {
  if (j.is_number()) return Cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Cplx(j[0].get<double>(), j[1].get<double>());
  }
  bad_field(field, "expected a number or [re, im] pair");
}

std::uint64_t fnv1a_str(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::filesystem::path cache_dir() {
  if (const char* dir = std::getenv("ODBA_CACHE_DIR")) {
    return std::filesystem::path(dir);
  }
  if (const char* home = std::getenv("HOME")) {
    return std::filesystem::path(home) / ".cache" / "odba";
  }
  return std::filesystem::temp_directory_path() / "odba-cache";
}

void atomic_write(const std::filesystem::path& path, const std::string& data) {
  std::filesystem::create_directories(path.parent_path());
  const std::filesystem::path tmp =
      path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary);
    out << data;
  }
  std::filesystem::rename(tmp, path);  // last writer wins
}

Json roots_to_json(const BetheRootSet& roots) {
  Json j;
  j["branch"] = roots.branch > 0 ? "+" : "-";
  j["M"] = roots.M;
  j["merged"] = roots.merged;
  auto family = [](const std::vector<Cplx>& v) {
    Json arr = Json::array();
    for (Cplx z : v) arr.push_back(cplx_to_json(z));
    return arr;
  };
  j["lambda"] = family(roots.lambda);
  j["mu"] = family(roots.mu);
  j["nu"] = family(roots.nu);
  return j;
}

Json result_to_json(const VerificationResult& r) {
  Json j;
  j["id"] = r.identity_id;
  j["residual"] = r.residual;
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  Json pts = Json::array();
  for (Cplx z : r.points) pts.push_back(cplx_to_json(z));
  j["points"] = pts;
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  return j;
}

Json match_to_json(const SpectrumMatchReport& m) {
  Json j;
  j["matched_fraction"] = m.matched_fraction;
  j["tolerance"] = m.tolerance;
  j["seed_count"] = m.seed_count;
  j["completeness"] = m.completeness_confirmed ? "confirmed" : "unconfirmed";
  j["exact_levels"] = m.exact_levels;
  j["tq_energies"] = m.tq_energies;
  Json pairs = Json::array();
  for (const MatchedPair& p : m.pairs) {
    pairs.push_back({{"exact", p.exact}, {"tq", p.tq}, {"distance", p.distance}});
  }
  j["pairs"] = pairs;
  j["unmatched_exact"] = m.unmatched_exact;
  return j;
}

std::vector<int> branches_of(const RunConfig& config) {
  if (config.branch == "+") return {+1};
  if (config.branch == "-") return {-1};
  return {+1, -1};
}

BaeStrategy strategy_of(const RunConfig& config) {
  return config.strategy == "homotopy-xi" ? BaeStrategy::kHomotopyXi
                                          : BaeStrategy::kMultistart;
}

void run_verify(const RunConfig& config, Json& results, Json& failures) {
  Rng rng(config.rng_seed);
  const std::vector<VerificationResult> catalog =
      verify_catalog(config.params, rng, config.identity_tolerance);
  const std::vector<VerificationResult> vacuum =
      verify_vacuum_relations(config.params, config.rng_seed ^ 0x0DBAull);
  results["identities"] = Json::array();
  results["vacuum"] = Json::array();
  for (const auto& r : catalog) {
    results["identities"].push_back(result_to_json(r));
    if (!r.passed) {
      failures.push_back({{"kind", "identity"},
                          {"id", r.identity_id},
                          {"residual", r.residual},
                          {"tolerance", r.tolerance}});
    }
  }
  for (const auto& r : vacuum) {
    results["vacuum"].push_back(result_to_json(r));
    if (!r.passed) {
      failures.push_back({{"kind", "vacuum"},
                          {"id", r.identity_id},
                          {"residual", r.residual},
                          {"tolerance", r.tolerance}});
    }
  }
}

void run_spectrum(const RunConfig& config, Json& results, Json& failures) {
  const std::vector<LambdaCandidate> cands = lambda_from_oracle(config.params);
  results["lambda_tolerance"] = kLambdaTolerance;
  results["eigenvalues"] = Json::array();
  int index = 0;
  for (const LambdaCandidate& c : cands) {
    Json j;
    j["index"] = index;
    Json coeffs = Json::array();
    for (int k = 0; k <= c.poly.degree(); ++k) {
      coeffs.push_back(cplx_to_json(c.poly.coeff(k)));
    }
    j["coeffs"] = coeffs;
    j["residuals"] = {{"crossing", c.crossing_residual},
                      {"initial", c.initial_residual},
                      {"leading", c.leading_residual},
                      {"functional", c.functional_residual}};
    if (config.params.homogeneous()) {
      j["energy"] = cplx_to_json(lambda_energy(c.poly, config.params.N));
    }
    results["eigenvalues"].push_back(j);
    const double worst =
        std::max({c.crossing_residual, c.initial_residual, c.leading_residual,
                  c.functional_residual});
    if (worst > kLambdaTolerance) {
      failures.push_back({{"kind", "lambda_property"},
                          {"index", index},
                          {"residual", worst},
                          {"tolerance", kLambdaTolerance}});
    }
    ++index;
  }
}

void run_solve_bae(const RunConfig& config, Json& results, Json& failures) {
  const int M = config.M.value_or(default_sector(config.params.N));
  const bool homogeneous = config.params.homogeneous();
  results["M"] = M;
  results["strategy"] = config.strategy;
  results["root_sets"] = Json::array();

  BaeSolverOptions options;
  options.tolerance = config.solver_tolerance;

  int total = 0;
  for (int branch : branches_of(config)) {
    const TQContext ctx = make_tq_context(config.params, branch);
    const std::vector<BetheRootSet> sols = solve_bae(
        ctx, M, strategy_of(config), config.seed_count, config.rng_seed, options);
    for (const BetheRootSet& s : sols) {
      Json j = roots_to_json(s);
      double worst = 0.0;
      for (Cplx r : bae_residuals(s, ctx)) worst = std::max(worst, std::abs(r));
      j["max_residual"] = worst;
      if (homogeneous) {
        try {
          j["energy"] = cplx_to_json(energy_from_roots(s, ctx));
        } catch (const std::domain_error& e) {
          j["energy_error"] = e.what();
        }
      }
      results["root_sets"].push_back(j);
      ++total;
    }
  }
  if (total == 0) {
    failures.push_back({{"kind", "solver"},
                        {"id", "solve-bae"},
                        {"message", "no converged root sets; raise seed count"}});
  }

  if (homogeneous) {
    const MPolicy policy = config.M.has_value() ? MPolicy::kFixed : MPolicy::kSweep;
    const SpectrumMatchReport match = spectrum_match(
        config.params, policy, M, strategy_of(config), config.seed_count,
        config.rng_seed, config.match_tolerance, options);
    results["spectrum_match"] = match_to_json(match);
  }
}

void run_solve_functional(const RunConfig& config, Json& results,
                          Json& failures) {
  const FunctionalMode mode = config.params.homogeneous()
                                  ? FunctionalMode::kHomogeneous
                                  : FunctionalMode::kInhomogeneous;
  const std::vector<LambdaCandidate> cands = solve_lambda_functional(
      config.params, mode, config.seed_count, config.rng_seed);
  const std::vector<LambdaCandidate> oracle = lambda_from_oracle(config.params);

  results["mode"] = mode == FunctionalMode::kHomogeneous ? "homogeneous"
                                                         : "inhomogeneous";
  results["candidates"] = Json::array();
  int index = 0;
  for (const LambdaCandidate& c : cands) {
    Json j;
    j["index"] = index++;
    Json coeffs = Json::array();
    for (int k = 0; k <= c.poly.degree(); ++k) {
      coeffs.push_back(cplx_to_json(c.poly.coeff(k)));
    }
    j["coeffs"] = coeffs;
    j["functional_residual"] = c.functional_residual;
    double best = std::numeric_limits<double>::infinity();
    for (const LambdaCandidate& o : oracle) {
      best = std::min(best, coefficient_distance(c.poly, o.poly));
    }
    j["oracle_distance"] = best;
    results["candidates"].push_back(j);
  }

  int recovered = 0;
  for (const LambdaCandidate& o : oracle) {
    for (const LambdaCandidate& c : cands) {
      if (coefficient_distance(c.poly, o.poly) <= 1e-7) {
        ++recovered;
        break;
      }
    }
  }
  results["oracle_count"] = static_cast<int>(oracle.size());
  results["oracle_recovered"] = recovered;
  results["oracle_recovered_fraction"] =
      oracle.empty() ? 0.0 : static_cast<double>(recovered) / oracle.size();
  if (cands.empty()) {
    failures.push_back({{"kind", "solver"},
                        {"id", "solve-functional"},
                        {"message", "no converged candidates; raise seed count"}});
  }
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::kVerify:
      return "verify";
    case Command::kSpectrum:
      return "spectrum";
    case Command::kSolveBae:
      return "solve-bae";
    case Command::kSolveFunctional:
      return "solve-functional";
  }
  return "verify";
}

Command parse_command(const std::string& name) {
  if (name == "verify") return Command::kVerify;
  if (name == "spectrum") return Command::kSpectrum;
  if (name == "solve-bae") return Command::kSolveBae;
  if (name == "solve-functional") return Command::kSolveFunctional;
  bad_field("command", "unknown command '" + name + "'");
}

int default_sector(int N) { return N % 2 == 0 ? N / 2 : (N + 1) / 2; }

Json cplx_to_json(Cplx z) { return Json::array({z.real(), z.imag()}); }

Cplx cplx_from_json(const Json& j) {
  return Cplx(j.at(0).get<double>(), j.at(1).get<double>());
}

RunConfig parse_config(const Json& doc) {
  RunConfig config;
  if (!doc.is_object()) bad_field("<root>", "config must be a JSON object");
  if (!doc.contains("command")) bad_field("command", "missing");
  config.command = parse_command(doc.at("command").get<std::string>());

  if (!doc.contains("N")) bad_field("N", "missing");
  if (!doc.at("N").is_number_integer()) bad_field("N", "must be an integer");
  config.params.N = doc.at("N").get<int>();
  if (config.params.N < 1 || config.params.N > kMaxSites) {
    bad_field("N", "must be between 1 and " + std::to_string(kMaxSites));
  }

  config.params.p = doc.contains("p") ? number_field(doc.at("p"), "p") : Cplx(1.0);
  config.params.q = doc.contains("q") ? number_field(doc.at("q"), "q") : Cplx(1.0);
  config.params.xi =
      doc.contains("xi") ? number_field(doc.at("xi"), "xi") : Cplx(0.0);
  for (const char* f : {"p", "q", "xi"}) {
    const Cplx v = f[0] == 'p'   ? config.params.p
                   : f[0] == 'q' ? config.params.q
                                 : config.params.xi;
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      bad_field(f, "must be finite");
    }
  }

  if (!doc.contains("theta")) bad_field("theta", "missing");
  const Json& th = doc.at("theta");
  if (th.is_string()) {
    if (th.get<std::string>() != "homogeneous") {
      bad_field("theta", "expected a list of N values or \"homogeneous\"");
    }
    config.params.theta.assign(config.params.N, Cplx(0.0));
  } else if (th.is_array()) {
    if (static_cast<int>(th.size()) != config.params.N) {
      bad_field("theta", "length " + std::to_string(th.size()) +
                             " does not equal N = " +
                             std::to_string(config.params.N));
    }
    config.params.theta.clear();
    for (const Json& e : th) {
      const Cplx v = number_field(e, "theta");
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        bad_field("theta", "entries must be finite");
      }
      config.params.theta.push_back(v);
    }
    const std::string bad = theta_constraint_violation(config.params.theta);
    if (!bad.empty()) bad_field("theta", bad);
  } else {
    bad_field("theta", "expected a list of N values or \"homogeneous\"");
  }

  if (doc.contains("branch")) {
    config.branch = doc.at("branch").get<std::string>();
    if (config.branch != "+" && config.branch != "-" &&
        config.branch != "both") {
      bad_field("branch", "must be one of +, -, both");
    }
  }
  if (doc.contains("M")) {
    const Json& m = doc.at("M");
    if (m.is_string()) {
      if (m.get<std::string>() != "default") {
        bad_field("M", "expected an integer or \"default\"");
      }
    } else if (m.is_number_integer()) {
      config.M = m.get<int>();
      if (!sector_valid(config.params.N, *config.M)) {
        bad_field("M", "invalid sector for N = " +
                           std::to_string(config.params.N));
      }
    } else {
      bad_field("M", "expected an integer or \"default\"");
    }
  }
  if (doc.contains("tolerances")) {
    const Json& t = doc.at("tolerances");
    if (t.contains("identities")) {
      config.identity_tolerance = t.at("identities").get<double>();
    }
    if (t.contains("solver")) {
      config.solver_tolerance = t.at("solver").get<double>();
    }
    if (t.contains("match")) config.match_tolerance = t.at("match").get<double>();
    for (double v : {config.identity_tolerance, config.solver_tolerance,
                     config.match_tolerance}) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        bad_field("tolerances", "must be positive finite reals");
      }
    }
  }
  if (doc.contains("seed_count")) {
    config.seed_count = doc.at("seed_count").get<int>();
    if (config.seed_count < 1) bad_field("seed_count", "must be positive");
  }
  if (doc.contains("rng_seed")) {
    config.rng_seed = doc.at("rng_seed").get<std::uint64_t>();
  }
  if (doc.contains("strategy")) {
    config.strategy = doc.at("strategy").get<std::string>();
    if (config.strategy != "multistart" && config.strategy != "homotopy-xi") {
      bad_field("strategy", "must be multistart or homotopy-xi");
    }
  }
  if (doc.contains("output_path")) {
    config.output_path = doc.at("output_path").get<std::string>();
  }
  if (doc.contains("format")) {
    config.format = doc.at("format").get<std::string>();
    if (config.format != "json" && config.format != "csv") {
      bad_field("format", "must be json or csv");
    }
  }
  if (doc.contains("with_timing")) {
    config.with_timing = doc.at("with_timing").get<bool>();
  }
  if (doc.contains("use_cache")) {
    config.use_cache = doc.at("use_cache").get<bool>();
  }
  return config;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return parse_config(doc);
}

Json config_to_json(const RunConfig& config) {
  Json j;
  j["command"] = command_name(config.command);
  j["N"] = config.params.N;
  j["p"] = cplx_to_json(config.params.p);
  j["q"] = cplx_to_json(config.params.q);
  j["xi"] = cplx_to_json(config.params.xi);
  Json th = Json::array();
  for (Cplx t : config.params.theta) th.push_back(cplx_to_json(t));
  j["theta"] = th;
  j["branch"] = config.branch;
  if (config.M.has_value()) {
    j["M"] = *config.M;
  } else {
    j["M"] = "default";
  }
  j["tolerances"] = {{"identities", config.identity_tolerance},
                     {"solver", config.solver_tolerance},
                     {"match", config.match_tolerance}};
  j["seed_count"] = config.seed_count;
  j["rng_seed"] = config.rng_seed;
  j["strategy"] = config.strategy;
  j["format"] = config.format;
  return j;
}

RunOutcome run(const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  const Json config_json = config_to_json(config);
  const std::string canonical = config_json.dump();
  const std::uint64_t key = fnv1a_str(canonical + "|" + kVersion);
  char keyhex[32];
  std::snprintf(keyhex, sizeof(keyhex), "%016llx",
                static_cast<unsigned long long>(key));
  const std::filesystem::path cache_path =
      cache_dir() / (std::string("odba-") + keyhex + ".json");

  Json results = Json::object();
  Json failures = Json::array();
  bool from_cache = false;

  if (config.use_cache) {
    std::ifstream in(cache_path);
    if (in) {
      try {
        Json cached;
        in >> cached;
        if (cached.at("version") == kVersion &&
            cached.at("config") == config_json) {
          results = cached.at("results");
          failures = cached.at("failures");
          from_cache = true;
        }
      } catch (const std::exception&) {
        // unreadable cache entry: recompute
      }
    }
  }

  if (!from_cache) {
    switch (config.command) {
      case Command::kVerify:
        run_verify(config, results, failures);
        break;
      case Command::kSpectrum:
        run_spectrum(config, results, failures);
        break;
      case Command::kSolveBae:
        run_solve_bae(config, results, failures);
        break;
      case Command::kSolveFunctional:
        run_solve_functional(config, results, failures);
        break;
    }
    if (config.use_cache) {
      Json entry;
      entry["version"] = kVersion;
      entry["config"] = config_json;
      entry["results"] = results;
      entry["failures"] = failures;
      try {
        atomic_write(cache_path, entry.dump(2) + "\n");
      } catch (const std::exception&) {
        // cache is best-effort
      }
    }
  }

  const auto t1 = std::chrono::steady_clock::now();
  const double wall_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();

  Json report;
  report["config"] = config_json;
  report["results"] = results;
  report["failures"] = failures;
  // Measured wall time breaks the byte-identical determinism contract, so
  // it is embedded only on request; the CLI always prints it.
  report["timing"] =
      config.with_timing ? Json{{"wall_ms", wall_ms}} : Json{{"wall_ms", nullptr}};
  report["version"] = kVersion;

  RunOutcome outcome;
  outcome.report = std::move(report);
  outcome.exit_code = failures.empty() ? 0 : 1;
  return outcome;
}

namespace {

void csv_escape(std::ostream& out, const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    out << s;
    return;
  }
  out << '"';
  for (char c : s) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

void csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    csv_escape(out, cells[i]);
  }
  out << '\n';
}

std::string num(const Json& j) { return j.dump(); }

}  // namespace

std::string report_to_csv(const Json& report) {
  std::ostringstream out;
  csv_row(out, {"table", "key", "field", "value", "extra"});
  const Json& results = report.at("results");

  if (results.contains("identities")) {
    for (const char* table : {"identities", "vacuum"}) {
      if (!results.contains(table)) continue;
      for (const Json& r : results.at(table)) {
        csv_row(out, {table, r.at("id").get<std::string>(), "residual",
                      num(r.at("residual")),
                      r.at("passed").get<bool>() ? "pass" : "fail"});
      }
    }
  }
  if (results.contains("eigenvalues") || results.contains("candidates")) {
    const char* table = results.contains("eigenvalues") ? "eigenvalues"
                                                        : "candidates";
    for (const Json& c : results.at(table)) {
      const std::string key = num(c.at("index"));
      int k = 0;
      for (const Json& coeff : c.at("coeffs")) {
        csv_row(out, {table, key, "c" + std::to_string(k++),
                      num(coeff.at(0)), num(coeff.at(1))});
      }
      if (c.contains("residuals")) {
        for (const auto& [name, value] : c.at("residuals").items()) {
          csv_row(out, {table, key, "residual_" + name, num(value), ""});
        }
      }
      if (c.contains("oracle_distance")) {
        csv_row(out, {table, key, "oracle_distance",
                      num(c.at("oracle_distance")), ""});
      }
    }
  }
  if (results.contains("root_sets")) {
    int set_index = 0;
    for (const Json& s : results.at("root_sets")) {
      const std::string key = std::to_string(set_index++);
      for (const char* fam : {"lambda", "mu", "nu"}) {
        int k = 0;
        for (const Json& z : s.at(fam)) {
          csv_row(out, {"roots", key, std::string(fam) + std::to_string(k++),
                        num(z.at(0)), num(z.at(1))});
        }
      }
      if (s.contains("energy")) {
        csv_row(out, {"roots", key, "energy", num(s.at("energy").at(0)),
                      num(s.at("energy").at(1))});
      }
    }
  }
  if (results.contains("spectrum_match")) {
    const Json& m = results.at("spectrum_match");
    csv_row(out, {"spectrum_match", "", "matched_fraction",
                  num(m.at("matched_fraction")),
                  m.at("completeness").get<std::string>()});
    for (const Json& p : m.at("pairs")) {
      csv_row(out, {"spectrum_match", "pair", num(p.at("exact")),
                    num(p.at("tq")), num(p.at("distance"))});
    }
  }
  return out.str();
}

}  // namespace odba
