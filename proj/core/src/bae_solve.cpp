#include "odba/bae_solve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "odba/assignment.hpp"
#include "odba/monodromy.hpp"
#include "odba/rng.hpp"
#include "tq_eval.hpp"

namespace odba {

namespace {

using detail::Dual;
using detail::RootLayout;

double merit_of(const std::vector<Cplx>& raw, const std::vector<double>& scales) {
  double worst = 0.0;
  for (size_t i = 0; i < raw.size(); ++i) {
    worst = std::max(worst, std::abs(raw[i]) / scales[i]);
  }
  return worst;
}

double root_scale(const std::vector<Cplx>& z) {
  double s = 1.0;
  for (Cplx x : z) s = std::max(s, std::abs(x));
  return s;
}

// Reject root configurations where the cleared system has spurious zeros or
// the printed equations sit on a pole: coinciding roots (also across the
// u -> -u-1 involution), roots at -1/2, vanishing printed denominators.
bool roots_valid(const std::vector<Cplx>& z, const RootLayout& lay,
                 const TQContext& ctx) {
  const double eps = 1e-6 * root_scale(z);
  for (size_t i = 0; i < z.size(); ++i) {
    if (std::abs(2.0 * z[i] + 1.0) < eps) return false;
    for (size_t j = i + 1; j < z.size(); ++j) {
      if (std::abs(z[i] - z[j]) < eps) return false;
      if (std::abs(z[i] + z[j] + 1.0) < eps) return false;
    }
  }
  const detail::TqTerms<Cplx> t{ctx, lay, z};
  const double b = ctx.branch;
  const Cplx s = ctx.sqrt1xi2;
  const auto& P = ctx.params;
  const double denom_floor = 1e-8;
  auto small = [&](Cplx v) { return std::abs(v) < denom_floor; };
  if (lay.merged) {
    for (int i = 0; i < lay.n_lambda; ++i) {
      const Cplx x = z[i];
      if (small(t.q(x - 1.0)) || small(t.q(x + 1.0))) return false;
    }
    return true;
  }
  for (int i = 0; i < lay.n_lambda; ++i) {
    const Cplx x = z[i];
    if (small(t.q(x - 1.0) * t.q1(x) * t.q1(x - 1.0))) return false;
    if (small((x - b * P.p + 1.0) * (s * (x + 1.0) - b * P.q))) return false;
  }
  for (int i = 0; i < lay.M; ++i) {
    const Cplx x = z[lay.n_lambda + i];
    if (small(t.q(x + 1.0) * t.q2(x) * t.q2(x + 1.0))) return false;
    if (small((x - b * P.p + 1.0) * (s * (x + 1.0) - b * P.q))) return false;
  }
  for (int i = 0; i < lay.M; ++i) {
    const Cplx x = z[lay.n_lambda + lay.M + i];
    if (small(t.q(x - 1.0) * t.q1(x) * t.q1(x - 1.0))) return false;
    if (small((x + b * P.p) * (s * x + b * P.q))) return false;
  }
  return true;
}

bool newton_on_flat(std::vector<Cplx>& z, const RootLayout& lay,
                    const TQContext& ctx, const BaeSolverOptions& options) {
  const int n = lay.total();
  if (n == 0) return true;
  std::vector<Cplx> raw;
  std::vector<double> scales;
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    detail::cleared_residuals(ctx, lay, z, raw, &scales);
    const double merit = merit_of(raw, scales);
    if (!std::isfinite(merit)) return false;
    if (merit <= options.tolerance) return true;

    // Exact Jacobian, one forward-mode pass per unknown.
    Mat jac(n, n);
    std::vector<Dual> zd(z.begin(), z.end());
    std::vector<Dual> rd;
    for (int col = 0; col < n; ++col) {
      zd[col].d = 1.0;
      detail::cleared_residuals(ctx, lay, zd, rd, nullptr);
      for (int row = 0; row < n; ++row) jac(row, col) = rd[row].d;
      zd[col].d = 0.0;
    }
    Vec rhs(n);
    for (int i = 0; i < n; ++i) rhs(i) = -raw[i];
    const Vec step = jac.colPivHouseholderQr().solve(rhs);
    if (!step.allFinite()) return false;

    double alpha = 1.0;
    bool advanced = false;
    for (int halving = 0; halving < 40; ++halving) {
      std::vector<Cplx> trial(z);
      for (int i = 0; i < n; ++i) trial[i] += alpha * step(i);
      std::vector<Cplx> traw;
      std::vector<double> tscales;
      detail::cleared_residuals(ctx, lay, trial, traw, &tscales);
      const double tmerit = merit_of(traw, tscales);
      if (std::isfinite(tmerit) && tmerit < merit) {
        z.swap(trial);
        advanced = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!advanced) return false;
  }
  detail::cleared_residuals(ctx, lay, z, raw, &scales);
  return merit_of(raw, scales) <= options.tolerance;
}

// Representative of {x, -x-1} in the Re >= -1/2 half plane.
Cplx half_plane_rep(Cplx x) {
  const Cplx alt = -x - 1.0;
  if (x.real() > alt.real() + 1e-12) return x;
  if (alt.real() > x.real() + 1e-12) return alt;
  return x.imag() >= alt.imag() ? x : alt;
}

bool cplx_less(Cplx a, Cplx b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// Greedy nearest-neighbour distance between equally sized root families.
double family_distance(const std::vector<Cplx>& a, const std::vector<Cplx>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (Cplx x : a) {
    double best = std::numeric_limits<double>::infinity();
    int arg = -1;
    for (size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (d < best) {
        best = d;
        arg = static_cast<int>(j);
      }
    }
    if (arg < 0) return std::numeric_limits<double>::infinity();
    used[arg] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

double set_distance(const BetheRootSet& a, const BetheRootSet& b) {
  if (a.branch != b.branch || a.M != b.M || a.merged != b.merged) {
    return std::numeric_limits<double>::infinity();
  }
  double d = family_distance(a.lambda, b.lambda);
  d = std::max(d, family_distance(a.mu, b.mu));
  d = std::max(d, family_distance(a.nu, b.nu));
  return d;
}

std::vector<Cplx> seed_vector(int n, double radius, Rng& rng) {
  std::vector<Cplx> z(n);
  for (int i = 0; i < n; ++i) z[i] = rng.disk(radius);
  return z;
}

void append_unique(std::vector<BetheRootSet>& pool, BetheRootSet candidate) {
  canonicalize(candidate);
  const double tol = 1e-6 * (1.0 + root_scale(detail::flatten_roots(candidate)));
  for (const BetheRootSet& seen : pool) {
    if (set_distance(seen, candidate) <= tol) return;
  }
  pool.push_back(std::move(candidate));
}

void sort_solutions(std::vector<BetheRootSet>& pool) {
  std::sort(pool.begin(), pool.end(),
            [](const BetheRootSet& a, const BetheRootSet& b) {
              const std::vector<Cplx> za = detail::flatten_roots(a);
              const std::vector<Cplx> zb = detail::flatten_roots(b);
              if (za.size() != zb.size()) return za.size() < zb.size();
              for (size_t i = 0; i < za.size(); ++i) {
                if (za[i] != zb[i]) return cplx_less(za[i], zb[i]);
              }
              return false;
            });
}

bool is_diagonal_context(const TQContext& ctx) {
  return ctx.params.xi == Cplx(0.0);
}

RootLayout make_layout(const TQContext& ctx, int M, bool merged) {
  RootLayout lay;
  lay.merged = merged;
  lay.M = M;
  lay.n_lambda = merged ? lambda_count(ctx.params.N, M) + M
                        : lambda_count(ctx.params.N, M);
  lay.power = merged ? 1 : tq_inhomogeneous_power(ctx.params.N, M);
  return lay;
}

BetheRootSet pack_solution(const std::vector<Cplx>& z, const RootLayout& lay,
                           const TQContext& ctx, int M) {
  BetheRootSet roots;
  roots.branch = ctx.branch;
  roots.M = M;
  roots.merged = lay.merged;
  detail::unflatten_roots(z, lay, roots);
  return roots;
}

std::vector<BetheRootSet> multistart(const TQContext& ctx, int M, bool merged,
                                     int seed_count, std::uint64_t rng_seed,
                                     const BaeSolverOptions& options) {
  const RootLayout lay = make_layout(ctx, M, merged);
  Rng rng(rng_seed);
  const double radius =
      options.seed_radius_scale * std::max(1, ctx.params.N);
  std::vector<BetheRootSet> pool;
  for (int k = 0; k < seed_count; ++k) {
    std::vector<Cplx> z = seed_vector(lay.total(), radius, rng);
    if (!newton_on_flat(z, lay, ctx, options)) continue;
    if (!roots_valid(z, lay, ctx)) continue;
    append_unique(pool, pack_solution(z, lay, ctx, M));
  }
  sort_solutions(pool);
  return pool;
}

// Continue one root vector from xi_from to xi_to, subdividing on failure.
bool continue_in_xi(std::vector<Cplx>& z, const RootLayout& lay,
                    const ModelParams& base, int branch, double xi_from,
                    double xi_to, const BaeSolverOptions& options, int depth) {
  ModelParams p = base;
  p.xi = xi_to;
  const TQContext ctx = make_tq_context(p, branch);
  std::vector<Cplx> trial = z;
  if (newton_on_flat(trial, lay, ctx, options)) {
    z.swap(trial);
    return true;
  }
  if (depth >= 3) return false;
  const double mid = 0.5 * (xi_from + xi_to);
  return continue_in_xi(z, lay, base, branch, xi_from, mid, options, depth + 1) &&
         continue_in_xi(z, lay, base, branch, mid, xi_to, options, depth + 1);
}

std::vector<BetheRootSet> homotopy_xi(const TQContext& ctx, int M,
                                      int seed_count,
                                      const BaeSolverOptions& options) {
  const ModelParams& target = ctx.params;
  ModelParams diag = target;
  diag.xi = 0.0;
  const TQContext ctx0 = make_tq_context(diag, ctx.branch);

  // Stage 0: merged (ordinary T-Q) solutions at xi = 0.  Seeds follow a
  // fixed internal schedule so the homotopy output is rng-independent.
  const std::vector<BetheRootSet> stage0 =
      multistart(ctx0, M, true, std::max(seed_count, 32), 0x0dba5eedULL,
                 options);
  if (target.xi == Cplx(0.0)) return stage0;

  const RootLayout lay = make_layout(ctx, M, false);
  const int n_lambda = lay.n_lambda;
  const int steps = std::clamp(options.homotopy_steps, 10, 50);
  const double xi_target = target.xi.real();

  std::vector<BetheRootSet> pool;
  for (const BetheRootSet& s0 : stage0) {
    const std::vector<Cplx> w = s0.lambda;  // n_lambda + M merged roots
    // Choose which merged roots split into (mu, nu) pairs.
    std::vector<int> pick(w.size(), 0);
    std::fill(pick.end() - M, pick.end(), 1);
    do {
      std::vector<Cplx> lam, pairs;
      for (size_t i = 0; i < w.size(); ++i) {
        (pick[i] ? pairs : lam).push_back(w[i]);
      }
      // Split orientations: the continuation direction of each pair is not
      // known a priori, so try four phases per pair.
      const int n_orient = 1 << (2 * M);
      for (int code = 0; code < n_orient; ++code) {
        std::vector<Cplx> z(lam);
        z.resize(n_lambda + 2 * M);
        int c = code;
        static const Cplx phases[4] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0},
                                       {0.0, -1.0}};
        for (int i = 0; i < M; ++i, c >>= 2) {
          const Cplx eps = 0.05 * (1.0 + std::abs(pairs[i])) * phases[c & 3];
          z[n_lambda + i] = pairs[i] + eps;        // mu seed
          z[n_lambda + M + i] = pairs[i] - eps;    // nu seed
        }
        bool alive = true;
        for (int k = 1; k <= steps && alive; ++k) {
          const double xi_from = xi_target * (k - 1) / steps;
          const double xi_to = xi_target * k / steps;
          alive = continue_in_xi(z, lay, target, ctx.branch, xi_from, xi_to,
                                 options, 0);
        }
        if (!alive) continue;
        if (!roots_valid(z, lay, ctx)) continue;
        append_unique(pool, pack_solution(z, lay, ctx, M));
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  sort_solutions(pool);
  return pool;
}

}  // namespace

bool newton_refine(BetheRootSet& roots, const TQContext& ctx,
                   const BaeSolverOptions& options) {
  const RootLayout lay = detail::layout_of(roots, ctx.params.N);
  std::vector<Cplx> z = detail::flatten_roots(roots);
  if (!newton_on_flat(z, lay, ctx, options)) return false;
  detail::unflatten_roots(z, lay, roots);
  return true;
}

void canonicalize(BetheRootSet& roots) {
  for (Cplx& l : roots.lambda) l = half_plane_rep(l);
  std::sort(roots.lambda.begin(), roots.lambda.end(), cplx_less);
  // (mu, nu) -> (-nu-1, -mu-1) leaves Q1 and Q2 unchanged; pick the
  // lexicographically smaller orientation of each pair, then sort pairs.
  std::vector<std::pair<Cplx, Cplx>> pairs;
  for (size_t i = 0; i < roots.mu.size(); ++i) {
    Cplx m = roots.mu[i], n = roots.nu[i];
    const Cplx am = -n - 1.0, an = -m - 1.0;
    if (cplx_less(am, m) || (am == m && cplx_less(an, n))) {
      m = am;
      n = an;
    }
    pairs.emplace_back(m, n);
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return cplx_less(a.first, b.first);
    return cplx_less(a.second, b.second);
  });
  for (size_t i = 0; i < pairs.size(); ++i) {
    roots.mu[i] = pairs[i].first;
    roots.nu[i] = pairs[i].second;
  }
}

std::vector<BetheRootSet> solve_bae(const TQContext& ctx, int M,
                                    BaeStrategy strategy, int seed_count,
                                    std::uint64_t rng_seed,
                                    const BaeSolverOptions& options) {
  if (!sector_valid(ctx.params.N, M)) {
    throw std::invalid_argument("solve_bae: invalid sector M");
  }
  if (strategy == BaeStrategy::kHomotopyXi) {
    if (ctx.params.xi.imag() != 0.0) {
      throw std::invalid_argument("homotopy strategy needs real xi");
    }
    return homotopy_xi(ctx, M, seed_count, options);
  }
  // With parallel fields the paired families coincide and the cleared
  // system degenerates; solve the ordinary (merged) form instead.
  const bool merged = is_diagonal_context(ctx);
  return multistart(ctx, M, merged, seed_count, rng_seed, options);
}

Cplx energy_from_roots(const BetheRootSet& roots, const TQContext& ctx) {
  if (!ctx.homogeneous) {
    throw std::invalid_argument(
        "energy_from_roots: defined for the homogeneous chain only");
  }
  const double pole_floor = 1e-10;
  Cplx e = 0.0;
  for (Cplx l : roots.lambda) {
    const Cplx d = l * (l + 1.0);
    if (std::abs(d) < pole_floor) {
      throw std::domain_error("energy_from_roots: lambda root at 0 or -1");
    }
    e += 2.0 / d;
  }
  for (size_t i = 0; i < roots.mu.size(); ++i) {
    if (std::abs(roots.nu[i]) < pole_floor) {
      throw std::domain_error("energy_from_roots: nu root at 0");
    }
    if (std::abs(roots.mu[i] + 1.0) < pole_floor) {
      throw std::domain_error("energy_from_roots: mu root at -1");
    }
    e += 2.0 * (1.0 / roots.nu[i] - 1.0 / (roots.mu[i] + 1.0));
  }
  const double b = ctx.branch;
  e += static_cast<double>(ctx.params.N) - 1.0 + b / ctx.params.p +
       b * ctx.sqrt1xi2 / ctx.params.q;
  return e;
}

SpectrumMatchReport spectrum_match(const ModelParams& params, MPolicy policy,
                                   int fixed_M, BaeStrategy strategy,
                                   int seed_count, std::uint64_t rng_seed,
                                   double match_tolerance,
                                   const BaeSolverOptions& options) {
  check_params(params);
  if (!params.homogeneous()) {
    throw std::invalid_argument("spectrum_match: homogeneous chain required");
  }

  SpectrumMatchReport report;
  report.tolerance = match_tolerance;
  report.seed_count = seed_count;

  const Mat h = hamiltonian(params, HamiltonianMode::kDirect);
  const double herm = (h - h.adjoint()).norm() / std::max(h.norm(), kNormFloor);
  if (herm < 1e-12) {
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      report.exact_levels.push_back(es.eigenvalues()(i));
    }
  } else {
    Eigen::ComplexEigenSolver<Mat> es(h);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      report.exact_levels.push_back(es.eigenvalues()(i).real());
    }
    std::sort(report.exact_levels.begin(), report.exact_levels.end());
  }

  std::vector<int> sectors;
  if (policy == MPolicy::kFixed) {
    sectors.push_back(fixed_M);
  } else {
    for (int m = 0; sector_valid(params.N, m); ++m) sectors.push_back(m);
    if (params.N % 2 == 1) sectors.push_back((params.N + 1) / 2);
  }

  std::vector<double> energies;
  for (int branch : {+1, -1}) {
    const TQContext ctx = make_tq_context(params, branch);
    for (int m : sectors) {
      if (!sector_valid(params.N, m)) continue;
      std::vector<BetheRootSet> sols =
          solve_bae(ctx, m, strategy, seed_count, rng_seed, options);
      for (BetheRootSet& s : sols) {
        Cplx e;
        try {
          e = energy_from_roots(s, ctx);
        } catch (const std::domain_error&) {
          continue;
        }
        energies.push_back(e.real());
        report.solutions.push_back(std::move(s));
      }
    }
  }

  // Deduplicate the energy union.
  std::sort(energies.begin(), energies.end());
  for (double e : energies) {
    if (report.tq_energies.empty() ||
        std::abs(e - report.tq_energies.back()) > 1e-9) {
      report.tq_energies.push_back(e);
    }
  }

  const int n_exact = static_cast<int>(report.exact_levels.size());
  const int n_tq = static_cast<int>(report.tq_energies.size());
  const int n = std::max(n_exact, n_tq);
  if (n_tq > 0) {
    constexpr double kPad = 1e9;
    Eigen::MatrixXd cost = Eigen::MatrixXd::Constant(n, n, kPad);
    for (int i = 0; i < n_exact; ++i) {
      for (int j = 0; j < n_tq; ++j) {
        cost(i, j) = std::abs(report.exact_levels[i] - report.tq_energies[j]);
      }
    }
    const std::vector<int> assign = min_cost_assignment(cost);
    int matched = 0;
    for (int i = 0; i < n_exact; ++i) {
      const int j = assign[i];
      if (j >= 0 && j < n_tq &&
          cost(i, j) <= match_tolerance) {
        ++matched;
        report.pairs.push_back(
            {report.exact_levels[i], report.tq_energies[j], cost(i, j)});
      } else {
        report.unmatched_exact.push_back(report.exact_levels[i]);
      }
    }
    report.matched_fraction = static_cast<double>(matched) / n_exact;
  } else {
    report.unmatched_exact = report.exact_levels;
    report.matched_fraction = 0.0;
  }
  report.completeness_confirmed = report.matched_fraction == 1.0;
  return report;
}

}  // namespace odba
