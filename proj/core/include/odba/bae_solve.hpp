#ifndef ODBA_BAE_SOLVE_HPP
#define ODBA_BAE_SOLVE_HPP

#include <cstdint>
#include <vector>

#include "odba/tq.hpp"

namespace odba {

enum class BaeStrategy { kMultistart, kHomotopyXi };

struct BaeSolverOptions {
  int max_iterations = 200;
  double tolerance = 1e-11;     // max scale-normalized cleared residual
  double seed_radius_scale = 1.0;  // seeds drawn from a disk of radius scale*N
  int homotopy_steps = 25;       // xi steps from 0 to the target (10..50)
};

// Damped Newton on the cleared residuals from one seed.  Returns true on
// convergence and leaves the refined roots in place.
bool newton_refine(BetheRootSet& roots, const TQContext& ctx,
                   const BaeSolverOptions& options);

// Canonical form: each lambda is mapped into the half-plane Re >= -1/2 of
// the pair {lambda, -lambda-1}; (mu, nu) pairs likewise use the
// (-nu-1, -mu-1) involution; families sorted.  Deduplication compares
// canonical forms.
void canonicalize(BetheRootSet& roots);

// Multistart or xi-homotopy search for Bethe root sets of sector M.
// homotopy starts from the merged (ordinary T-Q) solutions at xi = 0 and
// continues in xi with a fixed step schedule, so its output does not
// depend on rng_seed.
std::vector<BetheRootSet> solve_bae(const TQContext& ctx, int M,
                                    BaeStrategy strategy, int seed_count,
                                    std::uint64_t rng_seed,
                                    const BaeSolverOptions& options = {});

// Energy of a homogeneous-chain root set:
//   E = 2 sum_j 1/(lambda_j (lambda_j+1)) + 2 sum_j (1/nu_j - 1/(mu_j+1))
//       + N - 1 + b/p + b sqrt(1+xi^2)/q
// with b the branch sign.  Throws std::domain_error when a root sits on a
// pole of the formula (lambda in {0,-1}, nu = 0, mu = -1).
Cplx energy_from_roots(const BetheRootSet& roots, const TQContext& ctx);

enum class MPolicy { kFixed, kSweep };

struct MatchedPair {
  double exact;
  double tq;
  double distance;
};

struct SpectrumMatchReport {
  double matched_fraction = 0.0;
  double tolerance = 1e-6;
  int seed_count = 0;
  bool completeness_confirmed = false;  // matched_fraction == 1; measured, never assumed
  std::vector<double> exact_levels;
  std::vector<double> tq_energies;  // deduplicated union over branches and sectors
  std::vector<MatchedPair> pairs;
  std::vector<double> unmatched_exact;
  std::vector<BetheRootSet> solutions;
};

// Solve both branches at the homogeneous point, compute energies, and match
// the union against the exact spectrum by minimum-cost assignment.
SpectrumMatchReport spectrum_match(const ModelParams& params, MPolicy policy,
                                   int fixed_M, BaeStrategy strategy,
                                   int seed_count, std::uint64_t rng_seed,
                                   double match_tolerance = 1e-6,
                                   const BaeSolverOptions& options = {});

}  // namespace odba

#endif
