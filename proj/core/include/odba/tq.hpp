#ifndef ODBA_TQ_HPP
#define ODBA_TQ_HPP

#include <vector>

#include "odba/model.hpp"

namespace odba {

// Bethe root content of one T-Q candidate.
//
// The generic sector has N-2M lambda roots plus M (mu, nu) pairs with
// M <= floor(N/2).  For odd N the top sector M = (N+1)/2 exists with no
// lambda family and a doubled u(u+1) prefactor in the inhomogeneous term.
// With parallel boundary fields (xi = 0) the mu and nu families coincide
// and the ordinary T-Q form applies; such solutions are stored with
// `merged` set and all roots in `lambda` (then lambda holds the N-M roots
// of the combined Q-function).
struct BetheRootSet {
  int branch = +1;  // sign of the branch pair
  int M = 0;
  bool merged = false;
  std::vector<Cplx> lambda;
  std::vector<Cplx> mu;
  std::vector<Cplx> nu;
};

struct TQContext {
  ModelParams params;
  int branch = +1;
  Cplx sqrt1xi2{1.0, 0.0};  // principal branch of sqrt(1 + xi^2)
  bool homogeneous = true;
};

TQContext make_tq_context(const ModelParams& params, int branch);

// Sector bookkeeping.
bool sector_valid(int N, int M);
int lambda_count(int N, int M);           // 0 in the odd-N top sector
int tq_inhomogeneous_power(int N, int M); // u(u+1) exponent of the extra term

struct QTriple {
  Cplx q;   // prod (u - lambda_j)(u + lambda_j + 1)
  Cplx q1;  // prod (u - mu_j)(u + nu_j + 1)
  Cplx q2;  // prod (u - nu_j)(u + mu_j + 1)
};
QTriple eval_q_functions(Cplx u, const BetheRootSet& roots);

// Branch dressing functions:
//   abar(u) = (2u+2)/(2u+1) (u + b p)(s u + b q) prod_j (u+theta_j+1)(u-theta_j+1)
//   dbar(u) = abar(-u-1)
// with b the branch sign and s = sqrt(1+xi^2); the theta product becomes
// (u+1)^{2N} (resp. u^{2N}) in the homogeneous context.
Cplx tq_abar(Cplx u, const TQContext& ctx);
Cplx tq_dbar(Cplx u, const TQContext& ctx);

// Generalized T-Q expression
//   Lambda(u) = abar(u) Q(u-1) Q1(u-1) / (Q(u) Q2(u))
//             + dbar(u) Q(u+1) Q2(u+1) / (Q(u) Q1(u))
//             + 2 (1 - s) (u(u+1))^t F(u) / (Q(u) Q1(u) Q2(u)),
// with F(u) = prod_j (u+theta_j)(u-theta_j)(u+theta_j+1)(u-theta_j+1)
// (or u^{2N}(u+1)^{2N} homogeneous) and t the sector power.  Throws
// std::domain_error at a zero of Q Q1 Q2 or at u = -1/2.
Cplx eval_tq_lambda(Cplx u, const BetheRootSet& roots, const TQContext& ctx);

// Cleared residuals, one per root (lambda block, then mu, then nu).  Each
// is the pole-cancellation condition of the T-Q expression at that root,
// multiplied through by every denominator so the result is polynomial in
// the roots, then divided by the sum of term magnitudes so the returned
// value is scale-free.  Zero exactly when the Bethe equations hold.
std::vector<Cplx> bae_residuals(const BetheRootSet& roots,
                                const TQContext& ctx);

}  // namespace odba

#endif
