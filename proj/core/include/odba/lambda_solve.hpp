#ifndef ODBA_LAMBDA_SOLVE_HPP
#define ODBA_LAMBDA_SOLVE_HPP

#include <cstdint>
#include <vector>

#include "odba/model.hpp"
#include "odba/polynomial.hpp"

namespace odba {

// One transfer-matrix eigenvalue as a polynomial of degree 2N+2, with the
// residuals of the constraints it is supposed to satisfy: crossing symmetry
// Lambda(-u-1) = Lambda(u), the value at u = 0, the leading coefficient 2,
// and the functional relation at the inhomogeneity points (or its
// derivative form at the homogeneous point).
struct LambdaCandidate {
  PolynomialC poly;
  double crossing_residual = 0.0;
  double initial_residual = 0.0;
  double leading_residual = 0.0;
  double functional_residual = 0.0;
};

// Value required at u = 0: 2 p q prod_j (1 - theta_j)(1 + theta_j).
Cplx lambda_initial_value(const ModelParams& params);

// Fit nodes used for eigenvalue extraction: 2N+5 points on the circle
// |u + 1/2| = 1.5, which maps to itself under u -> -u-1.
std::vector<Cplx> lambda_fit_nodes(const ModelParams& params, int extra = 0);

// Simultaneously diagonalize tau(u) via one generic-point eigenbasis, fit
// each eigenvalue branch on the node circle, and score the constraint
// residuals.  Retries with a perturbed reference point when the eigenbasis
// is ill-conditioned.  N <= 10.
std::vector<LambdaCandidate> lambda_from_oracle(const ModelParams& params);

enum class FunctionalMode { kInhomogeneous, kHomogeneous };

// Solve the functional system for Lambda directly: crossing symmetry is
// built in by parametrizing Lambda = sum_k c_k (u(u+1))^k with the leading
// and constant coefficients pinned, and the remaining N coefficients are
// found by damped (Gauss-)Newton on the product relation at the
// inhomogeneity points (inhomogeneous mode) or on the derivative
// conditions at u = 0 (homogeneous mode).  Converged candidates are
// deduplicated and sorted.
std::vector<LambdaCandidate> solve_lambda_functional(const ModelParams& params,
                                                     FunctionalMode mode,
                                                     int seed_count,
                                                     std::uint64_t rng_seed);

// Energy from a homogeneous eigenvalue polynomial: Lambda'(0)/Lambda(0) - N.
Cplx lambda_energy(const PolynomialC& poly, int N);

// Max relative mismatch of the Taylor coefficients of Lambda(u)Lambda(u-1)
// against those of Delta_q_hom(u) / ((1+2u)(1-2u)) through order 2N-1.
// squared_coupling selects the (1+xi^2)^2 variant of the homogeneous
// quantum determinant.
double homogeneous_functional_residual(const PolynomialC& lambda,
                                       const ModelParams& params,
                                       bool squared_coupling);

// Max relative mismatch of Lambda(theta_j)Lambda(theta_j-1) against the
// quantum-determinant right-hand side over j = 1..N.
double inhomogeneous_functional_residual(const PolynomialC& lambda,
                                         const ModelParams& params);

// Relative coefficient distance between two candidates (infinity norm).
double coefficient_distance(const PolynomialC& a, const PolynomialC& b);

}  // namespace odba

#endif
