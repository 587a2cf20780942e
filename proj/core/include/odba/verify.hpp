#ifndef ODBA_VERIFY_HPP
#define ODBA_VERIFY_HPP

#include <string>
#include <vector>

#include "odba/model.hpp"

namespace odba {

struct VerificationResult {
  std::string identity_id;
  double residual = 0.0;  // relative Frobenius norm
  double tolerance = 0.0;
  bool passed = false;
  ModelParams sample;
  std::vector<Cplx> points;
  std::string diagnostic;  // nonempty on NaN/Inf or evaluation failure
};

// Finalizes residual -> pass/fail; a non-finite residual fails with a
// diagnostic instead of propagating NaN.
VerificationResult make_result(std::string id, double residual, double tol,
                               const ModelParams& sample,
                               std::vector<Cplx> points);

// Catalog of the verified algebraic identities, in report order:
// Yang-Baxter and R-matrix properties, reflection equations, RLL and
// component exchange relations, double-row exchange, transfer-matrix
// properties, and the transfer-product/quantum-determinant identity.
const std::vector<std::string>& identity_catalog();

// Number of free spectral parameters the identity consumes.
int identity_point_count(const std::string& identity_id);

// Draw spectral points for an identity from the unit disk, respecting the
// guard band |denominator| >= 0.02 for identities with spectral-parameter
// denominators.
std::vector<Cplx> sample_identity_points(const std::string& identity_id,
                                         Rng& rng);

// Build both sides of the identity and report the relative residual.
// Throws std::invalid_argument for an unknown identity or a parameter
// sample violating the model constraints.
VerificationResult verify_identity(const std::string& identity_id,
                                   const ModelParams& params,
                                   const std::vector<Cplx>& points, double tol);

// Whole catalog at one parameter sample; spectral points drawn from rng.
std::vector<VerificationResult> verify_catalog(const ModelParams& params,
                                               Rng& rng, double tol);

// Vacuum-state checks: annihilation by C(u), the a(u)/d(u) eigenvalue
// actions, their zeros at the inhomogeneity points, the one-row vacuum
// exchange relations, the vanishing of B(theta_j) B(theta_j - 1), and the
// two-step reduction of tau(theta_j) tau(theta_j - 1) acting on the vacuum
// (checked term-group-wise, then in reduced form).
std::vector<VerificationResult> verify_vacuum_relations(
    const ModelParams& params, std::uint64_t point_seed = 0x0DBAu);

}  // namespace odba

#endif
