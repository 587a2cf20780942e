#ifndef ODBA_MODEL_HPP
#define ODBA_MODEL_HPP

#include <string>
#include <vector>

#include "odba/rng.hpp"
#include "odba/types.hpp"

namespace odba {

// Parameters of the open XXX chain with unparallel boundary fields.
//
// p parametrizes the diagonal reflection matrix K^-(u) = diag(p+u, p-u);
// q and xi parametrize the dual matrix
//   K^+(u) = [[q+u+1, xi*(u+1)], [xi*(u+1), q-u-1]],
// whose off-diagonal entry is the boundary constant xi times (u+1) -- not
// the unitarity function (u+1)(u-1), which is a separate entity here
// (see xi_unitarity).  The crossing parameter eta is fixed to 1.
//
// The boundary fields of the Hamiltonian are h_N = 1/p, h_1^x = xi/q,
// h_1^z = 1/q.
struct ModelParams {
  int N = 1;
  Cplx p{1.0, 0.0};
  Cplx q{1.0, 0.0};
  Cplx xi{0.0, 0.0};
  std::vector<Cplx> theta;  // N inhomogeneities; all zero = homogeneous point

  bool homogeneous() const;
  Cplx h_boundary_N() const { return 1.0 / p; }
  Cplx h1_x() const { return xi / q; }
  Cplx h1_z() const { return 1.0 / q; }
};

// Largest chain the dense backend accepts (quantum dim 4096).
inline constexpr int kMaxSites = 12;

// Structural check: N in range, theta length N.  Throws on violation.
void check_params(const ModelParams& params);

// Sampling constraints for identity verification: theta entries pairwise
// distinct, away from {0, +-1/2, +-1}, and |theta_i +- theta_j| away from
// {0, 1}.  Returns an empty string when satisfied, else a description of
// the violated rule.  The homogeneous point (all theta = 0) is exempt when
// allow_homogeneous is set.
std::string theta_constraint_violation(const std::vector<Cplx>& theta,
                                       bool allow_homogeneous = true);

// Default sampler: p, q real in [0.7, 3], xi real in [0, 2], theta real in
// (0.05, 0.45) pairwise separated by >= 0.03.  Keeps every denominator of
// the exchange relations and of the key functional relation away from its
// pole set.
ModelParams sample_params(int N, Rng& rng, bool homogeneous = false);

// Pauli matrices and friends on C^2 / C^2 x C^2.
Mat sigma_x();
Mat sigma_y();
Mat sigma_z();
// Crossing matrix V = -i sigma^y.
Mat crossing_v();
// Permutation operator on C^2 x C^2.
Mat permutation_p();
// Antisymmetric projector P^(-) = (1 - P)/2.
Mat projector_minus();

// Rational six-vertex R-matrix with eta = 1:
//   [[u+1, 0, 0, 0], [0, u, 1, 0], [0, 1, u, 0], [0, 0, 0, u+1]].
Mat r_matrix(Cplx u);

// The unitarity scalar (u+1)(u-1): R12(u) R21(-u) = -xi_unitarity(u) * id.
// Named apart from the boundary parameter xi on purpose.
Cplx xi_unitarity(Cplx u);

// Boundary K-matrices.
Mat k_minus(Cplx u, const ModelParams& params);
Mat k_plus(Cplx u, const ModelParams& params);

}  // namespace odba

#endif
