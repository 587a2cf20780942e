#ifndef ODBA_MONODROMY_HPP
#define ODBA_MONODROMY_HPP

#include "odba/model.hpp"
#include "odba/tensor.hpp"

namespace odba {

// Operators on auxiliary (x) quantum space live on N+1 spin-1/2 factors
// with the auxiliary space as factor 1 and quantum site j as factor j+1.

enum class MonodromyVariant { kForward, kHat };

// One-row monodromy matrix.
//   forward: R_{0N}(u - theta_N) ... R_{01}(u - theta_1)
//   hat:     R_{01}(u + theta_1) ... R_{0N}(u + theta_N)
DenseOperator monodromy(Cplx u, const ModelParams& params,
                        MonodromyVariant variant);

// Same, but on a space with n_aux leading auxiliary factors followed by the
// N quantum sites, acting through auxiliary factor aux_factor (1-based).
// Used for relations that juxtapose two monodromies with distinct auxiliary
// spaces.
DenseOperator monodromy_embedded(Cplx u, const ModelParams& params,
                                 MonodromyVariant variant, int aux_factor,
                                 int n_aux);

// Double-row monodromy embedded the same way.
DenseOperator double_row_monodromy_embedded(Cplx u, const ModelParams& params,
                                            int aux_factor, int n_aux);

// Auxiliary-space 2x2 block structure of an operator on aux (x) quantum.
struct OneRowComponents {
  Mat alpha, beta, gamma, delta;
};
OneRowComponents extract_one_row_components(const DenseOperator& t);

// Double-row monodromy T(u) K^-(u) That(u) on aux (x) quantum.
DenseOperator double_row_monodromy(Cplx u, const ModelParams& params);

// Components of the double-row monodromy.  dbar = (2u+1) D - A packages
// the combination whose vacuum action is diagonal.
struct DoubleRowComponents {
  Mat a, b, c, d, dbar;
};
DoubleRowComponents extract_double_row_components(const DenseOperator& t,
                                                  Cplx u);

// Double-row transfer matrix tau(u) = tr_aux( K^+(u) T(u) K^-(u) That(u) )
// acting on the quantum space.
Mat transfer_matrix(Cplx u, const ModelParams& params);

enum class HamiltonianMode { kDirect, kFromTransfer };

// Open-chain Hamiltonian
//   sum_j sigma_j . sigma_{j+1} + (1/p) sigma_N^z
//   + (1/q) (sigma_1^z + xi sigma_1^x).
// kFromTransfer derives it from the log-derivative of tau at u = 0 and
// requires the homogeneous point.
Mat hamiltonian(const ModelParams& params, HamiltonianMode mode);

// All-up product state on N sites.
Vec vacuum_state(int N);

// Vacuum eigenvalue functions of the double-row components:
//   a(u) = (p+u) prod_j (u - theta_j + 1)(u + theta_j + 1)
//   d(u) = 2u (p-u-1) prod_j (u - theta_j)(u + theta_j)
Cplx vacuum_a(Cplx u, const ModelParams& params);
Cplx vacuum_d(Cplx u, const ModelParams& params);

// One-row vacuum eigenvalues:
//   a_tilde(u) = prod_j (u - theta_j + 1),  d_tilde(u) = prod_j (u - theta_j)
Cplx vacuum_a_tilde(Cplx u, const ModelParams& params);
Cplx vacuum_d_tilde(Cplx u, const ModelParams& params);

}  // namespace odba

#endif
