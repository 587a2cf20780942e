#ifndef ODBA_QDET_HPP
#define ODBA_QDET_HPP

#include "odba/model.hpp"

namespace odba {

enum class QdetMode { kClosedForm, kTraceForm };

// Individual determinant factors of the quantum determinant.
//   det_t(u)     = prod_j (u - theta_j + 1)(u - theta_j - 1)
//   det_t_hat(u) = prod_j (u + theta_j + 1)(u + theta_j - 1)
//   det_k_minus  = 2 (u-1) (p^2 - u^2)
//   det_k_plus   = 2 (u+1) ((1 + xi^2) u^2 - q^2)
// kTraceForm evaluates each factor from its antisymmetric-projector
// trace construction on two auxiliary spaces instead of the closed form.
Cplx qdet_factor_t(Cplx u, const ModelParams& params, QdetMode mode);
Cplx qdet_factor_t_hat(Cplx u, const ModelParams& params, QdetMode mode);
Cplx qdet_factor_k_minus(Cplx u, const ModelParams& params, QdetMode mode);
Cplx qdet_factor_k_plus(Cplx u, const ModelParams& params, QdetMode mode);

// Quantum determinant: product of the four factors above.
Cplx quantum_determinant(Cplx u, const ModelParams& params, QdetMode mode);

// Homogeneous (theta -> 0) limit of the factor product:
//   4 (u^2-1)(p^2-u^2)((1+xi^2) u^2 - q^2)(u+1)^{2N}(u-1)^{2N}.
Cplx homogeneous_quantum_determinant(Cplx u, const ModelParams& params);

// Variant carrying (1+xi^2)^2 instead of (1+xi^2).  It does not equal the
// factor product for xi != 0; kept so the acceptance suite can compare the
// two against the transfer-matrix spectrum empirically.
Cplx homogeneous_quantum_determinant_squared_coupling(Cplx u,
                                                      const ModelParams& params);

// Right-hand side of the key functional relation at theta_j:
//   Delta_q(theta_j) / ((1 - 2 theta_j)(1 + 2 theta_j)).
Cplx functional_rhs(int j, const ModelParams& params);

// Algebraically equivalent product form of the same quantity:
//   2 (theta_j+1)(q^2 - (1+xi^2) theta_j^2) / ((2 theta_j-1)(2 theta_j+1))
//     * a(theta_j) d(theta_j - 1).
Cplx functional_rhs_product_form(int j, const ModelParams& params);

}  // namespace odba

#endif
