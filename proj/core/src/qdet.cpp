#include "odba/qdet.hpp"

#include <stdexcept>

#include "odba/monodromy.hpp"
#include "odba/tensor.hpp"

namespace odba {

namespace {

// Extract the scalar s from an operator expected to be s * id on the
// quantum space (after tracing out both auxiliary factors).
Cplx scalar_of(const DenseOperator& op) {
  return op.entries.trace() / static_cast<double>(op.dim);
}

Cplx trace_form_det_monodromy(Cplx u, const ModelParams& params,
                              MonodromyVariant variant) {
  check_params(params);
  const int nf = params.N + 2;
  const std::vector<int> dims(nf, 2);
  const Mat t1 = monodromy_embedded(u - 1.0, params, variant, 1, 2).entries;
  const Mat t2 = monodromy_embedded(u, params, variant, 2, 2).entries;
  Mat prod = t1 * t2;
  const Mat pm = projector_minus();
  apply_pair_left(pm, 1, 2, nf, prod);          // P^- on the left
  Mat right = prod;                              // ... and on the right:
  // (prod * P^-) = (P^-^T * prod^T)^T; P^- is symmetric, reuse the fast path.
  right.transposeInPlace();
  apply_pair_left(pm.transpose(), 1, 2, nf, right);
  right.transposeInPlace();
  const DenseOperator traced =
      trace_factors(DenseOperator(std::move(right), dims), {1, 2});
  return scalar_of(traced);
}

}  // namespace

Cplx qdet_factor_t(Cplx u, const ModelParams& params, QdetMode mode) {
  if (mode == QdetMode::kTraceForm) {
    return trace_form_det_monodromy(u, params, MonodromyVariant::kForward);
  }
  Cplx out = 1.0;
  for (Cplx t : params.theta) out *= (u - t + 1.0) * (u - t - 1.0);
  return out;
}

Cplx qdet_factor_t_hat(Cplx u, const ModelParams& params, QdetMode mode) {
  if (mode == QdetMode::kTraceForm) {
    return trace_form_det_monodromy(u, params, MonodromyVariant::kHat);
  }
  Cplx out = 1.0;
  for (Cplx t : params.theta) out *= (u + t + 1.0) * (u + t - 1.0);
  return out;
}

Cplx qdet_factor_k_minus(Cplx u, const ModelParams& params, QdetMode mode) {
  if (mode == QdetMode::kTraceForm) {
    const Mat i2 = Mat::Identity(2, 2);
    const Mat m = projector_minus() * kron(k_minus(u - 1.0, params), i2) *
                  r_matrix(2.0 * u - 1.0) * kron(i2, k_minus(u, params));
    return m.trace();
  }
  return 2.0 * (u - 1.0) * (params.p * params.p - u * u);
}

Cplx qdet_factor_k_plus(Cplx u, const ModelParams& params, QdetMode mode) {
  if (mode == QdetMode::kTraceForm) {
    const Mat i2 = Mat::Identity(2, 2);
    const Mat m = projector_minus() * kron(i2, k_plus(u, params)) *
                  r_matrix(-2.0 * u - 1.0) * kron(k_plus(u - 1.0, params), i2);
    return m.trace();
  }
  const Cplx xi2 = params.xi * params.xi;
  return 2.0 * (u + 1.0) * ((1.0 + xi2) * u * u - params.q * params.q);
}

Cplx quantum_determinant(Cplx u, const ModelParams& params, QdetMode mode) {
  return qdet_factor_t(u, params, mode) * qdet_factor_t_hat(u, params, mode) *
         qdet_factor_k_minus(u, params, mode) *
         qdet_factor_k_plus(u, params, mode);
}

Cplx homogeneous_quantum_determinant(Cplx u, const ModelParams& params) {
  const Cplx xi2 = params.xi * params.xi;
  Cplx pw = 1.0;
  for (int j = 0; j < params.N; ++j) pw *= (u + 1.0) * (u + 1.0) * (u - 1.0) * (u - 1.0);
  return 4.0 * (u * u - 1.0) * (params.p * params.p - u * u) *
         ((1.0 + xi2) * u * u - params.q * params.q) * pw;
}

Cplx homogeneous_quantum_determinant_squared_coupling(Cplx u,
                                                      const ModelParams& params) {
  const Cplx xi2 = params.xi * params.xi;
  Cplx pw = 1.0;
  for (int j = 0; j < params.N; ++j) pw *= (u + 1.0) * (u + 1.0) * (u - 1.0) * (u - 1.0);
  return 4.0 * (u * u - 1.0) * (params.p * params.p - u * u) *
         ((1.0 + xi2) * (1.0 + xi2) * u * u - params.q * params.q) * pw;
}

Cplx functional_rhs(int j, const ModelParams& params) {
  if (j < 1 || j > params.N) {
    throw std::out_of_range("functional_rhs: site index out of range");
  }
  const Cplx t = params.theta[j - 1];
  return quantum_determinant(t, params, QdetMode::kClosedForm) /
         ((1.0 - 2.0 * t) * (1.0 + 2.0 * t));
}

Cplx functional_rhs_product_form(int j, const ModelParams& params) {
  if (j < 1 || j > params.N) {
    throw std::out_of_range("functional_rhs_product_form: site index out of range");
  }
  const Cplx t = params.theta[j - 1];
  const Cplx xi2 = params.xi * params.xi;
  return 2.0 * (t + 1.0) * (params.q * params.q - (1.0 + xi2) * t * t) /
         ((2.0 * t - 1.0) * (2.0 * t + 1.0)) * vacuum_a(t, params) *
         vacuum_d(t - 1.0, params);
}

}  // namespace odba
