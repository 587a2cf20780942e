#include "odba/monodromy.hpp"

#include <stdexcept>

namespace odba {

namespace {

Eigen::Index quantum_dim(const ModelParams& params) {
  return Eigen::Index(1) << params.N;
}

}  // namespace

DenseOperator monodromy(Cplx u, const ModelParams& params,
                        MonodromyVariant variant) {
  return monodromy_embedded(u, params, variant, 1, 1);
}

DenseOperator monodromy_embedded(Cplx u, const ModelParams& params,
                                 MonodromyVariant variant, int aux_factor,
                                 int n_aux) {
  check_params(params);
  if (aux_factor < 1 || aux_factor > n_aux) {
    throw std::out_of_range("monodromy_embedded: auxiliary factor out of range");
  }
  const int nf = params.N + n_aux;
  const Eigen::Index d = Eigen::Index(1) << nf;
  Mat acc = Mat::Identity(d, d);
  if (variant == MonodromyVariant::kForward) {
    for (int j = 1; j <= params.N; ++j) {
      apply_pair_left(r_matrix(u - params.theta[j - 1]), aux_factor, n_aux + j,
                      nf, acc);
    }
  } else {
    for (int j = params.N; j >= 1; --j) {
      apply_pair_left(r_matrix(u + params.theta[j - 1]), aux_factor, n_aux + j,
                      nf, acc);
    }
  }
  return DenseOperator(std::move(acc), std::vector<int>(nf, 2));
}

DenseOperator double_row_monodromy_embedded(Cplx u, const ModelParams& params,
                                            int aux_factor, int n_aux) {
  const DenseOperator t =
      monodromy_embedded(u, params, MonodromyVariant::kForward, aux_factor, n_aux);
  DenseOperator that =
      monodromy_embedded(u, params, MonodromyVariant::kHat, aux_factor, n_aux);
  const int other = aux_factor == 1 ? 2 : 1;
  apply_pair_left(kron(k_minus(u, params), Mat::Identity(2, 2)), aux_factor,
                  other, params.N + n_aux, that.entries);
  Mat prod = t.entries * that.entries;
  return DenseOperator(std::move(prod), t.factor_dims);
}

OneRowComponents extract_one_row_components(const DenseOperator& t) {
  if (t.factor_dims.empty() || t.factor_dims.front() != 2 || t.dim % 2 != 0) {
    throw std::invalid_argument(
        "extract_one_row_components: auxiliary dimension must be 2");
  }
  const Eigen::Index d = t.dim / 2;
  OneRowComponents c;
  c.alpha = t.entries.block(0, 0, d, d);
  c.beta = t.entries.block(0, d, d, d);
  c.gamma = t.entries.block(d, 0, d, d);
  c.delta = t.entries.block(d, d, d, d);
  return c;
}

DenseOperator double_row_monodromy(Cplx u, const ModelParams& params) {
  const DenseOperator t = monodromy(u, params, MonodromyVariant::kForward);
  DenseOperator that = monodromy(u, params, MonodromyVariant::kHat);
  // K^- acts on the auxiliary factor only.
  apply_pair_left(kron(k_minus(u, params), Mat::Identity(2, 2)), 1, 2,
                  params.N + 1, that.entries);
  Mat prod = t.entries * that.entries;
  return DenseOperator(std::move(prod), t.factor_dims);
}

DoubleRowComponents extract_double_row_components(const DenseOperator& t,
                                                  Cplx u) {
  const OneRowComponents blocks = extract_one_row_components(t);
  DoubleRowComponents c;
  c.a = blocks.alpha;
  c.b = blocks.beta;
  c.c = blocks.gamma;
  c.d = blocks.delta;
  c.dbar = (2.0 * u + 1.0) * c.d - c.a;
  return c;
}

Mat transfer_matrix(Cplx u, const ModelParams& params) {
  const DenseOperator dr = double_row_monodromy(u, params);
  const DoubleRowComponents c = extract_double_row_components(dr, u);
  const Mat kp = k_plus(u, params);
  return kp(0, 0) * c.a + kp(1, 0) * c.b + kp(0, 1) * c.c + kp(1, 1) * c.d;
}

Mat hamiltonian(const ModelParams& params, HamiltonianMode mode) {
  check_params(params);
  const int N = params.N;
  if (mode == HamiltonianMode::kDirect) {
    const Eigen::Index d = quantum_dim(params);
    const Mat sx = sigma_x(), sy = sigma_y(), sz = sigma_z();
    const Mat coupling = kron(sx, sx) + kron(sy, sy) + kron(sz, sz);
    Mat h = Mat::Zero(d, d);
    for (int j = 1; j < N; ++j) {
      h += embed_pair(coupling, j, j + 1, N).entries;
    }
    h += (1.0 / params.p) * embed_site(sz, N, N).entries;
    h += (1.0 / params.q) *
         (embed_site(sz, 1, N).entries + params.xi * embed_site(sx, 1, N).entries);
    return h;
  }

  // Log-derivative of the transfer matrix at u = 0.  tau(0) is a multiple
  // of the identity at the homogeneous point, so tau^{ -1} tau' there is
  // a scalar division.
  if (!params.homogeneous()) {
    throw std::invalid_argument(
        "hamiltonian(kFromTransfer) requires the homogeneous point");
  }
  const double h = 1e-3;
  const Mat tau_p2 = transfer_matrix(Cplx(2 * h), params);
  const Mat tau_p1 = transfer_matrix(Cplx(h), params);
  const Mat tau_m1 = transfer_matrix(Cplx(-h), params);
  const Mat tau_m2 = transfer_matrix(Cplx(-2 * h), params);
  const Mat tau0 = transfer_matrix(Cplx(0.0), params);
  const Mat dtau = (-tau_p2 + 8.0 * tau_p1 - 8.0 * tau_m1 + tau_m2) / (12.0 * h);
  const Cplx tau0_scalar = tau0.trace() / static_cast<double>(tau0.rows());
  return dtau / tau0_scalar -
         static_cast<double>(N) * Mat::Identity(tau0.rows(), tau0.cols());
}

Vec vacuum_state(int N) {
  Vec v = Vec::Zero(Eigen::Index(1) << N);
  v(0) = 1.0;
  return v;
}

Cplx vacuum_a(Cplx u, const ModelParams& params) {
  Cplx out = params.p + u;
  for (Cplx t : params.theta) out *= (u - t + 1.0) * (u + t + 1.0);
  return out;
}

Cplx vacuum_d(Cplx u, const ModelParams& params) {
  Cplx out = 2.0 * u * (params.p - u - 1.0);
  for (Cplx t : params.theta) out *= (u - t) * (u + t);
  return out;
}

Cplx vacuum_a_tilde(Cplx u, const ModelParams& params) {
  Cplx out = 1.0;
  for (Cplx t : params.theta) out *= u - t + 1.0;
  return out;
}

Cplx vacuum_d_tilde(Cplx u, const ModelParams& params) {
  Cplx out = 1.0;
  for (Cplx t : params.theta) out *= u - t;
  return out;
}

}  // namespace odba
