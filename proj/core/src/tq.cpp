#include "odba/tq.hpp"

#include <stdexcept>

#include "tq_eval.hpp"

namespace odba {

TQContext make_tq_context(const ModelParams& params, int branch) {
  check_params(params);
  if (branch != 1 && branch != -1) {
    throw std::invalid_argument("branch must be +1 or -1");
  }
  TQContext ctx;
  ctx.params = params;
  ctx.branch = branch;
  ctx.sqrt1xi2 = std::sqrt(Cplx(1.0) + params.xi * params.xi);
  if (ctx.sqrt1xi2.real() < 0.0) ctx.sqrt1xi2 = -ctx.sqrt1xi2;
  ctx.homogeneous = params.homogeneous();
  return ctx;
}

bool sector_valid(int N, int M) {
  if (M < 0) return false;
  if (2 * M <= N) return true;
  return (N % 2 == 1) && (2 * M == N + 1);
}

int lambda_count(int N, int M) {
  if (!sector_valid(N, M)) {
    throw std::invalid_argument("invalid sector M for N");
  }
  return 2 * M <= N ? N - 2 * M : 0;
}

int tq_inhomogeneous_power(int N, int M) {
  if (!sector_valid(N, M)) {
    throw std::invalid_argument("invalid sector M for N");
  }
  return 2 * M == N + 1 ? 2 : 1;
}

QTriple eval_q_functions(Cplx u, const BetheRootSet& roots) {
  QTriple t{Cplx(1.0), Cplx(1.0), Cplx(1.0)};
  for (Cplx l : roots.lambda) t.q *= (u - l) * (u + l + 1.0);
  if (roots.merged) return t;
  for (size_t i = 0; i < roots.mu.size(); ++i) {
    t.q1 *= (u - roots.mu[i]) * (u + roots.nu[i] + 1.0);
    t.q2 *= (u - roots.nu[i]) * (u + roots.mu[i] + 1.0);
  }
  return t;
}

Cplx tq_abar(Cplx u, const TQContext& ctx) {
  const detail::RootLayout lay;  // dressing functions need no roots
  const std::vector<Cplx> none;
  const detail::TqTerms<Cplx> t{ctx, lay, none};
  return t.abar_cleared(u) / (2.0 * u + 1.0);
}

Cplx tq_dbar(Cplx u, const TQContext& ctx) {
  const detail::RootLayout lay;
  const std::vector<Cplx> none;
  const detail::TqTerms<Cplx> t{ctx, lay, none};
  return t.dbar_cleared(u) / (2.0 * u + 1.0);
}

Cplx eval_tq_lambda(Cplx u, const BetheRootSet& roots, const TQContext& ctx) {
  const detail::RootLayout lay = detail::layout_of(roots, ctx.params.N);
  const std::vector<Cplx> z = detail::flatten_roots(roots);
  const detail::TqTerms<Cplx> t{ctx, lay, z};

  const Cplx two_u1 = 2.0 * u + 1.0;
  Cplx numer, denom;
  if (lay.merged) {
    numer = t.term_down_merged(u) + t.term_up_merged(u);
    denom = two_u1 * t.q(u);
  } else {
    numer = t.term_down(u) + t.term_up(u) + t.extra_cleared(u);
    denom = two_u1 * t.q(u) * t.q1(u) * t.q2(u);
  }
  const double scale = std::pow(1.0 + std::abs(u), 2.0 * lay.total() + 1.0);
  if (std::abs(denom) < 1e-13 * scale) {
    throw std::domain_error(
        "eval_tq_lambda: evaluation point is (numerically) a zero of "
        "(2u+1) Q(u) Q1(u) Q2(u)");
  }
  return numer / denom;
}

std::vector<Cplx> bae_residuals(const BetheRootSet& roots,
                                const TQContext& ctx) {
  const detail::RootLayout lay = detail::layout_of(roots, ctx.params.N);
  if (!roots.merged &&
      (static_cast<int>(roots.lambda.size()) !=
           lambda_count(ctx.params.N, roots.M) ||
       static_cast<int>(roots.mu.size()) != roots.M ||
       static_cast<int>(roots.nu.size()) != roots.M)) {
    throw std::invalid_argument("bae_residuals: root family sizes do not match M");
  }
  const std::vector<Cplx> z = detail::flatten_roots(roots);
  std::vector<Cplx> raw;
  std::vector<double> scales;
  detail::cleared_residuals(ctx, lay, z, raw, &scales);
  for (size_t i = 0; i < raw.size(); ++i) raw[i] /= scales[i];
  return raw;
}

}  // namespace odba
