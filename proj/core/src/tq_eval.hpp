// Internal scalar-generic evaluation of the cleared Bethe residuals.
// Instantiated with Cplx for values and with Dual for exact derivatives
// (forward-mode; one directional derivative per pass).

#ifndef ODBA_SRC_TQ_EVAL_HPP
#define ODBA_SRC_TQ_EVAL_HPP

#include <cmath>
#include <vector>

#include "odba/tq.hpp"

namespace odba::detail {

struct Dual {
  Cplx v{0.0};
  Cplx d{0.0};
  Dual() = default;
  Dual(double value) : v(value) {}          // NOLINT(google-explicit-constructor)
  Dual(Cplx value) : v(value) {}            // NOLINT(google-explicit-constructor)
  Dual(Cplx value, Cplx deriv) : v(value), d(deriv) {}
};

inline Dual operator+(const Dual& a, const Dual& b) {
  return {a.v + b.v, a.d + b.d};
}
inline Dual operator-(const Dual& a, const Dual& b) {
  return {a.v - b.v, a.d - b.d};
}
inline Dual operator-(const Dual& a) { return {-a.v, -a.d}; }
inline Dual operator*(const Dual& a, const Dual& b) {
  return {a.v * b.v, a.v * b.d + a.d * b.v};
}
inline Dual operator/(const Dual& a, const Dual& b) {
  return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
}

inline Cplx value_of(const Cplx& z) { return z; }
inline Cplx value_of(const Dual& z) { return z.v; }
inline double mag(const Cplx& z) { return std::abs(z); }
inline double mag(const Dual& z) { return std::abs(z.v); }

// Flattened root layout: lambda block, then mu, then nu.  In merged mode
// every root lives in the lambda block.
struct RootLayout {
  int n_lambda = 0;
  int M = 0;
  bool merged = false;
  int power = 1;  // u(u+1) exponent of the inhomogeneous term
  int total() const { return merged ? n_lambda : n_lambda + 2 * M; }
};

inline RootLayout layout_of(const BetheRootSet& roots, int N) {
  RootLayout lay;
  lay.merged = roots.merged;
  lay.M = roots.M;
  lay.n_lambda = static_cast<int>(roots.lambda.size());
  lay.power = roots.merged ? 1 : tq_inhomogeneous_power(N, roots.M);
  return lay;
}

template <class S>
struct TqTerms {
  const TQContext& ctx;
  const RootLayout& lay;
  const std::vector<S>& z;

  S q(S u) const {
    S out(Cplx(1.0));
    for (int i = 0; i < lay.n_lambda; ++i) {
      out = out * (u - z[i]) * (u + z[i] + 1.0);
    }
    return out;
  }
  S q1(S u) const {
    S out(Cplx(1.0));
    if (lay.merged) return out;
    for (int i = 0; i < lay.M; ++i) {
      out = out * (u - z[lay.n_lambda + i]) *
            (u + z[lay.n_lambda + lay.M + i] + 1.0);
    }
    return out;
  }
  S q2(S u) const {
    S out(Cplx(1.0));
    if (lay.merged) return out;
    for (int i = 0; i < lay.M; ++i) {
      out = out * (u - z[lay.n_lambda + lay.M + i]) *
            (u + z[lay.n_lambda + i] + 1.0);
    }
    return out;
  }

  // prod (u + theta + 1)(u - theta + 1), or (u+1)^{2N} homogeneous.
  S aprod(S u) const {
    S out(Cplx(1.0));
    if (ctx.homogeneous) {
      const S f = u + 1.0;
      for (int k = 0; k < 2 * ctx.params.N; ++k) out = out * f;
      return out;
    }
    for (Cplx t : ctx.params.theta) out = out * (u + t + 1.0) * (u - t + 1.0);
    return out;
  }
  // prod (u + theta)(u - theta), or u^{2N} homogeneous.
  S dprod(S u) const {
    S out(Cplx(1.0));
    if (ctx.homogeneous) {
      for (int k = 0; k < 2 * ctx.params.N; ++k) out = out * u;
      return out;
    }
    for (Cplx t : ctx.params.theta) out = out * (u + t) * (u - t);
    return out;
  }

  // (2u+1) abar(u) and (2u+1) dbar(u): polynomial in u.
  S abar_cleared(S u) const {
    const double b = ctx.branch;
    return (2.0 * u + 2.0) * (u + b * ctx.params.p) *
           (ctx.sqrt1xi2 * u + b * ctx.params.q) * aprod(u);
  }
  S dbar_cleared(S u) const {
    const double b = ctx.branch;
    return 2.0 * u * (u - b * ctx.params.p + 1.0) *
           (ctx.sqrt1xi2 * (u + 1.0) - b * ctx.params.q) * dprod(u);
  }

  // 2 (1 - s) (2u+1) (u(u+1))^t F(u): the cleared inhomogeneous term.
  S extra_cleared(S u) const {
    S out = (2.0 * (Cplx(1.0) - ctx.sqrt1xi2)) * (2.0 * u + 1.0) * aprod(u) *
            dprod(u);
    for (int k = 0; k < lay.power; ++k) out = out * u * (u + 1.0);
    return out;
  }

  // Cleared residual terms at root x.
  S term_down(S x) const { return abar_cleared(x) * q(x - 1.0) * q1(x - 1.0) * q1(x); }
  S term_up(S x) const { return dbar_cleared(x) * q(x + 1.0) * q2(x + 1.0) * q2(x); }
  S term_down_merged(S x) const { return abar_cleared(x) * q(x - 1.0); }
  S term_up_merged(S x) const { return dbar_cleared(x) * q(x + 1.0); }
};

// Raw cleared residuals and per-equation magnitude scales.
template <class S>
void cleared_residuals(const TQContext& ctx, const RootLayout& lay,
                       const std::vector<S>& z, std::vector<S>& out,
                       std::vector<double>* scales) {
  const TqTerms<S> t{ctx, lay, z};
  out.clear();
  out.reserve(lay.total());
  if (scales) {
    scales->clear();
    scales->reserve(lay.total());
  }
  auto push = [&](const S& a, const S& b) {
    out.push_back(a + b);
    if (scales) scales->push_back(std::max(mag(a) + mag(b), kNormFloor));
  };
  auto push3 = [&](const S& a, const S& b, const S& c) {
    out.push_back(a + b + c);
    if (scales) scales->push_back(std::max(mag(a) + mag(b) + mag(c), kNormFloor));
  };
  if (lay.merged) {
    for (int i = 0; i < lay.n_lambda; ++i) {
      const S x = z[i];
      push(t.term_down_merged(x), t.term_up_merged(x));
    }
    return;
  }
  for (int i = 0; i < lay.n_lambda; ++i) {
    const S x = z[i];
    push3(t.term_down(x), t.term_up(x), t.extra_cleared(x));
  }
  for (int i = 0; i < lay.M; ++i) {
    const S x = z[lay.n_lambda + i];  // mu root
    push(t.term_up(x), t.extra_cleared(x));
  }
  for (int i = 0; i < lay.M; ++i) {
    const S x = z[lay.n_lambda + lay.M + i];  // nu root
    push(t.term_down(x), t.extra_cleared(x));
  }
}

inline std::vector<Cplx> flatten_roots(const BetheRootSet& roots) {
  std::vector<Cplx> z;
  z.reserve(roots.lambda.size() + roots.mu.size() + roots.nu.size());
  z.insert(z.end(), roots.lambda.begin(), roots.lambda.end());
  z.insert(z.end(), roots.mu.begin(), roots.mu.end());
  z.insert(z.end(), roots.nu.begin(), roots.nu.end());
  return z;
}

inline void unflatten_roots(const std::vector<Cplx>& z, const RootLayout& lay,
                            BetheRootSet& roots) {
  roots.lambda.assign(z.begin(), z.begin() + lay.n_lambda);
  if (lay.merged) {
    roots.mu.clear();
    roots.nu.clear();
    return;
  }
  roots.mu.assign(z.begin() + lay.n_lambda, z.begin() + lay.n_lambda + lay.M);
  roots.nu.assign(z.begin() + lay.n_lambda + lay.M, z.end());
}

}  // namespace odba::detail

#endif
