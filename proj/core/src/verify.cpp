#include "odba/verify.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>

#include "odba/monodromy.hpp"
#include "odba/qdet.hpp"
#include "odba/tensor.hpp"

namespace odba {

namespace {

Mat r21(Cplx u) {
  const Mat p = permutation_p();
  return p * r_matrix(u) * p;
}

Mat embedded_r(Cplx u, int i, int j, int nf) {
  return embed_pair(r_matrix(u), i, j, nf).entries;
}

std::uint64_t fnv1a(const std::string& id, const std::vector<Cplx>& points) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int k = 0; k < 8; ++k) {
      h ^= (x >> (8 * k)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  for (char c : id) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  for (Cplx z : points) {
    std::uint64_t bits;
    double re = z.real(), im = z.imag();
    static_assert(sizeof(bits) == sizeof(re));
    std::memcpy(&bits, &re, 8);
    mix(bits);
    std::memcpy(&bits, &im, 8);
    mix(bits);
  }
  return h;
}

Vec random_vector(Eigen::Index n, Rng& rng) {
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.disk(1.0) + Cplx(0.1, 0.0);
  return v;
}

// Residual of an operator identity probed on random states, normalized per
// state by the larger side.
double probed_residual(const Mat& lhs, const Mat& rhs, std::uint64_t seed,
                       int n_probes = 5) {
  Rng rng(seed);
  double worst = 0.0;
  for (int k = 0; k < n_probes; ++k) {
    const Vec v = random_vector(lhs.cols(), rng);
    const Vec lv = lhs * v;
    const Vec rv = rhs * v;
    const double scale = std::max({lv.norm(), rv.norm(), kNormFloor});
    worst = std::max(worst, (lv - rv).norm() / scale);
  }
  return worst;
}

struct ComponentsAt {
  DoubleRowComponents at_l, at_m;
};

ComponentsAt double_row_components_pair(Cplx l, Cplx m,
                                        const ModelParams& params) {
  ComponentsAt c;
  c.at_l = extract_double_row_components(double_row_monodromy(l, params), l);
  c.at_m = extract_double_row_components(double_row_monodromy(m, params), m);
  return c;
}

}  // namespace

VerificationResult make_result(std::string id, double residual, double tol,
                               const ModelParams& sample,
                               std::vector<Cplx> points) {
  VerificationResult r;
  r.identity_id = std::move(id);
  r.tolerance = tol;
  r.sample = sample;
  r.points = std::move(points);
  if (!std::isfinite(residual)) {
    r.residual = std::numeric_limits<double>::infinity();
    r.passed = false;
    r.diagnostic = "non-finite residual";
  } else {
    r.residual = residual;
    r.passed = residual <= tol;
  }
  return r;
}

const std::vector<std::string>& identity_catalog() {
  static const std::vector<std::string> catalog = {
      "qybe",          "unitarity",      "crossing_r",
      "pt_symmetry",   "antisymmetry",   "reflection",
      "dual_reflection", "rll_1",        "rll_2",
      "rll_3",         "exch_beta_comm", "exch_bg",
      "exch_ab",       "exch_db",        "dr_exchange",
      "cb_relation",   "ab_relation",    "dbarb_relation",
      "transfer_crossing", "transfer_initial", "transfer_asymptotic",
      "operator_functional"};
  return catalog;
}

int identity_point_count(const std::string& id) {
  if (id == "qybe") return 3;
  if (id == "unitarity" || id == "crossing_r" || id == "pt_symmetry" ||
      id == "transfer_crossing") {
    return 1;
  }
  if (id == "antisymmetry" || id == "transfer_initial" ||
      id == "transfer_asymptotic" || id == "operator_functional") {
    return 0;
  }
  if (id == "reflection" || id == "dual_reflection" || id == "rll_1" ||
      id == "rll_2" || id == "rll_3" || id == "exch_beta_comm" ||
      id == "exch_bg" || id == "exch_ab" || id == "exch_db" ||
      id == "dr_exchange" || id == "cb_relation" || id == "ab_relation" ||
      id == "dbarb_relation") {
    return 2;
  }
  throw std::invalid_argument("unknown identity: " + id);
}

std::vector<Cplx> sample_identity_points(const std::string& id, Rng& rng) {
  const int n = identity_point_count(id);
  const bool needs_distinct =
      id == "exch_bg" || id == "exch_ab" || id == "exch_db";
  const bool needs_guards =
      id == "cb_relation" || id == "ab_relation" || id == "dbarb_relation";
  constexpr double kGuard = 0.02;
  for (;;) {
    std::vector<Cplx> pts;
    pts.reserve(n);
    for (int k = 0; k < n; ++k) pts.push_back(rng.disk(1.0));
    bool ok = true;
    if ((needs_distinct || needs_guards) && n == 2) {
      const Cplx l = pts[0], m = pts[1];
      if (std::abs(l - m) < kGuard) ok = false;
      if (needs_guards) {
        for (Cplx d : {l + m, l + m + 1.0, l + m - 1.0, l - m + 1.0,
                       l - m - 1.0, 2.0 * l + 1.0, 2.0 * m + 1.0}) {
          if (std::abs(d) < kGuard) ok = false;
        }
      }
    }
    if (ok) return pts;
  }
}

VerificationResult verify_identity(const std::string& id,
                                   const ModelParams& params,
                                   const std::vector<Cplx>& points,
                                   double tol) {
  check_params(params);
  const std::string bad = theta_constraint_violation(params.theta);
  if (!bad.empty()) throw std::invalid_argument("invalid sample: " + bad);
  if (static_cast<int>(points.size()) < identity_point_count(id)) {
    throw std::invalid_argument("identity " + id + " needs " +
                                std::to_string(identity_point_count(id)) +
                                " spectral points");
  }

  const int N = params.N;
  double residual = 0.0;

  if (id == "qybe") {
    const Cplx u12 = points[0] - points[1];
    const Cplx u13 = points[0] - points[2];
    const Cplx u23 = points[1] - points[2];
    const Mat r12 = embedded_r(u12, 1, 2, 3);
    const Mat r13 = embedded_r(u13, 1, 3, 3);
    const Mat r23 = embedded_r(u23, 2, 3, 3);
    residual = rel_residual(r12 * r13 * r23, r23 * r13 * r12);
  } else if (id == "unitarity") {
    const Cplx u = points[0];
    residual = rel_residual(r_matrix(u) * r21(-u),
                            -xi_unitarity(u) * Mat::Identity(4, 4));
  } else if (id == "crossing_r") {
    const Cplx u = points[0];
    const Mat v1 = kron(crossing_v(), Mat::Identity(2, 2));
    const DenseOperator rt(r_matrix(-u - 1.0), {2, 2});
    residual =
        rel_residual(r_matrix(u), v1 * partial_transpose(rt, 2).entries * v1);
  } else if (id == "pt_symmetry") {
    const Cplx u = points[0];
    const Mat r = r_matrix(u);
    const DenseOperator rd(r, {2, 2});
    const Mat rtt = partial_transpose(partial_transpose(rd, 1), 2).entries;
    residual = std::max(rel_residual(r, r21(u)), rel_residual(r, rtt));
  } else if (id == "antisymmetry") {
    residual = rel_residual(r_matrix(Cplx(-1.0)), -2.0 * projector_minus());
  } else if (id == "reflection") {
    const Cplx u1 = points[0], u2 = points[1];
    const Mat i2 = Mat::Identity(2, 2);
    const Mat k1a = kron(k_minus(u1, params), i2);
    const Mat k2b = kron(i2, k_minus(u2, params));
    const Mat lhs = r_matrix(u1 - u2) * k1a * r21(u1 + u2) * k2b;
    const Mat rhs = k2b * r_matrix(u1 + u2) * k1a * r21(u1 - u2);
    residual = rel_residual(lhs, rhs);
  } else if (id == "dual_reflection") {
    const Cplx u1 = points[0], u2 = points[1];
    const Mat i2 = Mat::Identity(2, 2);
    const Mat k1a = kron(k_plus(u1, params), i2);
    const Mat k2b = kron(i2, k_plus(u2, params));
    const Mat lhs = r_matrix(u2 - u1) * k1a * r21(-u1 - u2 - 2.0) * k2b;
    const Mat rhs = k2b * r_matrix(-u1 - u2 - 2.0) * k1a * r21(u2 - u1);
    residual = rel_residual(lhs, rhs);
  } else if (id == "rll_1" || id == "rll_2" || id == "rll_3") {
    const Cplx u = points[0], v = points[1];
    const int nf = N + 2;
    if (id == "rll_1") {
      const Mat t1 =
          monodromy_embedded(u, params, MonodromyVariant::kForward, 1, 2).entries;
      const Mat t2 =
          monodromy_embedded(v, params, MonodromyVariant::kForward, 2, 2).entries;
      const Mat r = embedded_r(u - v, 1, 2, nf);
      residual = rel_residual(r * t1 * t2, t2 * t1 * r);
    } else if (id == "rll_2") {
      const Mat h1 =
          monodromy_embedded(u, params, MonodromyVariant::kHat, 1, 2).entries;
      const Mat h2 =
          monodromy_embedded(v, params, MonodromyVariant::kHat, 2, 2).entries;
      const Mat r = embedded_r(v - u, 1, 2, nf);
      residual = rel_residual(r * h2 * h1, h1 * h2 * r);
    } else {
      const Mat t1 =
          monodromy_embedded(u, params, MonodromyVariant::kForward, 1, 2).entries;
      const Mat h2 =
          monodromy_embedded(v, params, MonodromyVariant::kHat, 2, 2).entries;
      const Mat r = embedded_r(u + v, 1, 2, nf);
      residual = rel_residual(h2 * r * t1, t1 * r * h2);
    }
  } else if (id == "exch_beta_comm" || id == "exch_bg" || id == "exch_ab" ||
             id == "exch_db") {
    const Cplx l = points[0], m = points[1];
    const OneRowComponents cl =
        extract_one_row_components(monodromy(l, params, MonodromyVariant::kForward));
    const OneRowComponents cm =
        extract_one_row_components(monodromy(m, params, MonodromyVariant::kForward));
    if (id == "exch_beta_comm") {
      residual = rel_residual(cl.beta * cm.beta, cm.beta * cl.beta);
    } else if (id == "exch_bg") {
      const Mat rhs = cm.gamma * cl.beta +
                      (cm.delta * cl.alpha - cl.delta * cm.alpha) / (l - m);
      residual = rel_residual(cl.beta * cm.gamma, rhs);
    } else if (id == "exch_ab") {
      const Mat rhs = ((l - m - 1.0) / (l - m)) * cm.beta * cl.alpha +
                      (cl.beta * cm.alpha) / (l - m);
      residual = rel_residual(cl.alpha * cm.beta, rhs);
    } else {
      const Mat rhs = ((l - m + 1.0) / (l - m)) * cm.beta * cl.delta -
                      (cl.beta * cm.delta) / (l - m);
      residual = rel_residual(cl.delta * cm.beta, rhs);
    }
  } else if (id == "dr_exchange") {
    const Cplx u1 = points[0], u2 = points[1];
    const int nf = N + 2;
    const Mat t1 = double_row_monodromy_embedded(u1, params, 1, 2).entries;
    const Mat t2 = double_row_monodromy_embedded(u2, params, 2, 2).entries;
    const Mat r12m = embedded_r(u1 - u2, 1, 2, nf);
    const Mat r21m = embed_pair(r21(u1 + u2), 1, 2, nf).entries;
    const Mat r12p = embedded_r(u1 + u2, 1, 2, nf);
    const Mat r21d = embed_pair(r21(u1 - u2), 1, 2, nf).entries;
    residual = rel_residual(r12m * t1 * r21m * t2, t2 * r12p * t1 * r21d);
  } else if (id == "cb_relation" || id == "ab_relation" ||
             id == "dbarb_relation") {
    const Cplx l = points[0], m = points[1];
    const ComponentsAt c = double_row_components_pair(l, m, params);
    Mat lhs, rhs;
    if (id == "cb_relation") {
      lhs = c.at_l.c * c.at_m.b;
      rhs = c.at_m.b * c.at_l.c +
            ((l + m) / ((l + m + 1.0) * (l - m) * (2.0 * l + 1.0))) *
                (c.at_m.a * c.at_l.dbar) +
            (((l - m + 1.0) * 2.0 * l) /
             ((l + m + 1.0) * (l - m) * (2.0 * l + 1.0))) *
                (c.at_m.a * c.at_l.a) -
            (2.0 * l / ((l - m) * (2.0 * l + 1.0) * (2.0 * m + 1.0))) *
                (c.at_l.a * c.at_m.dbar + c.at_l.a * c.at_m.a) -
            (1.0 / ((l + m + 1.0) * (2.0 * l + 1.0) * (2.0 * m + 1.0))) *
                (c.at_l.dbar * c.at_m.dbar + c.at_l.dbar * c.at_m.a);
    } else if (id == "ab_relation") {
      lhs = c.at_l.a * c.at_m.b;
      rhs = (((l + m) * (l - m - 1.0)) / ((l - m) * (l + m + 1.0))) *
                (c.at_m.b * c.at_l.a) -
            (1.0 / ((l + m + 1.0) * (2.0 * m + 1.0))) * (c.at_l.b * c.at_m.dbar) +
            (2.0 * m / ((l - m) * (2.0 * m + 1.0))) * (c.at_l.b * c.at_m.a);
    } else {
      lhs = c.at_l.dbar * c.at_m.b;
      rhs = (((l - m + 1.0) * (l + m + 2.0)) / ((l - m) * (l + m + 1.0))) *
                (c.at_m.b * c.at_l.dbar) -
            ((2.0 * (l + 1.0)) / ((l - m) * (2.0 * m + 1.0))) *
                (c.at_l.b * c.at_m.dbar) +
            ((4.0 * (l + 1.0) * m) / ((2.0 * m + 1.0) * (l + m + 1.0))) *
                (c.at_l.b * c.at_m.a);
    }
    residual = probed_residual(lhs, rhs, fnv1a(id, points));
  } else if (id == "transfer_crossing") {
    const Cplx u = points[0];
    residual = rel_residual(transfer_matrix(-u - 1.0, params),
                            transfer_matrix(u, params));
  } else if (id == "transfer_initial") {
    Cplx expected = 2.0 * params.p * params.q;
    for (Cplx t : params.theta) expected *= (1.0 - t) * (1.0 + t);
    const Mat tau0 = transfer_matrix(Cplx(0.0), params);
    residual = rel_residual(
        tau0, expected * Mat::Identity(tau0.rows(), tau0.cols()));
  } else if (id == "transfer_asymptotic") {
    // Richardson extrapolation from |u| = 1e3, 2e3, 4e3 removes the 1/u and
    // 1/u^2 tails of tau(u)/u^{2N+2}.
    auto g = [&](double u) {
      return (transfer_matrix(Cplx(u), params) / std::pow(u, 2 * N + 2)).eval();
    };
    const Mat extrap = (1.0 / 3.0) * g(1e3) - 2.0 * g(2e3) + (8.0 / 3.0) * g(4e3);
    const Eigen::Index d = extrap.rows();
    residual = rel_residual(extrap, 2.0 * Mat::Identity(d, d));
  } else if (id == "operator_functional") {
    for (int j = 1; j <= N; ++j) {
      const Cplx t = params.theta[j - 1];
      const Mat prod =
          transfer_matrix(t, params) * transfer_matrix(t - 1.0, params);
      const Eigen::Index d = prod.rows();
      residual = std::max(
          residual,
          rel_residual(prod, functional_rhs(j, params) * Mat::Identity(d, d)));
    }
  } else {
    throw std::invalid_argument("unknown identity: " + id);
  }

  return make_result(id, residual, tol, params, points);
}

std::vector<VerificationResult> verify_catalog(const ModelParams& params,
                                               Rng& rng, double tol) {
  std::vector<VerificationResult> out;
  out.reserve(identity_catalog().size());
  for (const std::string& id : identity_catalog()) {
    const std::vector<Cplx> pts = sample_identity_points(id, rng);
    const double t =
        id == "transfer_asymptotic" ? std::max(tol, 1e-6) : tol;
    out.push_back(verify_identity(id, params, pts, t));
  }
  return out;
}

namespace {

// |f| relative to the product of its factor magnitudes, skipping factors
// below the floor (used for values that vanish identically).
double zero_residual(Cplx value, const std::vector<Cplx>& factors) {
  double scale = 1.0;
  for (Cplx f : factors) scale *= std::max(std::abs(f), 1e-3);
  return std::abs(value) / std::max(scale, kNormFloor);
}

}  // namespace

std::vector<VerificationResult> verify_vacuum_relations(
    const ModelParams& params, std::uint64_t point_seed) {
  check_params(params);
  const std::string bad = theta_constraint_violation(params.theta, false);
  if (!bad.empty()) throw std::invalid_argument("invalid sample: " + bad);

  std::vector<VerificationResult> out;
  const int N = params.N;
  const Vec vac = vacuum_state(N);
  Rng rng(point_seed);

  std::vector<Cplx> upoints;
  while (upoints.size() < 5) {
    const Cplx u = rng.disk(1.0);
    if (std::abs(2.0 * u + 1.0) < 0.05) continue;
    upoints.push_back(u);
  }

  // Component actions on the vacuum at generic spectral points.
  {
    double res_c = 0.0, res_a = 0.0, res_d = 0.0;
    for (Cplx u : upoints) {
      const DoubleRowComponents c =
          extract_double_row_components(double_row_monodromy(u, params), u);
      res_c = std::max(res_c, (c.c * vac).norm() /
                                  std::max(c.c.norm(), kNormFloor));
      res_a = std::max(res_a, (c.a * vac - vacuum_a(u, params) * vac).norm() /
                                  std::max(c.a.norm(), kNormFloor));
      res_d = std::max(res_d,
                       (c.dbar * vac - vacuum_d(u, params) * vac).norm() /
                           std::max(c.dbar.norm(), kNormFloor));
    }
    out.push_back(make_result("vacuum_c_annihilation", res_c, 1e-12, params,
                              upoints));
    out.push_back(make_result("vacuum_a_eigenvalue", res_a, 1e-12, params,
                              upoints));
    out.push_back(make_result("vacuum_dbar_eigenvalue", res_d, 1e-12, params,
                              upoints));
  }

  // a(theta_j - 1) = 0 = d(theta_j).
  {
    double res = 0.0;
    for (int j = 1; j <= N; ++j) {
      const Cplx tj = params.theta[j - 1];
      std::vector<Cplx> afactors{params.p + tj - 1.0};
      for (Cplx t : params.theta) {
        afactors.push_back(tj - 1.0 + t + 1.0);
        if (t != tj) afactors.push_back(tj - 1.0 - t + 1.0);
      }
      res = std::max(res, zero_residual(vacuum_a(tj - 1.0, params), afactors));
      std::vector<Cplx> dfactors{2.0 * tj, params.p - tj - 1.0};
      for (Cplx t : params.theta) {
        dfactors.push_back(tj + t);
        if (t != tj) dfactors.push_back(tj - t);
      }
      res = std::max(res, zero_residual(vacuum_d(tj, params), dfactors));
    }
    out.push_back(make_result("vacuum_ad_zeros", res, 1e-12, params, {}));
  }

  // One-row vacuum exchange relations at u = theta_j, and the vanishing of
  // B(theta_j) B(theta_j - 1).
  double res_a1 = 0.0, res_a2 = 0.0, res_a3 = 0.0, res_a4 = 0.0, res_a5 = 0.0,
         res_a6 = 0.0, res_bb = 0.0, res_terms = 0.0, res_reduced = 0.0;
  for (int j = 1; j <= N; ++j) {
    const Cplx tj = params.theta[j - 1];
    const OneRowComponents cj = extract_one_row_components(
        monodromy(tj, params, MonodromyVariant::kForward));
    const OneRowComponents cjm = extract_one_row_components(
        monodromy(tj - 1.0, params, MonodromyVariant::kForward));
    const Cplx at = vacuum_a_tilde(tj, params);
    const Cplx dt = vacuum_d_tilde(tj - 1.0, params);

    auto vec_zero = [&](const Mat& op, const Vec& v) {
      return (op * v).norm() / std::max(op.norm() * v.norm(), kNormFloor);
    };
    res_a1 = std::max(res_a1, vec_zero(cj.alpha, cjm.beta * vac));
    res_a1 = std::max(res_a1, vec_zero(cj.delta, cjm.alpha * vac));
    res_a2 = std::max(res_a2, vec_zero(cj.alpha, cjm.alpha * vac));
    res_a2 = std::max(res_a2, vec_zero(cj.delta, cjm.delta * vac));

    auto vec_match = [&](const Vec& lhs, const Vec& rhs, double scale) {
      return (lhs - rhs).norm() / std::max({lhs.norm(), rhs.norm(), scale,
                                            kNormFloor});
    };
    res_a3 = std::max(res_a3,
                      vec_match(cj.gamma * (cjm.beta * vac), (-at * dt) * vac,
                                cj.gamma.norm() * (cjm.beta * vac).norm()));
    res_a4 = std::max(res_a4, vec_match(cj.delta * (cjm.beta * vac),
                                        -dt * (cj.beta * vac),
                                        cj.delta.norm() *
                                            (cjm.beta * vac).norm()));
    res_a5 = std::max(res_a5,
                      vec_match(cj.alpha * (cjm.delta * vac), (at * dt) * vac,
                                cj.alpha.norm() * (cjm.delta * vac).norm()));
    res_a6 = std::max(res_a6, vec_zero(cj.beta, cjm.beta * vac));

    // Full operator statement of the off-diagonal vanishing.
    const DoubleRowComponents dj =
        extract_double_row_components(double_row_monodromy(tj, params), tj);
    const DoubleRowComponents djm = extract_double_row_components(
        double_row_monodromy(tj - 1.0, params), tj - 1.0);
    res_bb = std::max(res_bb,
                      (dj.b * djm.b).norm() /
                          std::max(dj.b.norm() * djm.b.norm(), kNormFloor));

    // Two-step reduction of tau(theta_j) tau(theta_j - 1) on the vacuum:
    // first the six-term expansion, then the fully reduced line.
    const Cplx q = params.q, xi = params.xi;
    const Cplx a_j = vacuum_a(tj, params);
    const Cplx d_jm = vacuum_d(tj - 1.0, params);
    const Vec tau_tau =
        transfer_matrix(tj, params) * (transfer_matrix(tj - 1.0, params) * vac);
    const Vec term1 = (2.0 * (tj + q) * (tj + 1.0) * (q - tj) /
                       ((2.0 * tj + 1.0) * (2.0 * tj - 1.0))) *
                      a_j * d_jm * vac;
    const Vec term2 =
        xi * xi * tj * (tj + 1.0) * (dj.c * (djm.b * vac));
    const Vec term3 = (xi * (q - tj) * (tj + 1.0) / (2.0 * tj - 1.0)) * d_jm *
                      (dj.b * vac);
    const Vec term4 = (2.0 * xi * tj * (tj + q) * (tj + 1.0) /
                       (2.0 * tj + 1.0)) *
                      (dj.a * (djm.b * vac));
    const Vec term5 = (xi * tj * (q - tj - 1.0) / (2.0 * tj + 1.0)) *
                      (dj.dbar * (djm.b * vac));
    const Vec term6 =
        xi * xi * tj * (tj + 1.0) * (dj.b * (djm.b * vac));
    const Vec six = term1 + term2 + term3 + term4 + term5 + term6;
    res_terms = std::max(res_terms, rel_residual(tau_tau, six));

    const Cplx xi2 = xi * xi;
    const Vec reduced = (2.0 * (tj + 1.0) * (q * q - (1.0 + xi2) * tj * tj) /
                         ((2.0 * tj - 1.0) * (2.0 * tj + 1.0))) *
                        a_j * d_jm * vac;
    res_reduced = std::max(res_reduced, rel_residual(tau_tau, reduced));
  }

  out.push_back(make_result("vacuum_exchange_alpha_beta", res_a1, 1e-10,
                            params, {}));
  out.push_back(make_result("vacuum_exchange_alpha_alpha", res_a2, 1e-10,
                            params, {}));
  out.push_back(make_result("vacuum_exchange_gamma_beta", res_a3, 1e-10,
                            params, {}));
  out.push_back(make_result("vacuum_exchange_delta_beta", res_a4, 1e-10,
                            params, {}));
  out.push_back(make_result("vacuum_exchange_alpha_delta", res_a5, 1e-10,
                            params, {}));
  out.push_back(make_result("vacuum_exchange_beta_beta", res_a6, 1e-10,
                            params, {}));
  out.push_back(make_result("bb_vanishing", res_bb, 1e-11, params, {}));
  out.push_back(make_result("tau_product_term_expansion", res_terms, 1e-9,
                            params, {}));
  out.push_back(make_result("tau_product_reduced", res_reduced, 1e-9, params,
                            {}));
  return out;
}

}  // namespace odba
