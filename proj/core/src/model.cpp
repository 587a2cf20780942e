#include "odba/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace odba {

namespace {
constexpr double kPoleBand = 1e-9;

bool near(Cplx z, double target) { return std::abs(z - target) < kPoleBand; }
}  // namespace

bool ModelParams::homogeneous() const {
  return std::all_of(theta.begin(), theta.end(),
                     [](Cplx t) { return t == Cplx(0.0); });
}

void check_params(const ModelParams& params) {
  if (params.N < 1 || params.N > kMaxSites) {
    throw std::invalid_argument("N must be between 1 and " +
                                std::to_string(kMaxSites));
  }
  if (static_cast<int>(params.theta.size()) != params.N) {
    throw std::invalid_argument("theta length must equal N");
  }
}

std::string theta_constraint_violation(const std::vector<Cplx>& theta,
                                       bool allow_homogeneous) {
  const bool all_zero = std::all_of(theta.begin(), theta.end(),
                                    [](Cplx t) { return t == Cplx(0.0); });
  if (all_zero && allow_homogeneous) return {};

  std::ostringstream msg;
  for (size_t j = 0; j < theta.size(); ++j) {
    const Cplx t = theta[j];
    if (near(t, 0.0) || near(t, 0.5) || near(t, -0.5) || near(t, 1.0) ||
        near(t, -1.0)) {
      msg << "theta[" << j << "] = (" << t.real() << "," << t.imag()
          << ") hits the pole set {0, +-1/2, +-1} (the 1 +- 2 theta_j and "
             "unitarity factors vanish there)";
      return msg.str();
    }
  }
  for (size_t i = 0; i < theta.size(); ++i) {
    for (size_t j = i + 1; j < theta.size(); ++j) {
      const Cplx d = theta[i] - theta[j];
      const Cplx s = theta[i] + theta[j];
      if (near(d, 0.0)) {
        msg << "theta[" << i << "] and theta[" << j << "] coincide";
        return msg.str();
      }
      if (near(d, 1.0) || near(d, -1.0) || near(s, 0.0) || near(s, 1.0) ||
          near(s, -1.0)) {
        msg << "|theta[" << i << "] +- theta[" << j
            << "]| hits {0, 1} (exchange-relation denominators vanish)";
        return msg.str();
      }
    }
  }
  return {};
}

ModelParams sample_params(int N, Rng& rng, bool homogeneous) {
  ModelParams params;
  params.N = N;
  params.p = rng.uniform(0.7, 3.0);
  params.q = rng.uniform(0.7, 3.0);
  params.xi = rng.uniform(0.0, 2.0);
  params.theta.assign(N, Cplx(0.0));
  if (!homogeneous) {
    for (int j = 0; j < N; ++j) {
      for (;;) {
        const double t = rng.uniform(0.05, 0.45);
        bool ok = true;
        for (int k = 0; k < j; ++k) {
          if (std::abs(t - params.theta[k].real()) < 0.03) ok = false;
        }
        if (ok) {
          params.theta[j] = t;
          break;
        }
      }
    }
  }
  return params;
}

Mat sigma_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Mat sigma_y() {
  Mat m(2, 2);
  m << Cplx(0, 0), Cplx(0, -1), Cplx(0, 1), Cplx(0, 0);
  return m;
}

Mat sigma_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Mat crossing_v() { return Cplx(0, -1) * sigma_y(); }

Mat permutation_p() {
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = m(3, 3) = m(1, 2) = m(2, 1) = 1.0;
  return m;
}

Mat projector_minus() { return 0.5 * (Mat::Identity(4, 4) - permutation_p()); }

Mat r_matrix(Cplx u) {
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = m(3, 3) = u + 1.0;
  m(1, 1) = m(2, 2) = u;
  m(1, 2) = m(2, 1) = 1.0;
  return m;
}

Cplx xi_unitarity(Cplx u) { return (u + 1.0) * (u - 1.0); }

Mat k_minus(Cplx u, const ModelParams& params) {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = params.p + u;
  m(1, 1) = params.p - u;
  return m;
}

Mat k_plus(Cplx u, const ModelParams& params) {
  Mat m(2, 2);
  m(0, 0) = params.q + u + 1.0;
  m(0, 1) = params.xi * (u + 1.0);
  m(1, 0) = params.xi * (u + 1.0);
  m(1, 1) = params.q - u - 1.0;
  return m;
}

}  // namespace odba
