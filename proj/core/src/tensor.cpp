#include "odba/tensor.hpp"

#include <stdexcept>
#include <string>

namespace odba {

namespace {

Eigen::Index pow2(int n) { return Eigen::Index(1) << n; }

void check_factor(int j, int n_factors, const char* what) {
  if (j < 1 || j > n_factors) {
    throw std::out_of_range(std::string(what) + " index " + std::to_string(j) +
                            " out of range 1.." + std::to_string(n_factors));
  }
}

// Bit position of factor j (1-based, factor 1 slowest).
inline int bit_of(int j, int n_factors) { return n_factors - j; }

}  // namespace

DenseOperator::DenseOperator(Mat m, std::vector<int> dims)
    : dim(m.rows()), entries(std::move(m)), factor_dims(std::move(dims)) {
  if (entries.rows() != entries.cols()) {
    throw std::invalid_argument("DenseOperator: matrix must be square");
  }
  Eigen::Index prod = 1;
  for (int d : factor_dims) prod *= d;
  if (prod != dim) {
    throw std::invalid_argument(
        "DenseOperator: product of factor dims does not match matrix size");
  }
}

DenseOperator identity_op(int n_factors) {
  const Eigen::Index d = pow2(n_factors);
  return DenseOperator(Mat::Identity(d, d), std::vector<int>(n_factors, 2));
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

DenseOperator embed_site(const Mat& op2, int j, int n_factors) {
  check_factor(j, n_factors, "site");
  if (op2.rows() != 2 || op2.cols() != 2) {
    throw std::invalid_argument("embed_site: operator must be 2x2");
  }
  const Mat left = Mat::Identity(pow2(j - 1), pow2(j - 1));
  const Mat right = Mat::Identity(pow2(n_factors - j), pow2(n_factors - j));
  return DenseOperator(kron(kron(left, op2), right),
                       std::vector<int>(n_factors, 2));
}

DenseOperator embed_pair(const Mat& op4, int i, int j, int n_factors) {
  check_factor(i, n_factors, "pair");
  check_factor(j, n_factors, "pair");
  if (i == j) throw std::invalid_argument("embed_pair: i == j");
  if (op4.rows() != 4 || op4.cols() != 4) {
    throw std::invalid_argument("embed_pair: operator must be 4x4");
  }
  const Eigen::Index d = pow2(n_factors);
  const int bi = bit_of(i, n_factors);
  const int bj = bit_of(j, n_factors);
  Mat out = Mat::Zero(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    const int cb = static_cast<int>(((c >> bi) & 1) << 1 | ((c >> bj) & 1));
    const Eigen::Index cbase =
        c & ~((Eigen::Index(1) << bi) | (Eigen::Index(1) << bj));
    for (int rb = 0; rb < 4; ++rb) {
      const Cplx v = op4(rb, cb);
      if (v == Cplx(0.0)) continue;
      const Eigen::Index r = cbase | (Eigen::Index(rb >> 1) << bi) |
                             (Eigen::Index(rb & 1) << bj);
      out(r, c) += v;
    }
  }
  return DenseOperator(std::move(out), std::vector<int>(n_factors, 2));
}

DenseOperator partial_transpose(const DenseOperator& op, int k) {
  check_factor(k, op.num_factors(), "transpose");
  const int b = bit_of(k, op.num_factors());
  const Eigen::Index mask = Eigen::Index(1) << b;
  Mat out(op.dim, op.dim);
  for (Eigen::Index c = 0; c < op.dim; ++c) {
    for (Eigen::Index r = 0; r < op.dim; ++r) {
      const Eigen::Index rs = (r & ~mask) | (c & mask);
      const Eigen::Index cs = (c & ~mask) | (r & mask);
      out(r, c) = op.entries(rs, cs);
    }
  }
  return DenseOperator(std::move(out), op.factor_dims);
}

DenseOperator trace_factors(const DenseOperator& op,
                            const std::vector<int>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("trace_factors: empty factor set");
  }
  const int n = op.num_factors();
  std::vector<bool> traced(n + 1, false);
  for (int f : factors) {
    check_factor(f, n, "trace");
    traced[f] = true;
  }
  std::vector<int> kept;  // surviving factors, in order
  for (int f = 1; f <= n; ++f)
    if (!traced[f]) kept.push_back(f);

  const int nk = static_cast<int>(kept.size());
  const int nt = n - nk;
  const Eigen::Index dk = pow2(nk);
  const Eigen::Index dt = pow2(nt);

  // Scatter maps from the compact kept/traced indices to full-space bits.
  std::vector<Eigen::Index> kept_map(dk, 0), traced_map(dt, 0);
  {
    std::vector<int> kept_bits, traced_bits;
    for (int f = 1; f <= n; ++f) {
      (traced[f] ? traced_bits : kept_bits).push_back(bit_of(f, n));
    }
    for (Eigen::Index x = 0; x < dk; ++x) {
      Eigen::Index full = 0;
      for (int b = 0; b < nk; ++b)
        if ((x >> (nk - 1 - b)) & 1) full |= Eigen::Index(1) << kept_bits[b];
      kept_map[x] = full;
    }
    for (Eigen::Index x = 0; x < dt; ++x) {
      Eigen::Index full = 0;
      for (int b = 0; b < nt; ++b)
        if ((x >> (nt - 1 - b)) & 1) full |= Eigen::Index(1) << traced_bits[b];
      traced_map[x] = full;
    }
  }

  Mat out = Mat::Zero(dk, dk);
  for (Eigen::Index c = 0; c < dk; ++c) {
    for (Eigen::Index r = 0; r < dk; ++r) {
      Cplx sum = 0.0;
      for (Eigen::Index t = 0; t < dt; ++t) {
        sum += op.entries(kept_map[r] | traced_map[t],
                          kept_map[c] | traced_map[t]);
      }
      out(r, c) = sum;
    }
  }
  return DenseOperator(std::move(out), std::vector<int>(nk, 2));
}

void apply_pair_left(const Mat& op4, int i, int j, int n_factors, Mat& m) {
  check_factor(i, n_factors, "pair");
  check_factor(j, n_factors, "pair");
  if (i == j) throw std::invalid_argument("apply_pair_left: i == j");
  const Eigen::Index d = m.rows();
  if (d != pow2(n_factors) || m.cols() != d) {
    throw std::invalid_argument("apply_pair_left: dimension mismatch");
  }
  const int bi = bit_of(i, n_factors);
  const int bj = bit_of(j, n_factors);
  const Eigen::Index mi = Eigen::Index(1) << bi;
  const Eigen::Index mj = Eigen::Index(1) << bj;

  Mat out(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index rbase = 0; rbase < d; ++rbase) {
      if (rbase & (mi | mj)) continue;  // enumerate cleared-bit bases once
      Cplx acc[4] = {0.0, 0.0, 0.0, 0.0};
      for (int sb = 0; sb < 4; ++sb) {
        const Eigen::Index src =
            rbase | (sb & 2 ? mi : 0) | (sb & 1 ? mj : 0);
        const Cplx x = m(src, c);
        if (x == Cplx(0.0)) continue;
        acc[0] += op4(0, sb) * x;
        acc[1] += op4(1, sb) * x;
        acc[2] += op4(2, sb) * x;
        acc[3] += op4(3, sb) * x;
      }
      out(rbase, c) = acc[0];
      out(rbase | mj, c) = acc[1];
      out(rbase | mi, c) = acc[2];
      out(rbase | mi | mj, c) = acc[3];
    }
  }
  m.swap(out);
}

}  // namespace odba
