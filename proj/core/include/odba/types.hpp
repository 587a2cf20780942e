#ifndef ODBA_TYPES_HPP
#define ODBA_TYPES_HPP

#include <Eigen/Dense>
#include <complex>

namespace odba {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kNormFloor = 1e-300;

// Relative Frobenius residual ||L-R||_F / max(||L||_F, ||R||_F, floor).
// This is the single pass metric used by every identity check.
inline double rel_residual(const Mat& lhs, const Mat& rhs) {
  const double scale = std::max({lhs.norm(), rhs.norm(), kNormFloor});
  return (lhs - rhs).norm() / scale;
}

inline double rel_residual(const Vec& lhs, const Vec& rhs) {
  const double scale = std::max({lhs.norm(), rhs.norm(), kNormFloor});
  return (lhs - rhs).norm() / scale;
}

}  // namespace odba

#endif
