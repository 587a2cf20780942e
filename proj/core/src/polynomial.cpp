#include "odba/polynomial.hpp"

#include <stdexcept>

namespace odba {

PolynomialC::PolynomialC(std::vector<Cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(Cplx(0.0));
  trim();
}

PolynomialC PolynomialC::monomial(int degree, Cplx c) {
  std::vector<Cplx> coeffs(degree + 1, Cplx(0.0));
  coeffs[degree] = c;
  return PolynomialC(std::move(coeffs));
}

void PolynomialC::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == Cplx(0.0)) coeffs_.pop_back();
}

Cplx PolynomialC::eval(Cplx u) const {
  Cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * u + *it;
  }
  return acc;
}

PolynomialC PolynomialC::derivative() const {
  if (coeffs_.size() == 1) return PolynomialC();
  std::vector<Cplx> out(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) {
    out[k - 1] = static_cast<double>(k) * coeffs_[k];
  }
  return PolynomialC(std::move(out));
}

PolynomialC PolynomialC::shifted(Cplx a) const {
  // Synthetic Horner expansion of p(u + a).
  std::vector<Cplx> out(coeffs_.size(), Cplx(0.0));
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    for (size_t k = out.size() - 1; k > 0; --k) {
      out[k] = out[k] * a + out[k - 1];
    }
    out[0] = out[0] * a + *it;
  }
  return PolynomialC(std::move(out));
}

PolynomialC operator+(const PolynomialC& a, const PolynomialC& b) {
  std::vector<Cplx> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Cplx(0.0));
  for (size_t k = 0; k < out.size(); ++k) {
    out[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  }
  return PolynomialC(std::move(out));
}

PolynomialC operator-(const PolynomialC& a, const PolynomialC& b) {
  return a + (Cplx(-1.0) * b);
}

PolynomialC operator*(const PolynomialC& a, const PolynomialC& b) {
  if (a.is_zero() || b.is_zero()) return PolynomialC();
  std::vector<Cplx> out(a.coeffs_.size() + b.coeffs_.size() - 1, Cplx(0.0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return PolynomialC(std::move(out));
}

PolynomialC operator*(Cplx s, const PolynomialC& a) {
  std::vector<Cplx> out = a.coeffs_;
  for (auto& c : out) c *= s;
  return PolynomialC(std::move(out));
}

PolynomialC fit_polynomial(const std::vector<Cplx>& nodes,
                           const std::vector<Cplx>& values, int degree) {
  if (nodes.size() != values.size()) {
    throw std::invalid_argument("fit_polynomial: node/value size mismatch");
  }
  if (static_cast<int>(nodes.size()) < degree + 1) {
    throw std::invalid_argument("fit_polynomial: not enough nodes");
  }
  const Eigen::Index m = static_cast<Eigen::Index>(nodes.size());
  Mat vand(m, degree + 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    Cplx pw = 1.0;
    for (int k = 0; k <= degree; ++k) {
      vand(i, k) = pw;
      pw *= nodes[i];
    }
  }
  Vec rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) rhs(i) = values[i];
  const Vec sol = vand.colPivHouseholderQr().solve(rhs);
  std::vector<Cplx> coeffs(sol.data(), sol.data() + sol.size());
  return PolynomialC(std::move(coeffs));
}

}  // namespace odba
