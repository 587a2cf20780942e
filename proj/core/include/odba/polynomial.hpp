#ifndef ODBA_POLYNOMIAL_HPP
#define ODBA_POLYNOMIAL_HPP

#include <vector>

#include "odba/types.hpp"

namespace odba {

// Complex-coefficient univariate polynomial, coefficients in ascending
// degree with trailing (near-)zeros trimmed.
class PolynomialC {
 public:
  PolynomialC() : coeffs_{Cplx(0.0)} {}
  explicit PolynomialC(std::vector<Cplx> coeffs);
  static PolynomialC constant(Cplx c) { return PolynomialC({c}); }
  static PolynomialC monomial(int degree, Cplx c = Cplx(1.0));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Cplx>& coeffs() const { return coeffs_; }
  Cplx coeff(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k]
                                                          : Cplx(0.0);
  }
  Cplx leading() const { return coeffs_.back(); }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Cplx(0.0); }

  Cplx eval(Cplx u) const;  // Horner

  PolynomialC derivative() const;
  // p(u + a), exact Taylor shift.
  PolynomialC shifted(Cplx a) const;

  friend PolynomialC operator+(const PolynomialC& a, const PolynomialC& b);
  friend PolynomialC operator-(const PolynomialC& a, const PolynomialC& b);
  friend PolynomialC operator*(const PolynomialC& a, const PolynomialC& b);
  friend PolynomialC operator*(Cplx s, const PolynomialC& a);

 private:
  void trim();
  std::vector<Cplx> coeffs_;
};

// Least-squares fit of a degree-`degree` polynomial through the samples
// (nodes[i], values[i]).  Requires at least degree+1 nodes.
PolynomialC fit_polynomial(const std::vector<Cplx>& nodes,
                           const std::vector<Cplx>& values, int degree);

}  // namespace odba

#endif
