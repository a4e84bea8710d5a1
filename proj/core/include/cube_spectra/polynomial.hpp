#pragma once

#include <span>
#include <vector>

namespace cube {

/// Real polynomial c_0 + c_1 z + ... + c_deg z^deg.
///
/// The stored length fixes the degree; trailing zeros are trimmed on
/// construction, leaving a single zero coefficient for the zero polynomial.
class RealPolynomial {
 public:
  RealPolynomial() : coeffs_{0.0} {}
  explicit RealPolynomial(std::vector<double> coeffs);

  /// Monic product of (z - r) over the given roots.
  static RealPolynomial from_roots(std::span<const double> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coeffs() const { return coeffs_; }
  double operator[](int j) const { return coeffs_[j]; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

  /// Horner evaluation.
  double operator()(double z) const;

  double max_abs_coeff() const;

 private:
  std::vector<double> coeffs_;
};

RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b);

}  // namespace cube
