#include "cube_spectra/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace cube {

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

RealPolynomial RealPolynomial::from_roots(std::span<const double> roots) {
  std::vector<double> c{1.0};
  c.reserve(roots.size() + 1);
  for (double r : roots) {
    // multiply by (z - r)
    c.push_back(0.0);
    for (std::size_t j = c.size() - 1; j > 0; --j) c[j] = c[j - 1] - r * c[j];
    c[0] = -r * c[0];
  }
  return RealPolynomial(std::move(c));
}

double RealPolynomial::operator()(double z) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double RealPolynomial::max_abs_coeff() const {
  double best = 0.0;
  for (double c : coeffs_) best = std::max(best, std::abs(c));
  return best;
}

RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b) {
  std::vector<double> out(a.coeffs().size() + b.coeffs().size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return RealPolynomial(std::move(out));
}

}  // namespace cube
