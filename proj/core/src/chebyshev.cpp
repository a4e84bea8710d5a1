#include "cube_spectra/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cube_spectra/errors.hpp"

namespace cube {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

double to_double_scaled(const BigInt& value, long exp2) {
  if (value == 0) return 0.0;
  const bool negative = value < 0;
  BigInt magnitude = negative ? BigInt(-value) : value;
  const long top = static_cast<long>(boost::multiprecision::msb(magnitude));
  long shift = 0;
  if (top > 62) {
    shift = top - 62;
    // keep a sticky bit so the final rounding to 53 bits stays correct
    const bool sticky = (magnitude & ((BigInt(1) << shift) - 1)) != 0;
    magnitude >>= shift;
    if (sticky) magnitude |= 1;
  }
  const auto head = magnitude.convert_to<unsigned long long>();
  const double v = std::ldexp(static_cast<double>(head), static_cast<int>(std::clamp(
                                                              shift + exp2, -100000L, 100000L)));
  return negative ? -v : v;
}

std::vector<BigInt> chebyshev_coefficients_exact(int d) {
  require(d >= 0, "Chebyshev degree must be non-negative");
  require(d <= kMaxChebyshevDegree, "Chebyshev degree above " + std::to_string(kMaxChebyshevDegree));
  std::vector<BigInt> prev{1};
  if (d == 0) return prev;
  std::vector<BigInt> cur{0, 1};
  for (int k = 1; k < d; ++k) {
    std::vector<BigInt> next(k + 2, 0);
    for (int j = 0; j <= k; ++j) next[j + 1] += 2 * cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RealPolynomial chebyshev_poly(int d) {
  const auto exact = chebyshev_coefficients_exact(d);
  std::vector<double> coeffs;
  coeffs.reserve(exact.size());
  for (const auto& c : exact) coeffs.push_back(to_double(c));
  return RealPolynomial(std::move(coeffs));
}

double chebyshev_value(int d, double z) {
  require(d >= 0, "Chebyshev degree must be non-negative");
  if (d == 0) return 1.0;
  double prev = 1.0;
  double cur = z;
  for (int k = 1; k < d; ++k) {
    const double next = 2.0 * z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

BigInt cheb_coefficient_exact(int d, int l) {
  require(d >= 0 && l >= 0, "C(d, l) needs d, l >= 0");
  require(l <= d, "C(d, l) needs l <= d");
  if (d == 0) return 1;
  if ((d - l) % 2 != 0) return 0;
  const int half = (d + l) / 2;
  BigInt numerator = (BigInt(1) << l) * d * binomial(half, l);
  BigInt quotient = numerator / (d + l);
  if (quotient * (d + l) != numerator) {
    throw ContractError("closed form for C(d, l) is not integral");
  }
  return ((d - l) / 2) % 2 == 0 ? quotient : BigInt(-quotient);
}

double cheb_coefficient(int d, int l) { return to_double(cheb_coefficient_exact(d, l)); }

double theorem1_bound(int d, int l) {
  require(d >= 1, "theorem1_bound needs d >= 1");
  require(l >= 0 && l <= d, "theorem1_bound needs 0 <= l <= d");
  const int effective = (d - l) % 2 == 0 ? d : d - 1;
  return std::abs(cheb_coefficient(effective, l));
}

double naive_bound(int d, int l) {
  require(d >= 0 && l >= 0 && l <= d, "naive_bound needs 0 <= l <= d");
  double out = 1.0;
  for (int i = 1; i <= l; ++i) out *= static_cast<double>(d) / i;
  return out;
}

double theorem2_bound(int n, int d, int l) {
  require(l >= 1, "theorem2_bound needs l >= 1");
  require(l <= d && d <= n, "theorem2_bound needs l <= d <= n");
  const double exponent = 0.5 * l * (l + 1);
  return std::pow(static_cast<double>(n), 0.5 * (l - 1)) * std::pow(static_cast<double>(d), l) *
         std::exp(exponent);
}

}  // namespace cube
