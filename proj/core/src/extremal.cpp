#include "cube_spectra/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cube_spectra/chebyshev.hpp"
#include "cube_spectra/errors.hpp"
#include "cube_spectra/rng.hpp"

namespace cube {
namespace {

// (mantissa, exponent) with value = mantissa * 2^exponent exactly
std::pair<BigInt, long> dyadic(double v) {
  if (v == 0.0) return {BigInt(0), 0};
  int exp = 0;
  const double frac = std::frexp(v, &exp);
  const auto mantissa = static_cast<long long>(std::ldexp(frac, 53));
  return {BigInt(mantissa), static_cast<long>(exp) - 53};
}

// num / den * 2^exp2, rounded once
double ratio_to_double(const BigInt& num, const BigInt& den, long exp2) {
  if (num == 0) return 0.0;
  if (den == 1) return to_double_scaled(num, exp2);
  const long num_bits = static_cast<long>(boost::multiprecision::msb(BigInt(abs(num))));
  const long den_bits = static_cast<long>(boost::multiprecision::msb(den));
  const long shift = std::max(0L, den_bits - num_bits + 64);
  const BigInt quotient = (num << shift) / den;
  return to_double_scaled(quotient, exp2 - shift);
}

// 2^{-n} sum_w row[w] * numerators[w] / denominator
double weighted_sum_over_weights(const std::vector<BigInt>& row, const std::vector<BigInt>& numerators,
                                 const BigInt& denominator, long n, long extra_exp2 = 0) {
  BigInt total = 0;
  for (std::size_t w = 0; w < row.size(); ++w) {
    if (numerators[w] != 0 && row[w] != 0) total += row[w] * numerators[w];
  }
  return ratio_to_double(total, denominator, extra_exp2 - n);
}

// Exponential generating function product, truncated to size of a.
std::vector<BigInt> egf_product(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size(), 0);
  for (std::size_t m = 0; m < a.size(); ++m) {
    BigInt binom = 1;
    for (std::size_t k = 0; k <= m; ++k) {
      if (a[k] != 0 && b[m - k] != 0) out[m] += binom * a[k] * b[m - k];
      binom = binom * (m - k) / (k + 1);
    }
  }
  return out;
}

std::vector<BigInt> egf_power(std::vector<BigInt> base, long e) {
  std::vector<BigInt> result(base.size(), 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = egf_product(result, base);
    e >>= 1;
    if (e > 0) base = egf_product(base, base);
  }
  return result;
}

// counts[m] = number of words of length m over [n] whose set of letters with odd
// multiplicity is one fixed l-set: m! [z^m] sinh(z)^l cosh(z)^(n-l).
std::vector<BigInt> odd_set_word_counts(long n, long l, int max_len) {
  std::vector<BigInt> sinh_series(static_cast<std::size_t>(max_len) + 1, 0);
  std::vector<BigInt> cosh_series(sinh_series.size(), 0);
  for (int m = 0; m <= max_len; ++m) (m % 2 == 1 ? sinh_series : cosh_series)[m] = 1;
  return egf_product(egf_power(sinh_series, l), egf_power(cosh_series, n - l));
}

}  // namespace

SymmetricFunction::SymmetricFunction(long n, std::vector<double> profile)
    : n_(n), profile_(std::move(profile)) {
  require(n >= 1, "symmetric function needs n >= 1");
  require(profile_.size() == static_cast<std::size_t>(n) + 1, "profile needs n + 1 values");
  for (double v : profile_) require(std::isfinite(v), "profile values must be finite");
}

double SymmetricFunction::at_sum(long s) const {
  require(s >= -n_ && s <= n_ && (n_ - s) % 2 == 0, "sum outside {-n, -n+2, ..., n}");
  return profile_[(n_ - s) / 2];
}

PointTable SymmetricFunction::to_point_table() const {
  if (n_ > dense_cap()) {
    throw CapacityError("symmetric function with n = " + std::to_string(n_) +
                        " exceeds the dense cap");
  }
  return PointTable::generate(static_cast<int>(n_),
                              [&](Mask b) { return profile_[std::popcount(b)]; });
}

SymmetricFunction scaled_chebyshev_function(long n, int d) {
  require(d >= 1, "scaled Chebyshev needs d >= 1");
  require(n >= 1, "scaled Chebyshev needs n >= 1");
  std::vector<double> profile(static_cast<std::size_t>(n) + 1);
  for (long w = 0; w <= n; ++w) {
    profile[w] = chebyshev_value(d, static_cast<double>(n - 2 * w) / static_cast<double>(n));
  }
  return SymmetricFunction(n, std::move(profile));
}

std::vector<BigInt> krawtchouk_row(long n, long l) {
  require(n >= 1, "krawtchouk_row needs n >= 1");
  require(l >= 0 && l <= n, "level must lie in [0, n]");
  const long rest = n - l;
  // binom(n - l, j) for j = 0..n-l, built incrementally
  std::vector<BigInt> outside(static_cast<std::size_t>(rest) + 1);
  outside[0] = 1;
  for (long j = 1; j <= rest; ++j) {
    outside[j] = outside[j - 1] * (rest - j + 1);
    outside[j] /= j;
  }
  std::vector<BigInt> inside(static_cast<std::size_t>(l) + 1);
  for (long i = 0; i <= l; ++i) inside[i] = binomial(l, i);

  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 0);
  for (long w = 0; w <= n; ++w) {
    BigInt acc = 0;
    for (long i = std::max(0L, w - rest); i <= std::min(l, w); ++i) {
      if (i % 2 == 0) {
        acc += inside[i] * outside[w - i];
      } else {
        acc -= inside[i] * outside[w - i];
      }
    }
    row[w] = std::move(acc);
  }
  return row;
}

double symmetric_level_coefficient(const SymmetricFunction& f, long l) {
  const long n = f.n();
  const auto row = krawtchouk_row(n, l);
  long min_exp = 0;
  bool any = false;
  std::vector<std::pair<BigInt, long>> parts;
  parts.reserve(f.profile().size());
  for (double v : f.profile()) {
    parts.push_back(dyadic(v));
    if (v != 0.0) {
      min_exp = any ? std::min(min_exp, parts.back().second) : parts.back().second;
      any = true;
    }
  }
  if (!any) return 0.0;
  std::vector<BigInt> numerators(parts.size());
  for (std::size_t w = 0; w < parts.size(); ++w) {
    numerators[w] = parts[w].first == 0 ? BigInt(0) : BigInt(parts[w].first << (parts[w].second - min_exp));
  }
  return weighted_sum_over_weights(row, numerators, BigInt(1), n, min_exp);
}

BigInt power_sum_level_coefficient_exact(long n, int j, long l) {
  require(j >= 0 && j <= 30, "power-sum exponent must lie in [0, 30]");
  require(n >= 1, "power sum needs n >= 1");
  require(l >= 0 && l <= n, "level must lie in [0, n]");
  // E[(x_1 + ... + x_n)^j chi_S] counts the words whose odd-letter set is S
  return odd_set_word_counts(n, l, j)[j];
}

double power_sum_level_coefficient(long n, int j, long l) {
  return to_double(power_sum_level_coefficient_exact(n, j, l));
}

double polynomial_of_mean_level_coefficient(long n, const std::vector<BigInt>& poly, long l) {
  require(!poly.empty(), "polynomial must have at least one coefficient");
  require(n >= 1, "polynomial of mean needs n >= 1");
  require(l >= 0 && l <= n, "level must lie in [0, n]");
  const int deg = static_cast<int>(poly.size()) - 1;
  // T(s/n) = sum_j c_j s^j n^{deg-j} / n^deg, and s^j has level-l coefficient counts[j]
  const auto counts = odd_set_word_counts(n, l, deg);
  BigInt n_power = 1;
  BigInt total = 0;
  for (int j = deg; j >= 0; --j) {
    if (poly[j] != 0 && counts[j] != 0) total += poly[j] * counts[j] * n_power;
    n_power *= n;
  }
  const BigInt denominator = n_power / n;
  return ratio_to_double(total, denominator, 0);
}

Prop1Report prop1_check(long n, int d, int l, int dense_limit) {
  require(n >= 1, "prop1_check needs n >= 1");
  require(d >= 1 && l >= 0 && l <= d, "prop1_check needs 0 <= l <= d, d >= 1");
  require(l <= n, "prop1_check needs l <= n");
  if ((d - l) % 2 != 0) throw ParityError("prop1_check needs d = l mod 2");

  const auto cheb = chebyshev_coefficients_exact(d);
  const double coefficient = polynomial_of_mean_level_coefficient(n, cheb, l);
  const double lhs = std::abs(to_double(binomial(n, l)) * coefficient);

  double factorial = 1.0;
  for (int i = 2; i <= d + 1; ++i) factorial *= i;
  const double c_l = std::abs(to_double(cheb[l]));
  const double rhs = c_l - 2.0 * std::exp(static_cast<double>(d)) * factorial / static_cast<double>(n);

  double max_tail = 0.0;
  for (int j = l; j <= d; ++j) max_tail = std::max(max_tail, std::abs(to_double(cheb[j])));
  const double rhs_bound = c_l - 2.0 * factorial * max_tail / static_cast<double>(n);

  Prop1Report report{n, d, l, coefficient, lhs, rhs, rhs <= 0.0, lhs >= rhs - 1e-9,
                     rhs_bound, lhs >= rhs_bound - 1e-9, std::nullopt, true};

  if (n <= dense_limit && n <= dense_cap()) {
    const PointTable table = scaled_chebyshev_function(n, d).to_point_table();
    const Spectrum level = homogeneous_part(analyze(table), l);
    const double sup = sup_norm(synthesize(level));
    report.dense_sup = sup;
    report.dense_pass = sup >= lhs - 1e-9;
  }
  return report;
}

SignedHomogeneous random_sign_homogeneous(int n, int l, std::uint64_t seed, int max_tries) {
  check_dense(n);
  require(l >= 0 && l <= n, "level must lie in [0, n]");
  require(max_tries >= 1, "max_tries must be at least 1");
  const double count = to_double(binomial(n, l));
  const double normalizer = 2.0 * std::sqrt(static_cast<double>(n) * count);

  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::vector<double> coeffs(std::size_t{1} << n, 0.0);
    for (std::size_t s = 0; s < coeffs.size(); ++s) {
      if (subset_size(s) == l) coeffs[s] = rng.sign();
    }
    const Spectrum g(n, std::move(coeffs));
    const double g_sup = sup_norm(synthesize(g));
    if (g_sup > normalizer) continue;

    std::vector<double> scaled(g.coeffs().begin(), g.coeffs().end());
    for (double& c : scaled) c /= normalizer;
    Spectrum f(n, std::move(scaled));
    const double f_l1 = level_l1(f, l);
    return {std::move(f), normalizer, g_sup / normalizer, f_l1, attempt + 1};
  }
  throw ExhaustedError("random_sign_homogeneous: no accepted draw in " + std::to_string(max_tries) +
                       " tries");
}

}  // namespace cube
