#include "cube_spectra/pisier.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "cube_spectra/chebyshev.hpp"
#include "cube_spectra/errors.hpp"
#include "cube_spectra/rng.hpp"

namespace cube {

NormSpec NormSpec::lp(double p) {
  if (std::isinf(p) && p > 0) return infinity();
  require(p >= 1.0 && std::isfinite(p), "l_p norm needs p >= 1");
  auto eval = [p](std::span<const double> v) {
    if (p == 1.0) {
      double s = 0.0;
      for (double x : v) s += std::abs(x);
      return s;
    }
    if (p == 2.0) {
      double s = 0.0;
      for (double x : v) s += x * x;
      return std::sqrt(s);
    }
    double peak = 0.0;
    for (double x : v) peak = std::max(peak, std::abs(x));
    if (peak == 0.0) return 0.0;
    double s = 0.0;
    for (double x : v) s += std::pow(std::abs(x) / peak, p);
    return peak * std::pow(s, 1.0 / p);
  };
  std::ostringstream name;
  name << 'l' << p;
  return NormSpec(p, name.str(), eval);
}

NormSpec NormSpec::infinity() {
  auto eval = [](std::span<const double> v) {
    double peak = 0.0;
    for (double x : v) peak = std::max(peak, std::abs(x));
    return peak;
  };
  return NormSpec(std::numeric_limits<double>::infinity(), "linf", eval);
}

NormSpec NormSpec::custom(std::string name, Evaluator evaluator) {
  require(static_cast<bool>(evaluator), "custom norm needs an evaluator");
  return NormSpec(std::numeric_limits<double>::quiet_NaN(), std::move(name), std::move(evaluator));
}

double NormSpec::operator()(std::span<const double> v) const { return evaluator_(v); }

NormSpec parse_norm(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return NormSpec::infinity();
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ArgumentError("cannot parse norm exponent '" + text + "'");
  }
  if (used != text.size()) throw ArgumentError("cannot parse norm exponent '" + text + "'");
  return NormSpec::lp(p);
}

Spectrum level_function(int n, int l) {
  check_dense(n);
  require(l >= 0 && l <= n, "level must lie in [0, n]");
  std::vector<double> coeffs(std::size_t{1} << n, 0.0);
  for (std::size_t s = 0; s < coeffs.size(); ++s) {
    if (subset_size(s) == l) coeffs[s] = 1.0;
  }
  return Spectrum(n, std::move(coeffs));
}

double rms_norm(const VectorPointTable& f, const NormSpec& norm) {
  double total = 0.0;
  for (std::size_t b = 0; b < f.rows(); ++b) {
    const double v = norm(f.row(b));
    total += v * v;
  }
  return std::sqrt(total / static_cast<double>(f.rows()));
}

double pisier_bound(int m, int l) {
  require(m >= 1 && l >= 1, "pisier_bound needs m, l >= 1");
  return std::pow(4.0 + 6.0 * std::log2(m + 1.0) / l, l);
}

VectorPointTable vector_level_part(const VectorPointTable& f, int l) {
  return vector_convolve(f, level_function(f.n(), l));
}

PisierReport pisier_check(const VectorPointTable& f, int l, const NormSpec& norm) {
  require(l >= 1, "pisier_check needs l >= 1");
  const double full = rms_norm(f, norm);
  if (!(full > 0.0)) throw ArgumentError("pisier_check: ratio undefined for the zero function");
  const double level = rms_norm(vector_level_part(f, l), norm);
  const double bound = pisier_bound(f.m(), l);
  const double ratio = level / full;
  return {full, level, ratio, bound, ratio <= bound};
}

int pisier_proxy_degree(int m, int l) {
  require(m >= 1 && l >= 1, "pisier_proxy_degree needs m, l >= 1");
  const double half_log = 0.5 * std::log2(m + 1.0);
  if (static_cast<double>(l) >= half_log) return l;
  int d = static_cast<int>(std::floor(half_log)) + 1;
  if ((d - l) % 2 != 0) ++d;
  return d;
}

double pisier_proxy_constant(int m, int l, int d) {
  require((d - l) % 2 == 0, "proxy degree must match the parity of l");
  return std::ldexp(std::abs(cheb_coefficient(d, l)), l) *
         (1.0 + std::sqrt(static_cast<double>(m)) * std::ldexp(1.0, -d));
}

VectorPointTable random_vector_function(int n, int m, std::uint64_t seed) {
  check_dense(n);
  require(m >= 1, "m must be at least 1");
  Rng rng(seed);
  std::vector<double> values((std::size_t{1} << n) * static_cast<std::size_t>(m));
  for (double& v : values) v = rng.normal();
  return VectorPointTable(n, m, std::move(values));
}

}  // namespace cube
