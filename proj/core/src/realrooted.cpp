#include "cube_spectra/realrooted.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cube_spectra/errors.hpp"
#include "cube_spectra/rng.hpp"

namespace cube {

RootedPolynomial poly_from_roots(std::span<const double> roots) {
  require(!roots.empty(), "need at least one root");
  for (double r : roots) require(std::isfinite(r) && r > 0.0, "roots must be positive and finite");
  return RootedPolynomial(std::vector<double>(roots.begin(), roots.end()),
                          RealPolynomial::from_roots(roots));
}

double suffix_eval(const RealPolynomial& p, int k, double r) {
  require(k >= 0, "suffix index must be non-negative");
  if (k >= p.degree()) return 0.0;
  double acc = 0.0;
  for (int j = p.degree(); j > k; --j) acc = acc * r + p[j];
  // acc = sum_{j>k} c_j r^{j-k-1}
  return acc * std::pow(r, k + 1);
}

SuffixSignReport suffix_sign_check(const RootedPolynomial& p, double tolerance) {
  SuffixSignReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();
  const int d = p.degree();
  const double max_coeff = p.poly().max_abs_coeff();
  for (std::size_t i = 0; i < p.roots().size(); ++i) {
    const double r = p.roots()[i];
    const double scale = max_coeff * std::pow(std::max(1.0, r), d);
    for (int k = 0; k <= d; ++k) {
      const double sign = ((d - k - 1) % 2 == 0) ? 1.0 : -1.0;
      const double value = sign * suffix_eval(p.poly(), k, r) + 0.0;  // no -0
      report.worst_margin = std::min(report.worst_margin, value / scale);
      if (value < -tolerance * scale) {
        report.pass = false;
        report.violations.push_back({i, k, value, scale});
      }
    }
  }
  return report;
}

SequenceReport sequence_checks(std::span<const double> a) {
  require(!a.empty(), "sequence must be nonempty");
  double peak = 0.0;
  for (double v : a) peak = std::max(peak, std::abs(v));

  bool log_concave = true;
  for (std::size_t j = 1; j + 1 < a.size(); ++j) {
    if (a[j] * a[j] < a[j - 1] * a[j + 1] - 1e-12 * peak * peak) log_concave = false;
  }

  const double slack = 1e-12 * peak;
  std::size_t j = 0;
  while (j + 1 < a.size() && a[j + 1] >= a[j] - slack) ++j;
  while (j + 1 < a.size() && a[j + 1] <= a[j] + slack) ++j;
  return {log_concave, j + 1 == a.size()};
}

PrefixReport alternating_prefix_check(std::span<const double> a) {
  require(!a.empty(), "sequence must be nonempty");
  double total = 0.0;
  for (double v : a) {
    if (!(v > 0.0)) return {false, "entries must be positive", false, 0.0};
    total += v;
  }
  if (!sequence_checks(a).unimodal) return {false, "sequence is not unimodal", false, 0.0};
  double alternating = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) alternating += (j % 2 == 0 ? 1.0 : -1.0) * a[j];
  if (std::abs(alternating) > 1e-10 * total) {
    return {false, "alternating sum is not zero", false, 0.0};
  }

  double prefix = 0.0;
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    prefix += sign * a[k];
    worst = std::min(worst, sign * prefix / total);
  }
  return {true, "", worst >= -1e-10, worst};
}

std::vector<double> weighted_magnitudes(const RootedPolynomial& p, std::size_t root_index) {
  require(root_index < p.roots().size(), "root index out of range");
  const double r = p.roots()[root_index];
  std::vector<double> a;
  double power = 1.0;
  for (double c : p.coeffs()) {
    a.push_back(std::abs(c) * power);
    power *= r;
  }
  return a;
}

RootedPolynomial random_rooted_polynomial(int max_degree, double max_root, std::uint64_t seed) {
  require(max_degree >= 1, "max degree must be at least 1");
  require(max_root > 0.0, "max root must be positive");
  Rng rng(seed);
  const int d = static_cast<int>(rng.uniform_int(1, static_cast<std::uint64_t>(max_degree)));
  std::vector<double> roots(d);
  for (double& r : roots) r = max_root * rng.uniform_open_closed();
  return poly_from_roots(roots);
}

RealRootedSweep realrooted_sweep(std::size_t trials, int max_degree, std::uint64_t seed,
                                 double max_root) {
  RealRootedSweep sweep;
  sweep.trials = trials;
  sweep.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < trials; ++t) {
    const RootedPolynomial p = random_rooted_polynomial(max_degree, max_root, derive_seed(seed, t));
    const int d = p.degree();

    for (int j = 0; j <= d; ++j) {
      const double expected = ((d - j) % 2 == 0) ? 1.0 : -1.0;
      if (!(p.coeffs()[j] * expected > 0.0)) {
        ++sweep.sign_pattern_failures;
        break;
      }
    }
    std::vector<double> magnitudes;
    for (double c : p.coeffs()) magnitudes.push_back(std::abs(c));
    const SequenceReport seq = sequence_checks(magnitudes);
    if (!seq.log_concave) ++sweep.log_concavity_failures;
    if (!seq.unimodal) ++sweep.unimodality_failures;

    const SuffixSignReport suffix = suffix_sign_check(p);
    sweep.suffix_violations += suffix.violations.size();
    sweep.worst_margin = std::min(sweep.worst_margin, suffix.worst_margin);

    bool prefix_pass = true;
    for (std::size_t i = 0; i < p.roots().size(); ++i) {
      const PrefixReport prefix = alternating_prefix_check(weighted_magnitudes(p, i));
      prefix_pass = prefix_pass && prefix.applicable && prefix.pass;
    }
    if (prefix_pass != suffix.pass) ++sweep.prefix_disagreements;
  }
  return sweep;
}

}  // namespace cube
