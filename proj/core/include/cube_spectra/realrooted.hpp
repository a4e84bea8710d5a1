#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cube_spectra/polynomial.hpp"

namespace cube {

/// prod_j (z - r_j) with every r_j > 0, kept alongside its roots so the
/// real-rootedness hypothesis holds by construction.
class RootedPolynomial {
 public:
  int degree() const { return static_cast<int>(roots_.size()); }
  std::span<const double> roots() const { return roots_; }
  const RealPolynomial& poly() const { return poly_; }
  std::span<const double> coeffs() const { return poly_.coeffs(); }

 private:
  friend RootedPolynomial poly_from_roots(std::span<const double> roots);
  RootedPolynomial(std::vector<double> roots, RealPolynomial poly)
      : roots_(std::move(roots)), poly_(std::move(poly)) {}

  std::vector<double> roots_;
  RealPolynomial poly_;
};

/// Throws ArgumentError on an empty root list or any root <= 0.
RootedPolynomial poly_from_roots(std::span<const double> roots);

/// p_{>k}(r) = sum_{j=k+1}^{deg} c_j r^j; zero for k >= deg.
double suffix_eval(const RealPolynomial& p, int k, double r);

struct SuffixViolation {
  std::size_t root_index;
  int k;
  double signed_value;  // (-1)^{d-k-1} p_{>k}(r)
  double scale;
};

struct SuffixSignReport {
  bool pass = true;
  /// min over roots r and k of (-1)^{d-k-1} p_{>k}(r) / scale(r), where
  /// scale(r) = max_j |c_j| * max(1, r)^d.
  double worst_margin = 0.0;
  std::vector<SuffixViolation> violations;
};

SuffixSignReport suffix_sign_check(const RootedPolynomial& p, double tolerance = 1e-9);

struct SequenceReport {
  bool log_concave;
  bool unimodal;
};

/// a_j^2 >= a_{j-1} a_{j+1} - 1e-12 * max|a|^2 for interior j; unimodality
/// means nondecreasing up to some peak and nonincreasing after it (with a
/// 1e-12 * max|a| slack).
SequenceReport sequence_checks(std::span<const double> a);

struct PrefixReport {
  bool applicable;
  std::string reason;  // why the check is not applicable, if so
  bool pass;
  /// min over k of (-1)^k sum_{j<=k} (-1)^j a_j, divided by sum a.
  double worst_margin;
};

/// For positive unimodal a with alternating sum 0, verifies
/// (-1)^k sum_{j<=k} (-1)^j a_j >= 0 for every k.
PrefixReport alternating_prefix_check(std::span<const double> a);

/// a_j = |c_j| r^j for the root with the given index.
std::vector<double> weighted_magnitudes(const RootedPolynomial& p, std::size_t root_index);

/// Degree uniform in [1, max_degree], roots uniform in (0, max_root].
RootedPolynomial random_rooted_polynomial(int max_degree, double max_root, std::uint64_t seed);

struct RealRootedSweep {
  std::size_t trials = 0;
  std::size_t suffix_violations = 0;
  std::size_t sign_pattern_failures = 0;
  std::size_t log_concavity_failures = 0;
  std::size_t unimodality_failures = 0;
  std::size_t prefix_disagreements = 0;  // prefix check and suffix check disagree
  double worst_margin = 0.0;
};

RealRootedSweep realrooted_sweep(std::size_t trials, int max_degree, std::uint64_t seed,
                                 double max_root = 10.0);

}  // namespace cube
