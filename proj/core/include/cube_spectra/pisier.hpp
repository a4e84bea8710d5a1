#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "cube_spectra/hypercube.hpp"

namespace cube {

/// A norm on R^m: either l_p (p in [1, inf]) or a caller-supplied evaluation
/// that must satisfy the norm axioms.
class NormSpec {
 public:
  using Evaluator = std::function<double(std::span<const double>)>;

  static NormSpec lp(double p);
  static NormSpec infinity();
  static NormSpec custom(std::string name, Evaluator evaluator);

  double operator()(std::span<const double> v) const;
  double p() const { return p_; }  // NaN for custom norms
  const std::string& name() const { return name_; }

 private:
  NormSpec(double p, std::string name, Evaluator evaluator)
      : p_(p), name_(std::move(name)), evaluator_(std::move(evaluator)) {}

  double p_;
  std::string name_;
  Evaluator evaluator_;
};

/// Parses "1", "2", "3.5", "inf".
NormSpec parse_norm(const std::string& text);

/// L_l = sum_{|S| = l} chi_S.
Spectrum level_function(int n, int l);

/// E[||F(X)||^2]^{1/2} over all 2^n points.
double rms_norm(const VectorPointTable& f, const NormSpec& norm);

/// (4 + 6 log2(m+1) / l)^l.
double pisier_bound(int m, int l);

/// Per-coordinate level projection F_l = F * L_l.
VectorPointTable vector_level_part(const VectorPointTable& f, int l);

struct PisierReport {
  double rms_full;
  double rms_level;
  double ratio;
  double bound;
  bool pass;
};

/// ratio = rms(F_l) / rms(F) against pisier_bound(m, l). Throws ArgumentError
/// when rms(F) = 0.
PisierReport pisier_check(const VectorPointTable& f, int l, const NormSpec& norm);

/// Degree used to build the Pisier proxy for (m, l): the smallest integer
/// above (1/2) log2(m+1) with the parity of l when l is below that, else l.
int pisier_proxy_degree(int m, int l);

/// 2^l |C(d,l)| (1 + sqrt(m) / 2^d): the constant the proxy decomposition yields.
double pisier_proxy_constant(int m, int l, int d);

/// Random F with i.i.d. standard normal entries (row-major draw order).
VectorPointTable random_vector_function(int n, int m, std::uint64_t seed);

}  // namespace cube
