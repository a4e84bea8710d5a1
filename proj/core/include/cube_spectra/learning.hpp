#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cube_spectra/function_io.hpp"
#include "cube_spectra/hypercube.hpp"
#include "cube_spectra/rng.hpp"

namespace cube {

/// Source of i.i.d. pairs (X, f(X)) with X uniform on {-1,1}^n.
class QueryOracle {
 public:
  virtual ~QueryOracle() = default;
  virtual int n() const = 0;
  virtual io::Sample next() = 0;
};

/// Draws points from a seeded generator and answers from a table with values in [-1, 1].
class TableOracle final : public QueryOracle {
 public:
  TableOracle(PointTable f, std::uint64_t seed);
  int n() const override { return table_.n(); }
  io::Sample next() override;

 private:
  PointTable table_;
  Rng rng_;
};

/// Replays a recorded sample file; throws ExhaustedError past the end.
class RecordedOracle final : public QueryOracle {
 public:
  RecordedOracle(int n, std::vector<io::Sample> samples);
  int n() const override { return n_; }
  io::Sample next() override;
  std::size_t remaining() const { return samples_.size() - cursor_; }

 private:
  int n_;
  std::vector<io::Sample> samples_;
  std::size_t cursor_ = 0;
};

struct LearnConfig {
  int n = 0;
  int d = 0;
  double epsilon = 0.0;
  double delta = 0.0;
  std::optional<std::uint64_t> samples_override;
  std::uint64_t seed = 0;

  void validate() const;
};

/// L(n, d) = (d+1) d^d e^binom(d+2, 2) n^((d-1)/2).
double capacity(int n, int d);

/// 2 * 16^2 * eps^-3 * L(n,d)^2 * ln(2 * sum_{l<=d} binom(n,l) / delta), before rounding up.
double sample_complexity_real(const LearnConfig& cfg);

/// Ceiling of sample_complexity_real; CapacityError if it does not fit in 63 bits.
std::uint64_t sample_complexity(const LearnConfig& cfg);

/// All subsets of [n] of size <= d, ordered by size and then by mask.
std::vector<Mask> low_degree_subsets(int n, int d);

struct CoefficientEstimate {
  Mask subset;
  double alpha;
};

/// One shared sample X_1..X_N; alpha_S = (1/N) sum_i f(X_i) chi_S(X_i) for all |S| <= d.
std::vector<CoefficientEstimate> estimate_coefficients(QueryOracle& oracle, std::uint64_t samples,
                                                       int d);

struct LearnedModel {
  int n;
  int d;
  double threshold;       // eps / (4 L(n, d))
  std::uint64_t samples;  // N actually drawn
  std::size_t size_cap;   // floor(64 L^2 / eps^2), saturated
  bool capped = false;    // true when B had to be truncated to size_cap
  std::vector<CoefficientEstimate> retained;  // the set B with its estimates

  Spectrum to_spectrum() const;
};

LearnedModel learn(QueryOracle& oracle, const LearnConfig& cfg);

/// sum_S (f^(S) - g^(S))^2.
double model_error(const Spectrum& f, const LearnedModel& model);

}  // namespace cube
