#include "cube_spectra/learning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cube_spectra/errors.hpp"
#include "cube_spectra/exact.hpp"

namespace cube {

TableOracle::TableOracle(PointTable f, std::uint64_t seed) : table_(std::move(f)), rng_(seed) {
  for (double v : table_.values()) {
    require(v >= -1.0 && v <= 1.0, "oracle function values must lie in [-1, 1]");
  }
}

io::Sample TableOracle::next() {
  const Mask full = (Mask{1} << table_.n()) - 1;
  const Mask point = rng_.bits() & full;
  return {point, table_[point]};
}

RecordedOracle::RecordedOracle(int n, std::vector<io::Sample> samples)
    : n_(n), samples_(std::move(samples)) {
  require(n >= 1 && n <= 64, "recorded oracle needs 1 <= n <= 64");
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (const auto& s : samples_) {
    require((s.point & ~full) == 0, "recorded sample point exceeds n bits");
    require(s.value >= -1.0 && s.value <= 1.0, "recorded sample values must lie in [-1, 1]");
  }
}

io::Sample RecordedOracle::next() {
  if (cursor_ >= samples_.size()) {
    throw ExhaustedError("recorded oracle exhausted after " + std::to_string(samples_.size()) +
                         " samples");
  }
  return samples_[cursor_++];
}

void LearnConfig::validate() const {
  require(n >= 1 && n <= 64, "learner needs 1 <= n <= 64");
  require(d >= 1 && d <= n, "learner needs 1 <= d <= n");
  require(epsilon > 0.0 && epsilon <= 1.0, "learner needs 0 < eps <= 1");
  require(delta > 0.0 && delta < 1.0, "learner needs 0 < delta < 1");
  if (samples_override) require(*samples_override >= 1, "sample override must be positive");
}

double capacity(int n, int d) {
  require(d >= 1, "capacity needs d >= 1");
  require(n >= 1, "capacity needs n >= 1");
  const double exponent = 0.5 * (d + 2) * (d + 1);
  return (d + 1) * std::pow(static_cast<double>(d), d) * std::exp(exponent) *
         std::pow(static_cast<double>(n), 0.5 * (d - 1));
}

double sample_complexity_real(const LearnConfig& cfg) {
  cfg.validate();
  const double big_l = capacity(cfg.n, cfg.d);
  double candidates = 0.0;
  for (int l = 0; l <= cfg.d; ++l) candidates += to_double(binomial(cfg.n, l));
  return 2.0 * 16.0 * 16.0 / std::pow(cfg.epsilon, 3) * big_l * big_l *
         std::log(2.0 * candidates / cfg.delta);
}

std::uint64_t sample_complexity(const LearnConfig& cfg) {
  const double real = std::ceil(sample_complexity_real(cfg));
  if (!(real < 0x1.0p63)) {
    throw CapacityError("sample complexity " + std::to_string(real) + " exceeds 2^63");
  }
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(real));
}

std::vector<Mask> low_degree_subsets(int n, int d) {
  require(n >= 1 && n <= 64, "low_degree_subsets needs 1 <= n <= 64");
  require(d >= 0, "degree must be non-negative");
  std::vector<Mask> out{0};
  for (int size = 1; size <= std::min(d, n); ++size) {
    // Gosper's hack over masks with `size` bits below bit n
    Mask m = (size == 64) ? ~Mask{0} : (Mask{1} << size) - 1;
    while (true) {
      out.push_back(m);
      const Mask low = m & (~m + 1);
      const Mask ripple = m + low;
      if (ripple == 0) break;
      const Mask next = (((ripple ^ m) >> 2) / low) | ripple;
      if (n < 64 && (next >> n) != 0) break;
      if (next <= m) break;
      m = next;
    }
  }
  return out;
}

std::vector<CoefficientEstimate> estimate_coefficients(QueryOracle& oracle, std::uint64_t samples,
                                                       int d) {
  require(samples >= 1, "need at least one sample");
  const auto subsets = low_degree_subsets(oracle.n(), d);
  std::vector<double> sums(subsets.size(), 0.0);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const io::Sample s = oracle.next();
    for (std::size_t k = 0; k < subsets.size(); ++k) sums[k] += s.value * character(subsets[k], s.point);
  }
  std::vector<CoefficientEstimate> out;
  out.reserve(subsets.size());
  const double inv = 1.0 / static_cast<double>(samples);
  for (std::size_t k = 0; k < subsets.size(); ++k) out.push_back({subsets[k], sums[k] * inv});
  return out;
}

Spectrum LearnedModel::to_spectrum() const {
  std::vector<std::pair<Mask, double>> entries;
  for (const auto& e : retained) entries.emplace_back(e.subset, e.alpha);
  return Spectrum::from_sparse(n, entries);
}

LearnedModel learn(QueryOracle& oracle, const LearnConfig& cfg) {
  cfg.validate();
  require(oracle.n() == cfg.n, "oracle and config disagree on n");
  const double big_l = capacity(cfg.n, cfg.d);
  const std::uint64_t samples = cfg.samples_override.value_or(sample_complexity(cfg));
  const double threshold = cfg.epsilon / (4.0 * big_l);
  const double raw_cap = std::floor(64.0 * big_l * big_l / (cfg.epsilon * cfg.epsilon));
  const std::size_t size_cap = raw_cap >= 0x1.0p62 ? std::numeric_limits<std::size_t>::max()
                                                   : static_cast<std::size_t>(raw_cap);

  LearnedModel model{cfg.n, cfg.d, threshold, samples, size_cap, false, {}};
  for (const auto& e : estimate_coefficients(oracle, samples, cfg.d)) {
    if (std::abs(e.alpha) >= threshold) model.retained.push_back(e);
  }
  if (model.retained.size() > size_cap) {
    // outside the good event; keep the largest estimates
    std::stable_sort(model.retained.begin(), model.retained.end(),
                     [](const auto& a, const auto& b) { return std::abs(a.alpha) > std::abs(b.alpha); });
    model.retained.resize(size_cap);
    std::sort(model.retained.begin(), model.retained.end(),
              [](const auto& a, const auto& b) {
                const int sa = subset_size(a.subset);
                const int sb = subset_size(b.subset);
                return sa != sb ? sa < sb : a.subset < b.subset;
              });
    model.capped = true;
  }
  return model;
}

double model_error(const Spectrum& f, const LearnedModel& model) {
  require(f.n() == model.n, "model and function disagree on n");
  std::vector<double> diff(f.coeffs().begin(), f.coeffs().end());
  for (const auto& e : model.retained) diff[e.subset] -= e.alpha;
  double total = 0.0;
  for (double v : diff) total += v * v;
  return total;
}

}  // namespace cube
