// One line per acceptance criterion; exit status 0 only if every line passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cube_spectra/chebyshev.hpp"
#include "cube_spectra/exact.hpp"
#include "cube_spectra/extremal.hpp"
#include "cube_spectra/filter.hpp"
#include "cube_spectra/hypercube.hpp"
#include "cube_spectra/learning.hpp"
#include "cube_spectra/pisier.hpp"
#include "cube_spectra/proxy.hpp"
#include "cube_spectra/realrooted.hpp"
#include "cube_spectra/rng.hpp"
#include "oracles.hpp"

namespace {

using namespace cube;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::optional<double> time_limit_seconds;
  std::function<Outcome()> check;
};

template <typename... Args>
std::string fmt(const char* format, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Spectrum random_low_degree(int n, int d, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> coeffs(std::size_t{1} << n, 0.0);
  for (std::size_t s = 0; s < coeffs.size(); ++s) {
    if (subset_size(s) <= d) coeffs[s] = rng.normal();
  }
  return Spectrum(n, std::move(coeffs));
}

// Tolerances.
constexpr double kFilterTol = 1e-8;        // times 2^d
constexpr double kCosMomentTol = 1e-12;
constexpr double kProxyTol = 1e-8;         // times 2^d
constexpr double kTailSlack = 1e-9;
constexpr double kExtractTol = 1e-9;
constexpr double kBoundSlack = 1e-9;
constexpr double kFastPathTol = 1e-9;
constexpr double kProp2Tol = 1e-9;
constexpr double kRootTol = 1e-9;
constexpr double kStdErrors = 3.0;
constexpr double kChernoffSlack = 0.02;
constexpr double kLearnRate = 0.9;
constexpr double kTransformTol = 1e-10;

Outcome filter_identities() {
  double worst = 0.0;  // in units of 2^d
  for (int d = 1; d <= 16; ++d) {
    const double scale = std::ldexp(1.0, d);
    for (int l = d % 2; l <= d; l += 2) {
      const ChebFilter phi = build_filter(d, l);
      for (int k = 0; k <= d + 1; ++k) {
        worst = std::max(worst, std::abs(filter_moment(phi, k) - (k == l ? 1.0 : 0.0)) / scale);
      }
      worst = std::max(worst, std::abs(phi.abs_mean() - std::abs(cheb_coefficient(d, l))) / scale);
    }
  }
  return {worst <= kFilterTol, fmt("max error / 2^d = %.3g (limit %.0e)", worst, kFilterTol)};
}

Outcome cos_moment_table() {
  double worst = 0.0;
  for (int d = 1; d <= 16; ++d) {
    for (int k = 0; k <= d; ++k) {
      const double expected = k == d ? std::ldexp(1.0, -(d - 1)) : 0.0;
      worst = std::max(worst, std::abs(cos_moment(d, k) - expected));
    }
  }
  return {worst <= kCosMomentTol, fmt("max error %.3g (limit %.0e)", worst, kCosMomentTol)};
}

Outcome proxy_spectra() {
  bool symmetric = true;
  double level_error = 0.0;
  double tail_excess = -1.0;
  for (ProxyVariant variant : {ProxyVariant::kDegreeBound, ProxyVariant::kPisier}) {
    for (int n = 1; n <= 12; ++n) {
      for (int d = 1; d <= 6; ++d) {
        for (int l = 0; l <= d; ++l) {
          const LevelProfile p = proxy_profile(n, d, l, variant);
          const Spectrum s = expand_proxy(p);
          for (Mask m = 0; m < s.size(); ++m) symmetric = symmetric && s[m] == p.level_coeffs[subset_size(m)];
          for (int k = 0; k <= std::min(n, d); ++k) {
            const double err = std::abs(p.level_coeffs[k] - (k == l ? 1.0 : 0.0)) / std::ldexp(1.0, d);
            level_error = std::max(level_error, err);
          }
          if (variant == ProxyVariant::kPisier && p.filter_d >= 1) {
            const double ceiling = std::ldexp(std::abs(cheb_coefficient(p.filter_d, l)), l - p.filter_d);
            for (int k = p.filter_d + 1; k <= n; ++k) {
              tail_excess = std::max(tail_excess, std::abs(p.level_coeffs[k]) - ceiling);
            }
          }
        }
      }
    }
  }
  double extract_error = 0.0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const int d = 1 + static_cast<int>(t % 6);
    const int l = static_cast<int>(t % (d + 1));
    const Spectrum f = random_low_degree(12, d, derive_seed(3001, t));
    extract_error = std::max(extract_error, oracle::max_abs_diff(extract_level(f, d, l).coeffs(),
                                                                 homogeneous_part(f, l).coeffs()));
  }
  const bool pass = symmetric && level_error <= kProxyTol && tail_excess <= kTailSlack &&
                    extract_error <= kExtractTol;
  return {pass, fmt("symmetric=%s level err/2^d=%.3g tail excess=%.3g extract err=%.3g", symmetric ? "yes" : "no",
                    level_error, tail_excess, extract_error)};
}

struct Corpus {
  double worst_sup_ratio = 0.0;
  double worst_l1_ratio = 0.0;
};

Corpus level_corpus() {
  Corpus c;
  const int n = 12;
  for (int d = 1; d <= 5; ++d) {
    for (std::uint64_t t = 0; t < 100; ++t) {
      const BoundedFunction f = random_bounded_function(n, d, derive_seed(4000 + d, t));
      for (int l = 0; l <= d; ++l) {
        const double sup = sup_norm(synthesize(homogeneous_part(f.spectrum, l)));
        c.worst_sup_ratio = std::max(c.worst_sup_ratio, sup / theorem1_bound(d, l));
        if (l >= 1) c.worst_l1_ratio = std::max(c.worst_l1_ratio, level_l1(f.spectrum, l) / theorem2_bound(n, d, l));
      }
    }
  }
  return c;
}

Outcome theorem1(const Corpus& c) {
  double l1_excess = -1.0;
  for (int n = 1; n <= 14; ++n) {
    for (int d = 1; d <= 6; ++d) {
      for (int l = 0; l <= d; ++l) {
        const ProxyL1 r = proxy_l1(proxy_profile(n, d, l, ProxyVariant::kDegreeBound));
        l1_excess = std::max(l1_excess, r.exact - r.ceiling);
      }
    }
  }
  const bool pass = c.worst_sup_ratio <= 1 + kBoundSlack && l1_excess <= kBoundSlack;
  return {pass, fmt("max sup/bound=%.6f  max E|P|-|C|=%.3g", c.worst_sup_ratio, l1_excess)};
}

Outcome theorem2(const Corpus& c) {
  return {c.worst_l1_ratio <= 1.0, fmt("max l1/bound=%.6g", c.worst_l1_ratio)};
}

Outcome prop1_at_scale() {
  const long n = 10000;
  const Prop1Report r = prop1_check(n, 2, 2);
  const double floor = 2.0 - 2.0 * std::exp(2.0) * 6.0 / static_cast<double>(n) - kBoundSlack;

  const SymmetricFunction small = scaled_chebyshev_function(14, 2);
  const Spectrum dense = analyze(small.to_point_table());
  double agreement = 0.0;
  const auto cheb = chebyshev_coefficients_exact(2);
  for (long l = 0; l <= 14; ++l) {
    const double want = dense[(Mask{1} << l) - 1];
    agreement = std::max(agreement, std::abs(symmetric_level_coefficient(small, l) - want));
    agreement = std::max(agreement, std::abs(polynomial_of_mean_level_coefficient(14, cheb, l) - want));
  }
  const Prop1Report at14 = prop1_check(14, 2, 2);
  agreement = std::max(agreement, std::abs(at14.lhs - std::abs(91.0 * dense[0b11])));
  const bool pass = r.lhs >= floor && agreement <= kFastPathTol;
  return {pass, fmt("lhs=%.12f >= %.12f  dense agreement=%.3g", r.lhs, floor, agreement)};
}

Outcome prop2() {
  const SignedHomogeneous f = random_sign_homogeneous(16, 3, 20240101);
  const double target = 0.5 * std::sqrt(560.0 / 16.0);
  const double err = std::abs(f.level_l1 - target);
  return {f.sup_norm <= 1.0 && err <= kProp2Tol,
          fmt("sup=%.6f  l1=%.12f target=%.12f  tries=%d", f.sup_norm, f.level_l1, target, f.tries)};
}

Outcome realrooted() {
  const RealRootedSweep s = realrooted_sweep(10000, 12, 8080);
  const bool pass = s.suffix_violations == 0 && s.log_concavity_failures == 0 &&
                    s.unimodality_failures == 0 && s.sign_pattern_failures == 0 && s.worst_margin >= -kRootTol;
  return {pass, fmt("violations=%zu log-concave fails=%zu unimodal fails=%zu worst margin=%.3g",
                    s.suffix_violations, s.log_concavity_failures, s.unimodality_failures, s.worst_margin)};
}

Outcome restriction() {
  const int n = 12;
  const int l = 3;
  Rng rng(9090);
  std::vector<double> coeffs(std::size_t{1} << n, 0.0);
  double total = 0.0;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (subset_size(m) == l) {
      coeffs[m] = rng.normal();
      total += std::abs(coeffs[m]);
    }
  }
  for (double& c : coeffs) c /= total;
  const Spectrum f(n, std::move(coeffs));
  const int trials = 100000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double v = level_l1(random_restriction(f, l, derive_seed(9091, t)).result, l - 1);
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / trials;
  const double se = std::sqrt(std::max(0.0, sum_sq / trials - mean * mean) / trials);
  const double bound = std::exp(-1.0) * std::sqrt(l / (2.0 * n)) * level_l1(f, l);
  return {mean >= bound - kStdErrors * se, fmt("mean=%.6f  bound=%.6f  se=%.2g", mean, bound, se)};
}

Outcome learning() {
  int good = 0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    const BoundedFunction f = random_bounded_function(10, 2, derive_seed(5000, t));
    LearnConfig cfg;
    cfg.n = 10;
    cfg.d = 2;
    cfg.epsilon = 0.1;
    cfg.delta = 0.1;
    cfg.samples_override = 50000;
    cfg.seed = derive_seed(5001, t);
    TableOracle oracle(f.table, cfg.seed);
    good += model_error(f.spectrum, learn(oracle, cfg)) <= cfg.epsilon;
  }

  const std::uint64_t samples = 2000;
  const double lambdas[] = {0.02, 0.05, 0.1};
  std::size_t exceed[3] = {0, 0, 0};
  std::size_t total = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const BoundedFunction f = random_bounded_function(8, 2, derive_seed(5100, seed));
    TableOracle oracle(f.table, derive_seed(5101, seed));
    for (const auto& e : estimate_coefficients(oracle, samples, 2)) {
      const double dev = std::abs(f.spectrum[e.subset] - e.alpha);
      for (int i = 0; i < 3; ++i) exceed[i] += dev >= lambdas[i];
      ++total;
    }
  }
  bool chernoff = true;
  std::string detail = fmt("success %d/50", good);
  for (int i = 0; i < 3; ++i) {
    const double freq = static_cast<double>(exceed[i]) / static_cast<double>(total);
    const double bound = 2.0 * std::exp(-lambdas[i] * lambdas[i] * samples / 2.0);
    chernoff = chernoff && freq <= bound + kChernoffSlack;
    detail += fmt("  lambda=%.2f freq=%.4f bound=%.4f", lambdas[i], freq, bound);
  }
  return {good >= static_cast<int>(std::ceil(kLearnRate * 50)) && chernoff, detail};
}

Outcome pisier() {
  int failures = 0;
  int runs = 0;
  double worst = 0.0;
  for (int m : {2, 8}) {
    for (int l = 1; l <= 3; ++l) {
      for (const char* p : {"1", "2", "inf"}) {
        const NormSpec norm = parse_norm(p);
        for (int t = 0; t < 50; ++t) {
          const PisierReport r =
              pisier_check(random_vector_function(10, m, derive_seed(6000, static_cast<std::uint64_t>(runs))), l, norm);
          ++runs;
          failures += !(r.ratio <= pisier_bound(m, l));
          worst = std::max(worst, r.ratio / r.bound);
        }
      }
    }
  }
  return {failures == 0, fmt("%d runs, %d failures, max ratio/bound=%.4g", runs, failures, worst)};
}

Outcome transforms() {
  double involution = 0.0;
  double parseval = 0.0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(t % 12);
    const auto values = oracle::random_values(std::size_t{1} << n, derive_seed(7000, t));
    const PointTable f(n, values);
    const Spectrum s = analyze(f);
    involution = std::max(involution, oracle::max_abs_diff(synthesize(s).values(), f.values()));
    double energy = 0.0;
    double spectral = 0.0;
    for (double v : values) energy += v * v;
    for (double c : s.coeffs()) spectral += c * c;
    energy /= static_cast<double>(values.size());
    parseval = std::max(parseval, std::abs(energy - spectral) / (1.0 + spectral));
  }
  double naive = 0.0;
  for (int n = 1; n <= 10; ++n) {
    const auto values = oracle::random_values(std::size_t{1} << n, derive_seed(7100, n));
    naive = std::max(naive, oracle::max_abs_diff(analyze(PointTable(n, values)).coeffs(),
                                                 oracle::naive_analyze(values, n)));
  }
  double conv = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const auto f = oracle::random_values(std::size_t{1} << n, derive_seed(7200, n));
    const auto g = oracle::random_values(std::size_t{1} << n, derive_seed(7300, n));
    const PointTable fast = synthesize(convolve(analyze(PointTable(n, f)), analyze(PointTable(n, g))));
    conv = std::max(conv, oracle::max_abs_diff(fast.values(), oracle::point_convolve(f, g, n)));
  }
  const bool pass = involution <= kTransformTol && parseval <= kTransformTol && naive <= kTransformTol &&
                    conv <= kTransformTol;
  return {pass, fmt("involution=%.2g parseval=%.2g naive=%.2g convolution=%.2g", involution, parseval, naive, conv)};
}

}  // namespace

int main() {
  std::optional<Corpus> corpus;
  auto shared_corpus = [&]() -> const Corpus& {
    if (!corpus) corpus = level_corpus();
    return *corpus;
  };
  const std::vector<Criterion> criteria{
      {1, "filter identities", 5.0, filter_identities},
      {2, "cos-moment table", std::nullopt, cos_moment_table},
      {3, "proxy spectra", std::nullopt, proxy_spectra},
      {4, "level sup-norm bound", std::nullopt, [&] { return theorem1(shared_corpus()); }},
      {5, "level l1 bound", std::nullopt, [&] { return theorem2(shared_corpus()); }},
      {6, "scaled Chebyshev at n=10^4", 10.0, prop1_at_scale},
      {7, "random-sign homogeneous", std::nullopt, prop2},
      {8, "positive-rooted suffix signs", std::nullopt, realrooted},
      {9, "random restriction", std::nullopt, restriction},
      {10, "low-degree learning", 60.0, learning},
      {11, "vector level projection", std::nullopt, pisier},
      {12, "core transforms", std::nullopt, transforms},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = fmt("%.2fs", seconds);
    if (c.time_limit_seconds) {
      timing += fmt(" (limit %.0fs)", *c.time_limit_seconds);
      o.pass = o.pass && seconds < *c.time_limit_seconds;
    }
    failures += !o.pass;
    std::printf("%s %2d %-30s %s [%s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(),
                timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
