#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "cube_spectra/chebyshev.hpp"
#include "cube_spectra/cli/commands.hpp"
#include "cube_spectra/extremal.hpp"
#include "cube_spectra/filter.hpp"
#include "cube_spectra/hypercube.hpp"
#include "cube_spectra/learning.hpp"
#include "cube_spectra/pisier.hpp"
#include "cube_spectra/proxy.hpp"
#include "cube_spectra/realrooted.hpp"
#include "cube_spectra/rng.hpp"

namespace cube::cli {
namespace {

struct Outcome {
  bool pass;
  double margin;  // worst observed value of the checked quantity
};

Outcome check_filter() {
  double worst = 0.0;
  bool pass = true;
  for (int d = 1; d <= 12; ++d) {
    const double tol = 1e-8 * std::ldexp(1.0, d);
    for (int l = d % 2; l <= d; l += 2) {
      const ChebFilter phi = build_filter(d, l);
      for (int k = 0; k <= d + 1; ++k) {
        const double err = std::abs(filter_moment(phi, k) - (k == l ? 1.0 : 0.0));
        worst = std::max(worst, err);
        pass = pass && err <= tol;
      }
      const double err = std::abs(phi.abs_mean() - std::abs(cheb_coefficient(d, l)));
      worst = std::max(worst, err);
      pass = pass && err <= tol && filter_sign_consistent(phi);
    }
  }
  return {pass, worst};
}

Outcome check_cos_moments() {
  double worst = 0.0;
  for (int d = 1; d <= 12; ++d) {
    for (int k = 0; k <= d; ++k) {
      const double expected = k == d ? std::ldexp(1.0, -(d - 1)) : 0.0;
      worst = std::max(worst, std::abs(cos_moment(d, k) - expected));
    }
  }
  return {worst <= 1e-12, worst};
}

Outcome check_transforms(std::uint64_t seed) {
  double worst = 0.0;
  for (int n = 1; n <= 10; ++n) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(n)));
    const PointTable f = PointTable::generate(n, [&](Mask) { return 2.0 * rng.uniform() - 1.0; });
    const Spectrum s = analyze(f);
    const PointTable back = synthesize(s);
    double energy = 0.0;
    double spectral = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      worst = std::max(worst, std::abs(back[i] - f[i]));
      energy += f[i] * f[i];
      spectral += s[i] * s[i];
    }
    worst = std::max(worst, std::abs(energy / static_cast<double>(f.size()) - spectral));
  }
  return {worst <= 1e-10, worst};
}

Outcome check_proxy(std::uint64_t seed) {
  double worst = 0.0;
  bool pass = true;
  for (ProxyVariant variant : {ProxyVariant::kDegreeBound, ProxyVariant::kPisier}) {
    for (int d = 1; d <= 4; ++d) {
      for (int l = 0; l <= d; ++l) {
        const LevelProfile p = proxy_profile(8, d, l, variant);
        for (int k = 0; k <= p.filter_d; ++k) {
          const double err = std::abs(p.level_coeffs[k] - (k == l ? 1.0 : 0.0));
          worst = std::max(worst, err);
          pass = pass && err <= 1e-8 * std::ldexp(1.0, d);
        }
        const ProxyL1 r = proxy_l1(p);
        pass = pass && r.exact <= r.ceiling + 1e-9 * std::ldexp(1.0, d);
      }
    }
  }
  for (std::uint64_t t = 0; t < 10; ++t) {
    const BoundedFunction f = random_bounded_function(8, 3, derive_seed(seed, t));
    const int l = static_cast<int>(t % 4);
    const Spectrum got = extract_level(f.spectrum, 3, l);
    const Spectrum want = homogeneous_part(f.spectrum, l);
    for (std::size_t i = 0; i < got.size(); ++i) worst = std::max(worst, std::abs(got[i] - want[i]));
  }
  return {pass && worst <= 1e-8 * 16, worst};
}

Outcome check_level_bounds(std::uint64_t seed) {
  double worst = 0.0;
  const int n = 8;
  for (int d = 1; d <= 4; ++d) {
    for (std::uint64_t t = 0; t < 10; ++t) {
      const BoundedFunction f = random_bounded_function(n, d, derive_seed(seed, 100 * d + t));
      for (int l = 0; l <= d; ++l) {
        const double sup = sup_norm(synthesize(homogeneous_part(f.spectrum, l)));
        worst = std::max(worst, sup / theorem1_bound(d, l));
        if (l >= 1) worst = std::max(worst, level_l1(f.spectrum, l) / theorem2_bound(n, d, l));
      }
    }
  }
  return {worst <= 1 + 1e-9, worst};
}

Outcome check_prop1() {
  const Prop1Report big = prop1_check(10000, 2, 2);
  const Prop1Report small = prop1_check(12, 2, 2);
  const Spectrum dense = analyze(scaled_chebyshev_function(12, 2).to_point_table());
  const double agreement = std::abs(small.coefficient - dense[0b11]);
  return {big.pass && !big.vacuous && agreement <= 1e-9, big.lhs - big.rhs};
}

Outcome check_prop2(std::uint64_t seed) {
  const SignedHomogeneous f = random_sign_homogeneous(10, 2, seed);
  const double target = 0.5 * std::sqrt(45.0 / 10.0);
  return {f.sup_norm <= 1.0 && std::abs(f.level_l1 - target) <= 1e-9, f.sup_norm};
}

Outcome check_realrooted(std::uint64_t seed) {
  const RealRootedSweep s = realrooted_sweep(1000, 12, seed);
  const bool pass = s.suffix_violations == 0 && s.sign_pattern_failures == 0 &&
                    s.log_concavity_failures == 0 && s.unimodality_failures == 0 &&
                    s.prefix_disagreements == 0;
  return {pass, s.worst_margin};
}

Outcome check_restriction(std::uint64_t seed) {
  const int n = 10;
  const int l = 3;
  Rng rng(seed);
  std::vector<double> coeffs(std::size_t{1} << n, 0.0);
  double total = 0.0;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (subset_size(m) == l) total += std::abs(coeffs[m] = rng.normal());
  }
  for (double& c : coeffs) c /= total;
  const Spectrum f(n, std::move(coeffs));
  const int trials = 4000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double v = level_l1(random_restriction(f, l, derive_seed(seed + 1, t)).result, l - 1);
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / trials;
  const double se = std::sqrt(std::max(0.0, sum_sq / trials - mean * mean) / trials);
  const double bound = std::exp(-1.0) * std::sqrt(l / (2.0 * n));
  return {mean >= bound - 3 * se, mean - bound};
}

Outcome check_learning(std::uint64_t seed) {
  double worst = 0.0;
  for (std::uint64_t t = 0; t < 5; ++t) {
    const BoundedFunction f = random_bounded_function(8, 2, derive_seed(seed, t));
    LearnConfig cfg;
    cfg.n = 8;
    cfg.d = 2;
    cfg.epsilon = 0.1;
    cfg.delta = 0.1;
    cfg.samples_override = 20000;
    cfg.seed = derive_seed(seed + 1, t);
    TableOracle oracle(f.table, cfg.seed);
    worst = std::max(worst, model_error(f.spectrum, learn(oracle, cfg)));
  }
  return {worst <= 0.1, worst};
}

Outcome check_pisier(std::uint64_t seed) {
  double worst = 0.0;
  std::uint64_t k = 0;
  for (int m : {2, 8}) {
    for (int l = 1; l <= 3; ++l) {
      for (const char* p : {"1", "2", "inf"}) {
        for (int t = 0; t < 3; ++t) {
          const PisierReport r = pisier_check(random_vector_function(8, m, derive_seed(seed, k++)), l, parse_norm(p));
          worst = std::max(worst, r.ratio / r.bound);
        }
      }
    }
  }
  return {worst <= 1.0, worst};
}

}  // namespace

Report run_selftest(const SelftestOptions& opt, const Argv& argv) {
  Report report("selftest", argv);
  report.set_seed(opt.seed);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks{
      {"filter_identities", check_filter},
      {"cos_moments", check_cos_moments},
      {"transforms", [&] { return check_transforms(derive_seed(opt.seed, 1)); }},
      {"proxy_spectra", [&] { return check_proxy(derive_seed(opt.seed, 2)); }},
      {"level_bounds", [&] { return check_level_bounds(derive_seed(opt.seed, 3)); }},
      {"prop1", check_prop1},
      {"prop2", [&] { return check_prop2(derive_seed(opt.seed, 4)); }},
      {"realrooted", [&] { return check_realrooted(derive_seed(opt.seed, 5)); }},
      {"restriction", [&] { return check_restriction(derive_seed(opt.seed, 6)); }},
      {"learning", [&] { return check_learning(derive_seed(opt.seed, 7)); }},
      {"pisier", [&] { return check_pisier(derive_seed(opt.seed, 8)); }},
  };
  int failures = 0;
  for (const auto& [name, fn] : checks) {
    const Outcome o = fn();
    failures += !o.pass;
    report.add_record({{"check", name}, {"pass", o.pass}, {"margin", o.margin}});
  }
  report.summary() = {{"checks", checks.size()}, {"failures", failures}};
  report.set_pass(failures == 0);
  return report;
}

}  // namespace cube::cli
