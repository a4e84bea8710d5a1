#include "cube_spectra/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>

#include "cube_spectra/chebyshev.hpp"
#include "cube_spectra/errors.hpp"
#include "cube_spectra/extremal.hpp"
#include "cube_spectra/filter.hpp"
#include "cube_spectra/function_io.hpp"
#include "cube_spectra/hypercube.hpp"
#include "cube_spectra/learning.hpp"
#include "cube_spectra/pisier.hpp"
#include "cube_spectra/proxy.hpp"
#include "cube_spectra/realrooted.hpp"
#include "cube_spectra/rng.hpp"

namespace cube::cli {
namespace {

std::string hex_mask(Mask m) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(m));
  return buf;
}

double finite_or_max(double v) { return std::isfinite(v) ? v : std::numeric_limits<double>::max(); }

}  // namespace

Report run_filter(const FilterOptions& opt, const Argv& argv) {
  const ChebFilter phi = build_filter(opt.d, opt.l);
  const int top = opt.moments.value_or(opt.d + 1);
  require(top >= 0, "--moments must be non-negative");

  Report report("filter", argv);
  report.params() = {{"d", opt.d}, {"ell", opt.l}, {"moments", top}};
  const AngleGrid grid(opt.d);
  for (std::size_t t = 0; t < grid.size(); ++t) {
    report.add_record({{"t", t}, {"theta", grid.angle(t)}, {"cos_theta", grid.cosine(t)},
                       {"value", phi.values()[t]}});
  }

  const std::vector<double> moments = filter_moments(phi, top);
  const double tol = 1e-8 * std::ldexp(1.0, opt.d);
  double moment_error = 0.0;
  for (int k = 0; k <= std::min(top, opt.d + 1); ++k) {
    moment_error = std::max(moment_error, std::abs(moments[k] - (k == opt.l ? 1.0 : 0.0)));
  }
  const double reference = std::abs(cheb_coefficient(opt.d, opt.l));
  const double abs_error = std::abs(phi.abs_mean() - reference);
  const bool sign_ok = filter_sign_consistent(phi);

  Json values = Json::array();
  for (double v : phi.values()) values.push_back(v);
  report.summary() = {{"values", values},
                      {"moments", moments},
                      {"abs_mean", phi.abs_mean()},
                      {"cheb_abs", reference},
                      {"max_moment_error", moment_error},
                      {"abs_mean_error", abs_error},
                      {"tolerance", tol},
                      {"sign_consistent", sign_ok}};
  report.set_pass(moment_error <= tol && abs_error <= tol && sign_ok);
  return report;
}

Report run_bounds(const BoundsOptions& opt, const Argv& argv) {
  require(opt.trials >= 1, "--trials must be at least 1");
  require(opt.d >= 1 && opt.d <= opt.n, "bounds needs 1 <= d <= n");
  require(opt.l >= 0 && opt.l <= opt.d, "bounds needs 0 <= ell <= d");
  check_dense(opt.n);

  Report report("bounds", argv);
  report.params() = {{"n", opt.n}, {"d", opt.d}, {"ell", opt.l}, {"trials", opt.trials}};
  report.set_seed(opt.seed);

  const double t1 = theorem1_bound(opt.d, opt.l);
  const bool has_t2 = opt.l >= 1;
  const double t2 = has_t2 ? theorem2_bound(opt.n, opt.d, opt.l) : 0.0;
  double worst_sup = 0.0;
  double worst_l1 = 0.0;
  int failures = 0;
  for (int trial = 0; trial < opt.trials; ++trial) {
    const BoundedFunction f =
        random_bounded_function(opt.n, opt.d, derive_seed(opt.seed, static_cast<std::uint64_t>(trial)));
    const double sup = sup_norm(synthesize(homogeneous_part(f.spectrum, opt.l)));
    const double l1 = level_l1(f.spectrum, opt.l);
    const bool sup_ok = sup <= t1 * (1 + 1e-9);
    const bool l1_ok = !has_t2 || l1 <= t2;
    failures += !(sup_ok && l1_ok);
    worst_sup = std::max(worst_sup, sup / t1);
    if (has_t2) worst_l1 = std::max(worst_l1, l1 / t2);
    report.add_record({{"trial", trial}, {"sup_norm", sup}, {"level_l1", l1}, {"sup_ok", sup_ok}, {"l1_ok", l1_ok}});
  }
  report.summary() = {{"theorem1_bound", t1},
                      {"theorem2_bound", has_t2 ? Json(finite_or_max(t2)) : Json(nullptr)},
                      {"naive_bound", naive_bound(opt.d, opt.l)},
                      {"max_sup_ratio", worst_sup},
                      {"max_l1_ratio", has_t2 ? Json(worst_l1) : Json(nullptr)},
                      {"failures", failures}};
  report.set_pass(failures == 0);
  return report;
}

Report run_proxy(const ProxyOptions& opt, const Argv& argv) {
  const ProxyVariant variant = parse_proxy_variant(opt.variant);
  const LevelProfile p = proxy_profile(opt.n, opt.d, opt.l, variant);

  Report report("proxy", argv);
  report.params() = {{"n", opt.n}, {"d", opt.d}, {"ell", opt.l}, {"variant", std::string(to_string(variant))}};
  for (int k = 0; k <= opt.n; ++k) report.add_record({{"level", k}, {"coefficient", p.level_coeffs[k]}});

  const double tol = 1e-8 * std::ldexp(1.0, opt.d);
  const int exact_top = std::min(opt.n, variant == ProxyVariant::kPisier ? p.filter_d + 1 : p.filter_d);
  double level_error = 0.0;
  for (int k = 0; k <= exact_top; ++k) {
    level_error = std::max(level_error, std::abs(p.level_coeffs[k] - (k == opt.l ? 1.0 : 0.0)));
  }
  bool pass = level_error <= tol;

  Json tail = nullptr;
  if (variant == ProxyVariant::kPisier && p.filter_d >= 1) {
    const double ceiling = std::ldexp(std::abs(cheb_coefficient(p.filter_d, opt.l)), opt.l - p.filter_d);
    double worst = 0.0;
    for (int k = p.filter_d + 1; k <= opt.n; ++k) worst = std::max(worst, std::abs(p.level_coeffs[k]));
    tail = {{"max", worst}, {"ceiling", ceiling}};
    pass = pass && worst <= ceiling + 1e-9;
  }

  Json l1 = nullptr;
  if (opt.n <= dense_cap()) {
    const ProxyL1 r = proxy_l1(p);
    l1 = {{"exact", r.exact}, {"ceiling", r.ceiling}};
    pass = pass && r.exact <= r.ceiling + 1e-9 * std::ldexp(1.0, opt.d);
  }
  report.summary() = {{"filter_d", p.filter_d}, {"max_level_error", level_error}, {"tolerance", tol},
                      {"pisier_tail", tail}, {"l1", l1}};
  report.set_pass(pass);
  return report;
}

Report run_realrooted(const RealRootedOptions& opt, const Argv& argv) {
  require(opt.trials >= 1, "--trials must be at least 1");
  Report report("realrooted", argv);
  report.params() = {{"trials", opt.trials}, {"max_deg", opt.max_degree}, {"max_root", opt.max_root}};
  report.set_seed(opt.seed);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const RootedPolynomial p = random_rooted_polynomial(opt.max_degree, opt.max_root, derive_seed(opt.seed, t));
    const SuffixSignReport r = suffix_sign_check(p);
    report.add_record({{"trial", t}, {"degree", p.degree()}, {"worst_margin", r.worst_margin},
                       {"violations", r.violations.size()}});
  }
  const RealRootedSweep sweep = realrooted_sweep(opt.trials, opt.max_degree, opt.seed, opt.max_root);
  report.summary() = {{"violations", sweep.suffix_violations},
                      {"worst_margin", sweep.worst_margin},
                      {"sign_pattern_failures", sweep.sign_pattern_failures},
                      {"log_concavity_failures", sweep.log_concavity_failures},
                      {"unimodality_failures", sweep.unimodality_failures},
                      {"prefix_disagreements", sweep.prefix_disagreements}};
  report.set_pass(sweep.suffix_violations == 0 && sweep.sign_pattern_failures == 0 &&
                  sweep.log_concavity_failures == 0 && sweep.unimodality_failures == 0 &&
                  sweep.prefix_disagreements == 0);
  return report;
}

Report run_prop1(const Prop1Options& opt, const Argv& argv) {
  const Prop1Report r = prop1_check(opt.n, opt.d, opt.l, opt.dense_limit);
  Report report("extremal prop1", argv);
  report.params() = {{"n", opt.n}, {"d", opt.d}, {"ell", opt.l}, {"dense_limit", opt.dense_limit}};
  report.add_record({{"coefficient", r.coefficient},
                     {"lhs", r.lhs},
                     {"rhs", r.rhs},
                     {"vacuous", r.vacuous},
                     {"bound_holds", r.pass},
                     {"lemma_rhs", r.lemma_rhs},
                     {"lemma_holds", r.lemma_pass},
                     {"dense_sup", r.dense_sup ? Json(*r.dense_sup) : Json(nullptr)}});
  report.summary() = {{"lhs", r.lhs}, {"rhs", r.rhs}, {"vacuous", r.vacuous}};
  report.set_pass((r.pass || r.vacuous) && r.lemma_pass && r.dense_pass);
  return report;
}

Report run_prop2(const Prop2Options& opt, const Argv& argv) {
  Report report("extremal prop2", argv);
  report.params() = {{"n", opt.n}, {"ell", opt.l}, {"max_tries", opt.max_tries}};
  report.set_seed(opt.seed);
  const SignedHomogeneous f = random_sign_homogeneous(opt.n, opt.l, opt.seed, opt.max_tries);
  const double target = 0.5 * std::sqrt(to_double(binomial(opt.n, opt.l)) / opt.n);
  report.add_record({{"tries", f.tries},
                     {"normalizer", f.normalizer},
                     {"sup_norm", f.sup_norm},
                     {"level_l1", f.level_l1},
                     {"target_l1", target}});
  report.summary() = {{"lhs", f.level_l1}, {"rhs", target}, {"sup_norm", f.sup_norm}};
  report.set_pass(f.sup_norm <= 1.0 && std::abs(f.level_l1 - target) <= 1e-9 * std::max(1.0, target));
  return report;
}

Report run_learn(const LearnOptions& opt, const Argv& argv) {
  const bool from_table = !opt.function_file.empty();
  if (from_table == !opt.sample_file.empty()) {
    throw ArgumentError("learn needs exactly one of --fn and --sample-file");
  }

  std::optional<Spectrum> truth;
  std::unique_ptr<QueryOracle> oracle;
  std::size_t available = 0;
  if (from_table) {
    const PointTable table = io::as_point_table(io::load_function(opt.function_file, opt.n));
    truth = analyze(table);
    oracle = std::make_unique<TableOracle>(table, opt.seed);
  } else {
    if (!opt.n) throw ArgumentError("--sample-file needs --n");
    auto samples = io::load_samples(opt.sample_file);
    available = samples.size();
    oracle = std::make_unique<RecordedOracle>(*opt.n, std::move(samples));
  }

  LearnConfig cfg;
  cfg.n = oracle->n();
  cfg.d = opt.d;
  cfg.epsilon = opt.epsilon;
  cfg.delta = opt.delta;
  cfg.seed = opt.seed;
  cfg.samples_override = opt.samples;
  if (!cfg.samples_override && !from_table) cfg.samples_override = available;
  cfg.validate();
  if (!cfg.samples_override) {
    const std::uint64_t needed = sample_complexity(cfg);
    if (needed > opt.max_samples) {
      throw ArgumentError("sample complexity " + std::to_string(needed) + " exceeds --max-samples " +
                          std::to_string(opt.max_samples) + "; pass --samples");
    }
  }

  const LearnedModel model = learn(*oracle, cfg);
  Report report("learn", argv);
  report.params() = {{"source", from_table ? opt.function_file : opt.sample_file},
                     {"n", cfg.n},
                     {"d", cfg.d},
                     {"eps", cfg.epsilon},
                     {"delta", cfg.delta},
                     {"samples_override", opt.samples ? Json(*opt.samples) : Json(nullptr)}};
  report.set_seed(opt.seed);
  for (const auto& e : model.retained) {
    report.add_record({{"subset", hex_mask(e.subset)}, {"size", subset_size(e.subset)}, {"alpha", e.alpha}});
  }
  report.summary() = {{"samples", model.samples},
                      {"formula_samples", sample_complexity_real(cfg)},
                      {"capacity", capacity(cfg.n, cfg.d)},
                      {"threshold", model.threshold},
                      {"size_cap", model.size_cap},
                      {"capped", model.capped},
                      {"retained", model.retained.size()}};
  if (truth) {
    const double error = model_error(*truth, model);
    report.summary()["model_error"] = error;
    report.set_pass(error <= cfg.epsilon);
  }
  return report;
}

Report run_pisier(const PisierOptions& opt, const Argv& argv) {
  require(opt.trials >= 1, "--trials must be at least 1");
  const NormSpec norm = parse_norm(opt.p);
  Report report("pisier", argv);
  report.params() = {{"n", opt.n}, {"m", opt.m}, {"ell", opt.l}, {"p", norm.name()}, {"trials", opt.trials}};
  report.set_seed(opt.seed);
  double worst = 0.0;
  int failures = 0;
  double bound = pisier_bound(opt.m, opt.l);
  for (int trial = 0; trial < opt.trials; ++trial) {
    const VectorPointTable f =
        random_vector_function(opt.n, opt.m, derive_seed(opt.seed, static_cast<std::uint64_t>(trial)));
    const PisierReport r = pisier_check(f, opt.l, norm);
    worst = std::max(worst, r.ratio);
    failures += !r.pass;
    report.add_record({{"trial", trial}, {"rms_full", r.rms_full}, {"rms_level", r.rms_level}, {"ratio", r.ratio}});
  }
  const int proxy_d = pisier_proxy_degree(opt.m, opt.l);
  report.summary() = {{"bound", bound},
                      {"max_ratio", worst},
                      {"failures", failures},
                      {"proxy_degree", proxy_d},
                      {"proxy_constant", pisier_proxy_constant(opt.m, opt.l, proxy_d)}};
  report.set_pass(failures == 0);
  return report;
}

}  // namespace cube::cli
