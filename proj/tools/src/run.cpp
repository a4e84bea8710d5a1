#include "cube_spectra/cli/run.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "cube_spectra/cli/commands.hpp"
#include "cube_spectra/errors.hpp"

namespace cube::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chebyshev filters, level bounds and learning on the Boolean cube", "cube-spectra"};
  app.require_subcommand(1);
  std::string format_text = "json";
  bool timing = false;
  app.add_option("--format", format_text, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_flag("--timing", timing, "add wall time to the report");

  std::function<Report()> action;

  FilterOptions filter;
  int filter_moments = -1;
  auto* filter_cmd = app.add_subcommand("filter", "filter values and moments on the angle grid");
  filter_cmd->add_option("--d", filter.d, "filter degree")->required();
  filter_cmd->add_option("--ell", filter.l, "level")->required();
  auto* moments_opt = filter_cmd->add_option("--moments", filter_moments, "highest moment (default d+1)");
  filter_cmd->callback([&] {
    if (moments_opt->count() > 0) filter.moments = filter_moments;
    action = [&] { return run_filter(filter, args); };
  });

  BoundsOptions bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "level bounds on random bounded functions");
  bounds_cmd->add_option("--n", bounds.n)->required();
  bounds_cmd->add_option("--d", bounds.d)->required();
  bounds_cmd->add_option("--ell", bounds.l)->required();
  bounds_cmd->add_option("--trials", bounds.trials)->capture_default_str();
  bounds_cmd->add_option("--seed", bounds.seed)->capture_default_str();
  bounds_cmd->callback([&] { action = [&] { return run_bounds(bounds, args); }; });

  ProxyOptions proxy;
  auto* proxy_cmd = app.add_subcommand("proxy", "level profile and L1 norm of a proxy polynomial");
  proxy_cmd->add_option("--n", proxy.n)->required();
  proxy_cmd->add_option("--d", proxy.d)->required();
  proxy_cmd->add_option("--ell", proxy.l)->required();
  proxy_cmd->add_option("--variant", proxy.variant, "degree-bound or pisier")->capture_default_str();
  proxy_cmd->callback([&] { action = [&] { return run_proxy(proxy, args); }; });

  RealRootedOptions rooted;
  auto* rooted_cmd = app.add_subcommand("realrooted", "suffix-sign sweep over positive-rooted polynomials");
  rooted_cmd->add_option("--trials", rooted.trials)->capture_default_str();
  rooted_cmd->add_option("--max-deg", rooted.max_degree)->capture_default_str();
  rooted_cmd->add_option("--max-root", rooted.max_root)->capture_default_str();
  rooted_cmd->add_option("--seed", rooted.seed)->capture_default_str();
  rooted_cmd->callback([&] { action = [&] { return run_realrooted(rooted, args); }; });

  auto* extremal_cmd = app.add_subcommand("extremal", "sharpness constructions");
  extremal_cmd->require_subcommand(1);
  Prop1Options prop1;
  auto* prop1_cmd = extremal_cmd->add_subcommand("prop1", "scaled Chebyshev of the mean");
  prop1_cmd->add_option("--n", prop1.n)->required();
  prop1_cmd->add_option("--d", prop1.d)->required();
  prop1_cmd->add_option("--ell", prop1.l)->required();
  prop1_cmd->add_option("--dense-limit", prop1.dense_limit)->capture_default_str();
  prop1_cmd->callback([&] { action = [&] { return run_prop1(prop1, args); }; });
  Prop2Options prop2;
  auto* prop2_cmd = extremal_cmd->add_subcommand("prop2", "random-sign homogeneous function");
  prop2_cmd->add_option("--n", prop2.n)->required();
  prop2_cmd->add_option("--ell", prop2.l)->required();
  prop2_cmd->add_option("--seed", prop2.seed)->capture_default_str();
  prop2_cmd->add_option("--max-tries", prop2.max_tries)->capture_default_str();
  prop2_cmd->callback([&] { action = [&] { return run_prop2(prop2, args); }; });

  LearnOptions learn;
  int learn_n = 0;
  std::uint64_t learn_samples = 0;
  auto* learn_cmd = app.add_subcommand("learn", "low-degree learner from random samples");
  learn_cmd->add_option("--fn", learn.function_file, "function file (point table or sparse spectrum)");
  learn_cmd->add_option("--sample-file", learn.sample_file, "recorded samples: <x-hex> <value> per line");
  auto* learn_n_opt = learn_cmd->add_option("--n", learn_n, "variable count for sample files");
  learn_cmd->add_option("--d", learn.d)->required();
  learn_cmd->add_option("--eps", learn.epsilon)->required();
  learn_cmd->add_option("--delta", learn.delta)->required();
  auto* samples_opt = learn_cmd->add_option("--samples", learn_samples, "override the sample count");
  learn_cmd->add_option("--max-samples", learn.max_samples)->capture_default_str();
  learn_cmd->add_option("--seed", learn.seed)->capture_default_str();
  learn_cmd->callback([&] {
    if (learn_n_opt->count() > 0) learn.n = learn_n;
    if (samples_opt->count() > 0) learn.samples = learn_samples;
    action = [&] { return run_learn(learn, args); };
  });

  PisierOptions pisier;
  auto* pisier_cmd = app.add_subcommand("pisier", "level projection of vector-valued functions");
  pisier_cmd->add_option("--n", pisier.n)->required();
  pisier_cmd->add_option("--m", pisier.m)->required();
  pisier_cmd->add_option("--ell", pisier.l)->required();
  pisier_cmd->add_option("--p", pisier.p, "1, 2, ... or inf")->capture_default_str();
  pisier_cmd->add_option("--trials", pisier.trials)->capture_default_str();
  pisier_cmd->add_option("--seed", pisier.seed)->capture_default_str();
  pisier_cmd->callback([&] { action = [&] { return run_pisier(pisier, args); }; });

  SelftestOptions selftest;
  auto* selftest_cmd = app.add_subcommand("selftest", "reduced invariant suite");
  selftest_cmd->add_option("--seed", selftest.seed)->capture_default_str();
  selftest_cmd->callback([&] { action = [&] { return run_selftest(selftest, args); }; });

  for (auto* sub : {filter_cmd, bounds_cmd, proxy_cmd, rooted_cmd, extremal_cmd, prop1_cmd, prop2_cmd,
                    learn_cmd, pisier_cmd, selftest_cmd}) {
    sub->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Report report = action();
    if (timing) {
      report.set_wall_seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    report.write(out, parse_format(format_text));
    return report.pass() ? kExitPass : kExitViolation;
  } catch (const ExhaustedError& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace cube::cli
