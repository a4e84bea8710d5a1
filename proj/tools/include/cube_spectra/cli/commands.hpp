#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cube_spectra/cli/report.hpp"

namespace cube::cli {

using Argv = std::vector<std::string>;

struct FilterOptions {
  int d = 1;
  int l = 1;
  std::optional<int> moments;  // highest k reported, default d + 1
};
Report run_filter(const FilterOptions& opt, const Argv& argv);

struct BoundsOptions {
  int n = 12;
  int d = 4;
  int l = 2;
  int trials = 10;
  std::uint64_t seed = 0;
};
Report run_bounds(const BoundsOptions& opt, const Argv& argv);

struct ProxyOptions {
  int n = 8;
  int d = 2;
  int l = 2;
  std::string variant = "degree-bound";
};
Report run_proxy(const ProxyOptions& opt, const Argv& argv);

struct RealRootedOptions {
  std::size_t trials = 10000;
  int max_degree = 12;
  double max_root = 10.0;
  std::uint64_t seed = 0;
};
Report run_realrooted(const RealRootedOptions& opt, const Argv& argv);

struct Prop1Options {
  long n = 10000;
  int d = 2;
  int l = 2;
  int dense_limit = 16;
};
Report run_prop1(const Prop1Options& opt, const Argv& argv);

struct Prop2Options {
  int n = 16;
  int l = 3;
  std::uint64_t seed = 0;
  int max_tries = 64;
};
Report run_prop2(const Prop2Options& opt, const Argv& argv);

struct LearnOptions {
  std::string function_file;
  std::string sample_file;
  std::optional<int> n;
  int d = 2;
  double epsilon = 0.1;
  double delta = 0.1;
  std::optional<std::uint64_t> samples;
  std::uint64_t max_samples = 100000000;
  std::uint64_t seed = 0;
};
Report run_learn(const LearnOptions& opt, const Argv& argv);

struct PisierOptions {
  int n = 10;
  int m = 2;
  int l = 1;
  std::string p = "2";
  int trials = 50;
  std::uint64_t seed = 0;
};
Report run_pisier(const PisierOptions& opt, const Argv& argv);

struct SelftestOptions {
  std::uint64_t seed = 1;
};
Report run_selftest(const SelftestOptions& opt, const Argv& argv);

}  // namespace cube::cli
