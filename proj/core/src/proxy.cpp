#include "cube_spectra/proxy.hpp"

#include <cmath>
#include <string>

#include "cube_spectra/chebyshev.hpp"
#include "cube_spectra/errors.hpp"
#include "cube_spectra/filter.hpp"
#include "cube_spectra/rng.hpp"

namespace cube {

std::string_view to_string(ProxyVariant variant) {
  return variant == ProxyVariant::kDegreeBound ? "degree-bound" : "pisier";
}

ProxyVariant parse_proxy_variant(std::string_view text) {
  if (text == "degree-bound" || text == "degree") return ProxyVariant::kDegreeBound;
  if (text == "pisier") return ProxyVariant::kPisier;
  throw ArgumentError("unknown proxy variant '" + std::string(text) + "'");
}

LevelProfile proxy_profile(int n, int d, int l, ProxyVariant variant) {
  require(n >= 1, "proxy needs n >= 1");
  require(d >= 1 && d <= kMaxFilterDegree, "proxy degree must lie in [1, 30]");
  require(l >= 0 && l <= d, "proxy level must lie in [0, d]");

  const int filter_d = (d - l) % 2 == 0 ? d : d - 1;
  std::vector<double> moments(static_cast<std::size_t>(n) + 1, 0.0);
  if (filter_d == 0) {
    // T_0 = 1: the constant proxy already isolates level 0 below degree 1.
    moments[0] = 1.0;
  } else {
    const ChebFilter phi = build_filter(filter_d, l);
    for (int k = 0; k <= n; ++k) moments[k] = filter_moment(phi, k);
  }
  if (variant == ProxyVariant::kPisier) {
    for (int k = 0; k <= n; ++k) moments[k] *= std::ldexp(1.0, l - k);
  }
  return {n, d, filter_d, l, variant, std::move(moments)};
}

Spectrum expand_proxy(const LevelProfile& profile) {
  check_dense(profile.n);
  std::vector<double> coeffs(std::size_t{1} << profile.n);
  for (std::size_t s = 0; s < coeffs.size(); ++s) coeffs[s] = profile.level_coeffs[subset_size(s)];
  return Spectrum(profile.n, std::move(coeffs));
}

Spectrum extract_level(const Spectrum& f, int d, int l) {
  const int degree = f.degree();
  if (degree > d) {
    throw ContractError("extract_level: degree(f) = " + std::to_string(degree) + " exceeds d = " +
                        std::to_string(d));
  }
  const LevelProfile profile = proxy_profile(f.n(), d, l, ProxyVariant::kDegreeBound);
  return convolve(f, expand_proxy(profile));
}

ProxyL1 proxy_l1(const LevelProfile& profile) {
  const PointTable values = synthesize(expand_proxy(profile));
  double total = 0.0;
  for (double v : values.values()) total += std::abs(v);
  const double exact = total / static_cast<double>(values.size());
  double ceiling = std::abs(cheb_coefficient(profile.filter_d, profile.l));
  if (profile.variant == ProxyVariant::kPisier) ceiling *= std::ldexp(1.0, profile.l);
  return {exact, ceiling};
}

BoundedFunction random_bounded_function(int n, int d, std::uint64_t seed) {
  check_dense(n);
  require(d >= 0 && d <= n, "random_bounded_function needs 0 <= d <= n");
  Rng rng(seed);
  std::vector<double> coeffs(std::size_t{1} << n, 0.0);
  for (std::size_t s = 0; s < coeffs.size(); ++s) {
    if (subset_size(s) <= d) coeffs[s] = rng.normal();
  }
  Spectrum raw(n, std::move(coeffs));
  const PointTable table = synthesize(raw);
  const double peak = sup_norm(table);
  if (peak == 0.0) throw ContractError("random function vanished identically");
  std::vector<double> scaled(raw.coeffs().begin(), raw.coeffs().end());
  for (double& c : scaled) c /= peak;
  std::vector<double> values(table.values().begin(), table.values().end());
  for (double& v : values) v /= peak;
  return {Spectrum(n, std::move(scaled)), PointTable(n, std::move(values))};
}

}  // namespace cube
