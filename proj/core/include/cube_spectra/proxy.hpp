#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cube_spectra/hypercube.hpp"

namespace cube {

enum class ProxyVariant {
  kDegreeBound,  // P(x) = E[phi(theta) prod_j (1 + x_j cos theta)]
  kPisier,       // P(x) = 2^l E[phi(theta) prod_j (1 + x_j cos(theta) / 2)]
};

std::string_view to_string(ProxyVariant variant);
ProxyVariant parse_proxy_variant(std::string_view text);

/// A symmetric proxy stored by level: P^(S) = level_coeffs[|S|].
struct LevelProfile {
  int n;
  int d;         // requested degree
  int filter_d;  // degree of the filter actually used (d, or d - 1 on parity mismatch)
  int l;
  ProxyVariant variant;
  std::vector<double> level_coeffs;  // size n + 1
};

/// Level coefficients m_k = E[phi cos^k] (degree-bound) or 2^{l-k} E[phi cos^k]
/// (Pisier) for k = 0..n. Requires 1 <= d <= 30, 0 <= l <= d, n >= 1.
LevelProfile proxy_profile(int n, int d, int l, ProxyVariant variant);

/// Dense spectrum with coeffs[S] = m_{|S|}.
Spectrum expand_proxy(const LevelProfile& profile);

/// f_l computed as f * P with the degree-bound proxy. Throws ContractError
/// when degree(f) > d.
Spectrum extract_level(const Spectrum& f, int d, int l);

struct ProxyL1 {
  double exact;    // E|P(Z)| by enumerating all 2^n points
  double ceiling;  // |C(filter_d, l)|, times 2^l for the Pisier variant
};

ProxyL1 proxy_l1(const LevelProfile& profile);

/// Random bounded degree-d function: i.i.d. standard normal coefficients on
/// levels <= d (drawn in increasing mask order), synthesized and divided by
/// the sup norm so that max |f| = 1.
struct BoundedFunction {
  Spectrum spectrum;
  PointTable table;
};

BoundedFunction random_bounded_function(int n, int d, std::uint64_t seed);

}  // namespace cube
