#include "cube_spectra/proxy.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "cube_spectra/chebyshev.hpp"
#include "cube_spectra/errors.hpp"
#include "cube_spectra/exact.hpp"
#include "cube_spectra/rng.hpp"
#include "oracles.hpp"

namespace cube {
namespace {

Spectrum random_low_degree(int n, int d, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> coeffs(std::size_t{1} << n, 0.0);
  for (std::size_t s = 0; s < coeffs.size(); ++s) {
    if (subset_size(s) <= d) coeffs[s] = rng.normal();
  }
  return Spectrum(n, std::move(coeffs));
}

TEST(ProxyVariantTest, Parse) {
  EXPECT_EQ(parse_proxy_variant("degree-bound"), ProxyVariant::kDegreeBound);
  EXPECT_EQ(parse_proxy_variant("degree"), ProxyVariant::kDegreeBound);
  EXPECT_EQ(parse_proxy_variant("pisier"), ProxyVariant::kPisier);
  EXPECT_EQ(to_string(ProxyVariant::kPisier), "pisier");
  EXPECT_THROW(parse_proxy_variant("other"), ArgumentError);
}

TEST(ProxyProfileTest, DegreeBoundExample) {
  const LevelProfile p = proxy_profile(6, 2, 2, ProxyVariant::kDegreeBound);
  ASSERT_EQ(p.level_coeffs.size(), 7u);
  EXPECT_EQ(p.filter_d, 2);
  EXPECT_NEAR(p.level_coeffs[2], 1.0, 1e-12);
  EXPECT_NEAR(p.level_coeffs[0], 0.0, 1e-12);
  EXPECT_NEAR(p.level_coeffs[1], 0.0, 1e-12);
  EXPECT_NEAR(p.level_coeffs[3], 0.0, 1e-12);
}

TEST(ProxyProfileTest, PisierExample) {
  const LevelProfile p = proxy_profile(6, 2, 0, ProxyVariant::kPisier);
  EXPECT_NEAR(p.level_coeffs[0], 1.0, 1e-12);
  EXPECT_NEAR(p.level_coeffs[1], 0.0, 1e-12);
  EXPECT_NEAR(p.level_coeffs[2], 0.0, 1e-12);
  EXPECT_NEAR(p.level_coeffs[3], 0.0, 1e-12);
}

TEST(ProxyProfileTest, ParityLowersDegree) {
  const LevelProfile p = proxy_profile(8, 3, 2, ProxyVariant::kDegreeBound);
  EXPECT_EQ(p.d, 3);
  EXPECT_EQ(p.filter_d, 2);
  EXPECT_NEAR(p.level_coeffs[2], 1.0, 1e-12);
  EXPECT_NEAR(p.level_coeffs[3], 0.0, 1e-12);

  const LevelProfile c = proxy_profile(5, 1, 0, ProxyVariant::kDegreeBound);
  EXPECT_EQ(c.filter_d, 0);
  EXPECT_EQ(c.level_coeffs[0], 1.0);
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(c.level_coeffs[k], 0.0);
}

TEST(ProxyProfileTest, Errors) {
  EXPECT_THROW(proxy_profile(6, 2, 3, ProxyVariant::kDegreeBound), ArgumentError);
  EXPECT_THROW(proxy_profile(6, 0, 0, ProxyVariant::kDegreeBound), ArgumentError);
  EXPECT_THROW(proxy_profile(0, 1, 1, ProxyVariant::kDegreeBound), ArgumentError);
  EXPECT_THROW(proxy_profile(6, 31, 1, ProxyVariant::kDegreeBound), ArgumentError);
}

TEST(ProxyProfileTest, InvariantsAndPisierTail) {
  for (ProxyVariant variant : {ProxyVariant::kDegreeBound, ProxyVariant::kPisier}) {
    for (int d = 1; d <= 10; ++d) {
      for (int l = 0; l <= d; ++l) {
        const LevelProfile p = proxy_profile(24, d, l, variant);
        const int fd = p.filter_d;
        const double tol = 1e-8 * std::ldexp(1.0, d);
        const int top = variant == ProxyVariant::kPisier ? fd + 1 : fd;
        for (int k = 0; k <= top; ++k) {
          EXPECT_NEAR(p.level_coeffs[k], k == l ? 1.0 : 0.0, tol);
        }
        if (variant == ProxyVariant::kPisier && fd >= 1) {
          const double ceiling = std::ldexp(std::abs(cheb_coefficient(fd, l)), l - fd);
          for (int k = fd + 1; k <= 24; ++k) EXPECT_LE(std::abs(p.level_coeffs[k]), ceiling + 1e-9);
        }
      }
    }
  }
}

TEST(ExpandProxyTest, TrivialProfiles) {
  LevelProfile p{2, 1, 1, 0, ProxyVariant::kDegreeBound, {1.0, 0.0, 0.0}};
  Spectrum s = expand_proxy(p);
  EXPECT_EQ(s[0], 1.0);
  EXPECT_EQ(s[1], 0.0);
  EXPECT_EQ(s[2], 0.0);
  EXPECT_EQ(s[3], 0.0);

  p.level_coeffs = {0.0, 1.0, 0.0};
  s = expand_proxy(p);
  EXPECT_EQ(s[0], 0.0);
  EXPECT_EQ(s[1], 1.0);
  EXPECT_EQ(s[2], 1.0);
  EXPECT_EQ(s[3], 0.0);
}

TEST(ExpandProxyTest, LevelL1Counting) {
  Rng rng(5);
  LevelProfile p{10, 1, 1, 0, ProxyVariant::kDegreeBound, {}};
  for (int k = 0; k <= 10; ++k) p.level_coeffs.push_back(rng.normal());
  const Spectrum s = expand_proxy(p);
  for (int k = 0; k <= 10; ++k) {
    const double expected = to_double(binomial(10, k)) * std::abs(p.level_coeffs[k]);
    EXPECT_NEAR(level_l1(s, k), expected, 1e-12 * expected);
  }
  for (std::size_t m = 0; m < s.size(); ++m) EXPECT_EQ(s[m], p.level_coeffs[std::popcount(m)]);
}

TEST(ExpandProxyTest, Capacity) {
  const LevelProfile p = proxy_profile(40, 2, 2, ProxyVariant::kDegreeBound);
  EXPECT_THROW(expand_proxy(p), CapacityError);
}

TEST(ExtractLevelTest, Characters) {
  const int n = 6;
  const int d = 3;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (subset_size(s) > d) continue;
    const std::pair<Mask, double> entry{s, 1.0};
    const Spectrum chi = Spectrum::from_sparse(n, std::span(&entry, 1));
    for (int l = 0; l <= d; ++l) {
      const Spectrum got = extract_level(chi, d, l);
      for (Mask t = 0; t < got.size(); ++t) {
        const double expected = (t == s && subset_size(s) == l) ? 1.0 : 0.0;
        EXPECT_NEAR(got[t], expected, 1e-9);
      }
    }
  }
}

TEST(ExtractLevelTest, RandomSpectraMatchProjection) {
  for (int trial = 0; trial < 100; ++trial) {
    const Spectrum f = random_low_degree(10, 4, derive_seed(11, trial));
    double l1 = 0.0;
    for (double c : f.coeffs()) l1 += std::abs(c);
    const int l = trial % 5;
    const Spectrum got = extract_level(f, 4, l);
    const Spectrum want = homogeneous_part(f, l);
    EXPECT_LE(oracle::max_abs_diff(got.coeffs(), want.coeffs()), 1e-9 * l1);
  }
}

TEST(ExtractLevelTest, DegreeContract) {
  const Spectrum f = random_low_degree(6, 4, 3);
  EXPECT_THROW(extract_level(f, 3, 1), ContractError);
}

TEST(ProxyL1Test, Examples) {
  const ProxyL1 db = proxy_l1(proxy_profile(8, 1, 1, ProxyVariant::kDegreeBound));
  EXPECT_EQ(db.ceiling, 1.0);
  EXPECT_LE(db.exact, 1.0 + 1e-9);

  const ProxyL1 pi = proxy_l1(proxy_profile(8, 1, 1, ProxyVariant::kPisier));
  EXPECT_EQ(pi.ceiling, 2.0);
  EXPECT_LE(pi.exact, 2.0 + 1e-9);

  const LevelProfile constant{8, 1, 0, 0, ProxyVariant::kDegreeBound, std::vector<double>(9, 0.0)};
  LevelProfile one = constant;
  one.level_coeffs[0] = 1.0;
  EXPECT_EQ(proxy_l1(one).exact, 1.0);
}

TEST(ProxyL1Test, BelowCeiling) {
  for (ProxyVariant variant : {ProxyVariant::kDegreeBound, ProxyVariant::kPisier}) {
    for (int d = 1; d <= 6; ++d) {
      for (int l = 0; l <= d; ++l) {
        const ProxyL1 r = proxy_l1(proxy_profile(12, d, l, variant));
        EXPECT_LE(r.exact, r.ceiling + 1e-9 * std::ldexp(1.0, d)) << d << "," << l;
      }
    }
  }
}

TEST(ProxyInvariantTest, Symmetry) {
  for (ProxyVariant variant : {ProxyVariant::kDegreeBound, ProxyVariant::kPisier}) {
    const LevelProfile p = proxy_profile(10, 5, 3, variant);
    const Spectrum s = expand_proxy(p);
    std::vector<double> seen(11, std::nan(""));
    for (Mask m = 0; m < s.size(); ++m) {
      const int k = subset_size(m);
      if (std::isnan(seen[k])) seen[k] = s[m];
      EXPECT_EQ(s[m], seen[k]);
    }
  }
}

TEST(RandomBoundedFunctionTest, Normalized) {
  const BoundedFunction f = random_bounded_function(8, 3, 42);
  EXPECT_NEAR(sup_norm(f.table), 1.0, 1e-15);
  EXPECT_LE(f.spectrum.degree(), 3);
  const BoundedFunction g = random_bounded_function(8, 3, 42);
  EXPECT_EQ(oracle::max_abs_diff(f.table.values(), g.table.values()), 0.0);
  EXPECT_LE(oracle::max_abs_diff(analyze(f.table).coeffs(), f.spectrum.coeffs()), 1e-12);
}

TEST(ProxyInvariantTest, LevelBoundsOnRandomCorpus) {
  const int n = 12;
  for (int d = 1; d <= 5; ++d) {
    for (int trial = 0; trial < 100; ++trial) {
      const BoundedFunction f = random_bounded_function(n, d, derive_seed(1000 + d, trial));
      for (int l = 0; l <= d; ++l) {
        const Spectrum fl = homogeneous_part(f.spectrum, l);
        EXPECT_LE(sup_norm(synthesize(fl)), theorem1_bound(d, l) * (1 + 1e-9));
        if (l >= 1) EXPECT_LE(level_l1(f.spectrum, l), theorem2_bound(n, d, l));
      }
    }
  }
}

}  // namespace
}  // namespace cube
