#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cube_spectra/exact.hpp"
#include "cube_spectra/hypercube.hpp"

namespace cube {

/// f(x) = F(x_1 + ... + x_n), stored by weight: profile[w] = F(n - 2w) where
/// w counts the coordinates equal to -1.
class SymmetricFunction {
 public:
  SymmetricFunction(long n, std::vector<double> profile);

  long n() const { return n_; }
  const std::vector<double>& profile() const { return profile_; }
  double at_sum(long s) const;  // F(s), s in {-n, -n+2, ..., n}

  PointTable to_point_table() const;  // dense; n <= dense cap

 private:
  long n_;
  std::vector<double> profile_;
};

/// F(s) = T_d(s / n).
SymmetricFunction scaled_chebyshev_function(long n, int d);

/// K_l(w) = sum_i (-1)^i binom(l, i) binom(n - l, w - i) for w = 0..n, so that
/// f^(S) = 2^{-n} sum_w K_l(w) profile[w] for any |S| = l.
std::vector<BigInt> krawtchouk_row(long n, long l);

/// f^(S) for any |S| = l, by an exact sum over weights. Each profile value is
/// taken as the exact dyadic rational its double represents.
double symmetric_level_coefficient(const SymmetricFunction& f, long l);

/// h^_j(S) for |S| = l and h_j(x) = (x_1 + ... + x_n)^j, computed exactly as the
/// number of length-j words over [n] whose odd-multiplicity letters form S.
BigInt power_sum_level_coefficient_exact(long n, int j, long l);
double power_sum_level_coefficient(long n, int j, long l);

/// Level-l coefficient of T((x_1 + ... + x_n)/n) for an integer-coefficient T,
/// exactly, returned as a double. Cost depends on deg(T) and log n only.
double polynomial_of_mean_level_coefficient(long n, const std::vector<BigInt>& poly, long l);

struct Prop1Report {
  long n;
  int d;
  int l;
  double coefficient;  // level-l Fourier coefficient of T_d(mean)
  double lhs;          // |binom(n, l) * coefficient| = |f_l(1^n)|
  double rhs;          // |C(d, l)| - 2 e^d (d+1)! / n
  bool vacuous;        // rhs <= 0
  bool pass;           // lhs >= rhs - 1e-9
  double lemma_rhs;    // |c_l| - 2 (d+1)! max_{j>=l} |c_j| / n
  bool lemma_pass;
  std::optional<double> dense_sup;  // ||f_l||_inf when n is small enough to enumerate
  bool dense_pass = true;           // dense_sup >= lhs - 1e-9 when present
};

/// Requires d = l mod 2, 0 <= l <= d, d >= 1, n >= 1.
Prop1Report prop1_check(long n, int d, int l, int dense_limit = 16);

struct SignedHomogeneous {
  Spectrum spectrum;  // G / (2 sqrt(n binom(n,l)))
  double normalizer;  // 2 sqrt(n binom(n,l))
  double sup_norm;
  double level_l1;
  int tries;
};

/// Draws eps_S uniformly in {-1,+1} for |S| = l (increasing mask order),
/// retrying with sequential sub-seeds until sup |G| <= 2 sqrt(n binom(n,l)).
/// Throws ExhaustedError after max_tries rejected draws.
SignedHomogeneous random_sign_homogeneous(int n, int l, std::uint64_t seed, int max_tries = 64);

}  // namespace cube
