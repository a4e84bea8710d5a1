#pragma once

#include <complex>
#include <span>
#include <vector>

#include "cube_spectra/polynomial.hpp"

namespace cube {

inline constexpr int kMaxFilterDegree = 30;

/// The 2d equally spaced angles t*pi/d, t = 0..2d-1, uniformly weighted.
class AngleGrid {
 public:
  explicit AngleGrid(int d);

  int d() const { return d_; }
  std::size_t size() const { return cosines_.size(); }
  double angle(std::size_t t) const;
  /// cos(theta_t); exactly 0, +1, -1 where the angle is a multiple of pi/2.
  double cosine(std::size_t t) const { return cosines_[t]; }
  std::span<const double> cosines() const { return cosines_; }
  /// cos(d theta_t) = (-1)^t.
  static double cos_d(std::size_t t) { return (t % 2 == 0) ? 1.0 : -1.0; }

 private:
  int d_;
  std::vector<double> cosines_;
};

/// E[e^{i a theta}] over the grid.
std::complex<double> exp_moment(const AngleGrid& grid, long a);

/// E[cos(d theta) cos^k(theta)] over the grid of size 2d.
double cos_moment(int d, int k);

/// Q(z) = prod_{j=0}^{d} (z - cos(j pi / d)), expanded as z^[d even] q(z^2) so
/// that the coefficients of the wrong parity are exactly zero.
RealPolynomial node_polynomial(int d);

/// psi(z) = sum_{j > l} c_j z^{j-l-1}, by coefficient shift. Throws ParityError
/// unless c_l vanishes (relative to max |c_j|), which is what the filter's
/// top moment relies on.
RealPolynomial shifted_suffix(const RealPolynomial& q, int l);

/// Filter phi(theta_t) = 2^{d-1} cos(d theta_t) psi(cos theta_t).
class ChebFilter {
 public:
  ChebFilter(int d, int l, std::vector<double> values);

  int d() const { return d_; }
  int l() const { return l_; }
  std::span<const double> values() const { return values_; }
  /// (1/2d) sum_t |phi(theta_t)|
  double abs_mean() const;

 private:
  int d_;
  int l_;
  std::vector<double> values_;
};

/// Requires d >= 1, 0 <= l <= d, d = l mod 2, d <= kMaxFilterDegree.
ChebFilter build_filter(int d, int l);

/// (1/2d) sum_t phi(theta_t) cos^k(theta_t).
double filter_moment(const ChebFilter& phi, int k);

std::vector<double> filter_moments(const ChebFilter& phi, int max_k);

/// True when psi(cos theta_t) has one sign over all grid points where it is
/// nonzero, and phi's sign tracks cos(d theta) with one global orientation.
bool filter_sign_consistent(const ChebFilter& phi);

}  // namespace cube
