#include "cube_spectra/filter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cube_spectra/errors.hpp"

namespace cube {
namespace {

// cos(t pi / d) with the quarter-turn points pinned to their exact values.
double grid_cosine(long t, int d) {
  const long period = 2L * d;
  long r = ((t % period) + period) % period;
  if (r == 0) return 1.0;
  if (r == d) return -1.0;
  if (2 * r == d || 2 * r == 3L * d) return 0.0;
  // fold into [0, d] using cos(2pi - x) = cos(x)
  if (r > d) r = period - r;
  // fold into [0, d/2] using cos(pi - x) = -cos(x), keeping argument small
  if (2 * r > d) return -std::cos(std::numbers::pi * static_cast<double>(d - r) / d);
  return std::cos(std::numbers::pi * static_cast<double>(r) / d);
}

double int_pow(double x, int k) {
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

}  // namespace

AngleGrid::AngleGrid(int d) : d_(d) {
  require(d >= 1, "angle grid needs d >= 1");
  cosines_.resize(2 * static_cast<std::size_t>(d));
  for (std::size_t t = 0; t < cosines_.size(); ++t) cosines_[t] = grid_cosine(static_cast<long>(t), d);
}

double AngleGrid::angle(std::size_t t) const {
  return std::numbers::pi * static_cast<double>(t) / d_;
}

std::complex<double> exp_moment(const AngleGrid& grid, long a) {
  const long period = 2L * grid.d();
  const long residue = ((a % period) + period) % period;
  if (residue == 0) return {1.0, 0.0};
  double re = 0.0;
  double im = 0.0;
  for (std::size_t t = 0; t < grid.size(); ++t) {
    // a*t*pi/d reduced modulo 2pi through integer arithmetic
    const long step = (residue * static_cast<long>(t)) % period;
    re += grid_cosine(step, grid.d());
    im += std::sin(std::numbers::pi * static_cast<double>(step) / grid.d());
  }
  const double w = 1.0 / static_cast<double>(grid.size());
  return {re * w, im * w};
}

double cos_moment(int d, int k) {
  require(d >= 1, "cos_moment needs d >= 1");
  require(k >= 0, "cos_moment needs k >= 0");
  const AngleGrid grid(d);
  double sum = 0.0;
  for (std::size_t t = 0; t < grid.size(); ++t) sum += AngleGrid::cos_d(t) * int_pow(grid.cosine(t), k);
  return sum / static_cast<double>(grid.size());
}

RealPolynomial node_polynomial(int d) {
  require(d >= 1, "node polynomial needs d >= 1");
  // q(w) = prod_{j=0}^{floor((d-1)/2)} (w - cos^2(j pi/d))
  std::vector<double> squared_roots;
  for (int j = 0; j <= (d - 1) / 2; ++j) {
    const double c = grid_cosine(j, d);
    squared_roots.push_back(c * c);
  }
  const RealPolynomial q = RealPolynomial::from_roots(squared_roots);
  const int shift = (d % 2 == 0) ? 1 : 0;
  std::vector<double> coeffs(static_cast<std::size_t>(d) + 2, 0.0);
  for (int i = 0; i <= q.degree(); ++i) coeffs[2 * i + shift] = q[i];
  return RealPolynomial(std::move(coeffs));
}

RealPolynomial shifted_suffix(const RealPolynomial& q, int l) {
  require(l >= 0, "suffix index must be non-negative");
  require(l < q.degree(), "suffix index must be below the degree");
  if (std::abs(q[l]) > 1e-12 * q.max_abs_coeff()) {
    throw ParityError("coefficient c_" + std::to_string(l) + " of Q is nonzero; need d = l mod 2");
  }
  std::vector<double> coeffs(q.coeffs().begin() + l + 1, q.coeffs().end());
  return RealPolynomial(std::move(coeffs));
}

ChebFilter::ChebFilter(int d, int l, std::vector<double> values)
    : d_(d), l_(l), values_(std::move(values)) {
  require(values_.size() == 2 * static_cast<std::size_t>(d), "filter needs 2d values");
  for (double v : values_) require(std::isfinite(v), "filter values must be finite");
}

double ChebFilter::abs_mean() const {
  double sum = 0.0;
  for (double v : values_) sum += std::abs(v);
  return sum / static_cast<double>(values_.size());
}

ChebFilter build_filter(int d, int l) {
  require(d >= 1 && d <= kMaxFilterDegree,
          "filter degree must lie in [1, " + std::to_string(kMaxFilterDegree) + "]");
  require(l >= 0 && l <= d, "filter level must lie in [0, d]");
  if ((d - l) % 2 != 0) throw ParityError("filter needs d = l mod 2");

  const RealPolynomial psi = shifted_suffix(node_polynomial(d), l);
  const AngleGrid grid(d);
  const double scale = std::ldexp(1.0, d - 1);
  std::vector<double> values(grid.size());
  for (std::size_t t = 0; t < grid.size(); ++t) {
    values[t] = scale * AngleGrid::cos_d(t) * psi(grid.cosine(t));
  }
  return ChebFilter(d, l, std::move(values));
}

double filter_moment(const ChebFilter& phi, int k) {
  require(k >= 0, "moment order must be non-negative");
  const AngleGrid grid(phi.d());
  double sum = 0.0;
  for (std::size_t t = 0; t < grid.size(); ++t) sum += phi.values()[t] * int_pow(grid.cosine(t), k);
  return sum / static_cast<double>(grid.size());
}

std::vector<double> filter_moments(const ChebFilter& phi, int max_k) {
  std::vector<double> out;
  for (int k = 0; k <= max_k; ++k) out.push_back(filter_moment(phi, k));
  return out;
}

bool filter_sign_consistent(const ChebFilter& phi) {
  double peak = 0.0;
  for (double v : phi.values()) peak = std::max(peak, std::abs(v));
  // values this small are rounding residue of exact zeros
  const double floor = 1e-10 * peak;
  int orientation = 0;
  for (std::size_t t = 0; t < phi.values().size(); ++t) {
    const double v = phi.values()[t];
    if (std::abs(v) <= floor) continue;
    const int s = ((v > 0) == (AngleGrid::cos_d(t) > 0)) ? 1 : -1;
    if (orientation == 0) orientation = s;
    if (s != orientation) return false;
  }
  return true;
}

}  // namespace cube
