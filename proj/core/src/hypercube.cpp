#include "cube_spectra/hypercube.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>

#include "cube_spectra/errors.hpp"
#include "cube_spectra/rng.hpp"

namespace cube {
namespace {

int cap_from_environment() {
  const char* raw = std::getenv("CUBE_SPECTRA_NCAP");
  if (raw == nullptr || *raw == '\0') return kDefaultDenseCap;
  char* end = nullptr;
  const long parsed = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || parsed < 1 || parsed > kMaxDenseCap) {
    throw ArgumentError("CUBE_SPECTRA_NCAP must be an integer in [1, " +
                        std::to_string(kMaxDenseCap) + "], got '" + raw + "'");
  }
  return static_cast<int>(parsed);
}

std::atomic<int>& cap_storage() {
  static std::atomic<int> cap{cap_from_environment()};
  return cap;
}

void check_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) throw ArgumentError(std::string(what) + " contains a non-finite value");
  }
}

void require_same_n(int a, int b) {
  if (a != b) {
    throw ArgumentError("variable count mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

int dense_cap() { return cap_storage().load(); }

void set_dense_cap(int cap) {
  require(cap >= 1 && cap <= kMaxDenseCap, "dense cap must lie in [1, 30]");
  cap_storage().store(cap);
}

void check_dense(int n) {
  if (n < 1) throw ArgumentError("variable count must be at least 1, got " + std::to_string(n));
  if (n > dense_cap()) {
    throw CapacityError("n = " + std::to_string(n) + " exceeds the dense cap " +
                        std::to_string(dense_cap()));
  }
}

PointTable::PointTable(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
  check_dense(n);
  if (values_.size() != (std::size_t{1} << n)) {
    throw ArgumentError("point table for n = " + std::to_string(n) + " needs " +
                        std::to_string(std::size_t{1} << n) + " values, got " +
                        std::to_string(values_.size()));
  }
  check_finite(values_, "point table");
}

PointTable PointTable::constant(int n, double value) {
  check_dense(n);
  return PointTable(n, std::vector<double>(std::size_t{1} << n, value));
}

Spectrum::Spectrum(int n, std::vector<double> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  check_dense(n);
  if (coeffs_.size() != (std::size_t{1} << n)) {
    throw ArgumentError("spectrum for n = " + std::to_string(n) + " needs " +
                        std::to_string(std::size_t{1} << n) + " coefficients, got " +
                        std::to_string(coeffs_.size()));
  }
  check_finite(coeffs_, "spectrum");
}

Spectrum Spectrum::zero(int n) {
  check_dense(n);
  return Spectrum(n, std::vector<double>(std::size_t{1} << n, 0.0));
}

Spectrum Spectrum::from_sparse(int n, std::span<const std::pair<Mask, double>> entries) {
  check_dense(n);
  std::vector<double> coeffs(std::size_t{1} << n, 0.0);
  for (const auto& [subset, value] : entries) {
    if (subset >= coeffs.size()) {
      throw ArgumentError("subset mask " + std::to_string(subset) + " out of range for n = " +
                          std::to_string(n));
    }
    coeffs[subset] += value;
  }
  return Spectrum(n, std::move(coeffs));
}

int Spectrum::degree() const {
  int deg = 0;
  for (std::size_t s = 0; s < coeffs_.size(); ++s) {
    if (coeffs_[s] != 0.0) deg = std::max(deg, subset_size(s));
  }
  return deg;
}

double Spectrum::evaluate(Mask point) const {
  double sum = 0.0;
  for (std::size_t s = 0; s < coeffs_.size(); ++s) {
    if (coeffs_[s] != 0.0) sum += coeffs_[s] * character(s, point);
  }
  return sum;
}

VectorPointTable::VectorPointTable(int n, int m, std::vector<double> values)
    : n_(n), m_(m), values_(std::move(values)) {
  check_dense(n);
  require(m >= 1, "target dimension m must be at least 1");
  if (values_.size() != (std::size_t{1} << n) * static_cast<std::size_t>(m)) {
    throw ArgumentError("vector point table needs 2^n rows of m values");
  }
  check_finite(values_, "vector point table");
}

VectorPointTable VectorPointTable::from_coordinates(std::span<const PointTable> coordinates) {
  require(!coordinates.empty(), "need at least one coordinate");
  const int n = coordinates.front().n();
  const int m = static_cast<int>(coordinates.size());
  const std::size_t rows = std::size_t{1} << n;
  std::vector<double> values(rows * m);
  for (int j = 0; j < m; ++j) {
    require_same_n(n, coordinates[j].n());
    for (std::size_t b = 0; b < rows; ++b) values[b * m + j] = coordinates[j][b];
  }
  return VectorPointTable(n, m, std::move(values));
}

PointTable VectorPointTable::coordinate(int j) const {
  require(j >= 0 && j < m_, "coordinate index out of range");
  std::vector<double> column(rows());
  for (std::size_t b = 0; b < column.size(); ++b) column[b] = values_[b * m_ + j];
  return PointTable(n_, std::move(column));
}

void walsh_hadamard_inplace(std::span<double> data) {
  const std::size_t size = data.size();
  require(size != 0 && std::has_single_bit(size), "Walsh-Hadamard size must be a power of two");
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const double a = data[i];
        const double b = data[i + half];
        data[i] = a + b;
        data[i + half] = a - b;
      }
    }
  }
}

Spectrum analyze(const PointTable& f) {
  std::vector<double> coeffs(f.values().begin(), f.values().end());
  walsh_hadamard_inplace(coeffs);
  const double scale = std::ldexp(1.0, -f.n());
  for (double& c : coeffs) c *= scale;
  return Spectrum(f.n(), std::move(coeffs));
}

PointTable synthesize(const Spectrum& s) {
  std::vector<double> values(s.coeffs().begin(), s.coeffs().end());
  walsh_hadamard_inplace(values);
  return PointTable(s.n(), std::move(values));
}

Spectrum homogeneous_part(const Spectrum& s, int level) {
  if (level < 0 || level > s.n()) {
    throw ArgumentError("level " + std::to_string(level) + " outside [0, " + std::to_string(s.n()) +
                        "]");
  }
  std::vector<double> coeffs(s.size(), 0.0);
  for (std::size_t m = 0; m < s.size(); ++m) {
    if (subset_size(m) == level) coeffs[m] = s[m];
  }
  return Spectrum(s.n(), std::move(coeffs));
}

Spectrum convolve(const Spectrum& f, const Spectrum& g) {
  require_same_n(f.n(), g.n());
  std::vector<double> coeffs(f.size());
  for (std::size_t m = 0; m < f.size(); ++m) coeffs[m] = f[m] * g[m];
  return Spectrum(f.n(), std::move(coeffs));
}

VectorPointTable vector_convolve(const VectorPointTable& f, const Spectrum& g) {
  require_same_n(f.n(), g.n());
  const int m = f.m();
  const std::size_t rows = f.rows();
  std::vector<double> out(rows * m);
  std::vector<double> column(rows);
  const double scale = std::ldexp(1.0, -f.n());
  for (int j = 0; j < m; ++j) {
    for (std::size_t b = 0; b < rows; ++b) column[b] = f.values()[b * m + j];
    walsh_hadamard_inplace(column);
    for (std::size_t s = 0; s < rows; ++s) column[s] *= scale * g[s];
    walsh_hadamard_inplace(column);
    for (std::size_t b = 0; b < rows; ++b) out[b * m + j] = column[b];
  }
  return VectorPointTable(f.n(), m, std::move(out));
}

SupNorm sup_norm_at(const PointTable& f) {
  SupNorm best{0.0, 0};
  for (std::size_t b = 0; b < f.size(); ++b) {
    const double v = std::abs(f[b]);
    if (v > best.value) best = {v, static_cast<Mask>(b)};
  }
  return best;
}

double sup_norm(const PointTable& f) { return sup_norm_at(f).value; }

double level_l1(const Spectrum& s, int level) {
  if (level < 0 || level > s.n()) throw ArgumentError("level out of range");
  double total = 0.0;
  for (std::size_t m = 0; m < s.size(); ++m) {
    if (subset_size(m) == level) total += std::abs(s[m]);
  }
  return total;
}

Spectrum restrict_level(const Spectrum& s, int level, Mask restricted, Mask signs) {
  if (level < 0 || level > s.n()) throw ArgumentError("level out of range");
  const Mask full = (s.n() == 64) ? ~Mask{0} : ((Mask{1} << s.n()) - 1);
  require((restricted & ~full) == 0 && (signs & ~full) == 0, "restriction masks exceed n bits");
  std::vector<double> coeffs(s.size(), 0.0);
  for (std::size_t m = 0; m < s.size(); ++m) {
    if (s[m] == 0.0 || subset_size(m) != level) continue;
    const Mask fixed = m & restricted;
    coeffs[m & ~restricted] += s[m] * character(fixed, signs);
  }
  return Spectrum(s.n(), std::move(coeffs));
}

Restriction random_restriction(const Spectrum& s, int level, std::uint64_t seed) {
  if (level < 2) throw ArgumentError("random restriction needs level >= 2");
  if (level > s.n()) throw ArgumentError("level out of range");
  Rng rng(seed);
  const double p = 1.0 / level;
  Mask restricted = 0;
  for (int j = 0; j < s.n(); ++j) {
    if (rng.bernoulli(p)) restricted |= Mask{1} << j;
  }
  const Mask full = (Mask{1} << s.n()) - 1;
  const Mask signs = rng.bits() & full & restricted;
  return {restricted, signs, restrict_level(s, level, restricted, signs)};
}

}  // namespace cube
