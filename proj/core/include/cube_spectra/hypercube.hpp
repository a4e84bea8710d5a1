#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cube {

/// Bitmask over [n]. As a point index, bit j set means x_j = -1 (so index 0
/// is the all-ones point). As a subset index, bit j set means j is in S.
using Mask = std::uint64_t;

inline constexpr int kDefaultDenseCap = 24;
inline constexpr int kMaxDenseCap = 30;

/// Largest n for which dense 2^n tables may be built. Defaults to 24 and can
/// be overridden by the CUBE_SPECTRA_NCAP environment variable (read once) or
/// by set_dense_cap().
int dense_cap();
void set_dense_cap(int cap);

/// Throws CapacityError unless 1 <= n <= dense_cap().
void check_dense(int n);

/// chi_S(x) in {-1, +1}.
inline int character(Mask subset, Mask point) {
  return (std::popcount(subset & point) & 1) != 0 ? -1 : 1;
}

inline int subset_size(Mask subset) { return std::popcount(subset); }

/// Values of f : {-1,1}^n -> R, one per point index.
class PointTable {
 public:
  PointTable(int n, std::vector<double> values);

  static PointTable constant(int n, double value);

  template <typename Fn>
  static PointTable generate(int n, Fn&& fn) {
    check_dense(n);
    std::vector<double> values(std::size_t{1} << n);
    for (std::size_t b = 0; b < values.size(); ++b) values[b] = fn(static_cast<Mask>(b));
    return PointTable(n, std::move(values));
  }

  int n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](Mask point) const { return values_[point]; }

 private:
  int n_;
  std::vector<double> values_;
};

/// Fourier coefficients f^(S) = E[f(X) chi_S(X)], indexed by subset mask.
class Spectrum {
 public:
  Spectrum(int n, std::vector<double> coeffs);

  static Spectrum zero(int n);
  /// Densifies a sparse list of (subset, coefficient) pairs; repeated subsets add.
  static Spectrum from_sparse(int n, std::span<const std::pair<Mask, double>> entries);

  int n() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const double> coeffs() const { return coeffs_; }
  double operator[](Mask subset) const { return coeffs_[subset]; }

  /// Largest |S| with a nonzero coefficient; 0 for the zero spectrum.
  int degree() const;

  /// sum_S f^(S) chi_S(x) at a single point.
  double evaluate(Mask point) const;

 private:
  int n_;
  std::vector<double> coeffs_;
};

/// f : {-1,1}^n -> R^m stored row-major, one row of m values per point.
class VectorPointTable {
 public:
  VectorPointTable(int n, int m, std::vector<double> values);

  static VectorPointTable from_coordinates(std::span<const PointTable> coordinates);

  int n() const { return n_; }
  int m() const { return m_; }
  std::size_t rows() const { return std::size_t{1} << n_; }
  std::span<const double> values() const { return values_; }
  std::span<const double> row(Mask point) const {
    return {values_.data() + point * static_cast<std::size_t>(m_), static_cast<std::size_t>(m_)};
  }
  PointTable coordinate(int j) const;

 private:
  int n_;
  int m_;
  std::vector<double> values_;
};

/// Unnormalized in-place Walsh-Hadamard butterfly; size must be a power of two.
void walsh_hadamard_inplace(std::span<double> data);

Spectrum analyze(const PointTable& f);
PointTable synthesize(const Spectrum& s);

Spectrum homogeneous_part(const Spectrum& s, int level);

/// Spectrum of f*g, i.e. the coefficientwise product.
Spectrum convolve(const Spectrum& f, const Spectrum& g);

VectorPointTable vector_convolve(const VectorPointTable& f, const Spectrum& g);

struct SupNorm {
  double value;
  Mask argmax;  // smallest index attaining the max
};

SupNorm sup_norm_at(const PointTable& f);
double sup_norm(const PointTable& f);

/// sum over |S| = level of |f^(S)|.
double level_l1(const Spectrum& s, int level);

/// One realization of a random restriction of f_level.
///
/// `restricted` is the set R of fixed variables and `signs` the point Z they
/// are fixed to; the result is g = sum_S f^_level(S) chi_{S\R} chi_{S cap R}(Z).
Spectrum restrict_level(const Spectrum& s, int level, Mask restricted, Mask signs);

struct Restriction {
  Mask restricted;
  Mask signs;
  Spectrum result;
};

/// Samples R (each variable with probability 1/level) and Z uniformly from the
/// seed, then applies restrict_level. Requires level >= 2.
Restriction random_restriction(const Spectrum& s, int level, std::uint64_t seed);

}  // namespace cube
