#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cube_spectra/hypercube.hpp"

namespace cube::io {

// Text formats:
//   point table      first token `n`, then 2^n values in point-index order
//   sparse spectrum  lines `<subset-bitmask-hex> <coefficient>`
//   sample records   lines `<x-bitmask-hex> <value>`
// Blank lines and lines starting with '#' are ignored everywhere.

using FunctionData = std::variant<PointTable, Spectrum>;

/// Detects the format from the first content line. For sparse spectra the
/// variable count is `n` when given, otherwise the bit width of the largest mask.
FunctionData read_function(std::istream& in, std::optional<int> n = std::nullopt);
FunctionData load_function(const std::string& path, std::optional<int> n = std::nullopt);

Spectrum as_spectrum(const FunctionData& data);
PointTable as_point_table(const FunctionData& data);

struct Sample {
  Mask point;
  double value;
};

std::vector<Sample> read_samples(std::istream& in);
std::vector<Sample> load_samples(const std::string& path);

void write_point_table(std::ostream& out, const PointTable& f);
/// Writes every coefficient with |c| > drop_below.
void write_sparse_spectrum(std::ostream& out, const Spectrum& s, double drop_below = 0.0);

}  // namespace cube::io
