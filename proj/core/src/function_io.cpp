#include "cube_spectra/function_io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "cube_spectra/errors.hpp"

namespace cube::io {
namespace {

std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line.substr(first));
  }
  return lines;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream stream(line);
  std::vector<std::string> out;
  std::string tok;
  while (stream >> tok) out.push_back(tok);
  return out;
}

double parse_double(const std::string& tok, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size() || !std::isfinite(v)) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw FormatError("line " + std::to_string(line_no) + ": expected a finite number, got '" + tok +
                      "'");
  }
}

Mask parse_hex_mask(std::string tok, std::size_t line_no) {
  if (tok.size() > 2 && tok[0] == '0' && (tok[1] == 'x' || tok[1] == 'X')) tok = tok.substr(2);
  Mask value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value, 16);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
    throw FormatError("line " + std::to_string(line_no) + ": expected a hex bitmask, got '" + tok +
                      "'");
  }
  return value;
}

bool is_decimal_integer(const std::string& tok) {
  if (tok.empty()) return false;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return in;
}

}  // namespace

FunctionData read_function(std::istream& in, std::optional<int> n) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw FormatError("function file is empty");

  const auto head = tokens(lines.front());
  if (head.size() == 1 && is_decimal_integer(head.front())) {
    const int declared = std::stoi(head.front());
    if (n && *n != declared) {
      throw FormatError("point table declares n = " + std::to_string(declared) + " but " +
                        std::to_string(*n) + " was requested");
    }
    check_dense(declared);
    std::vector<double> values;
    values.reserve(std::size_t{1} << declared);
    for (std::size_t i = 1; i < lines.size(); ++i) {
      for (const auto& tok : tokens(lines[i])) values.push_back(parse_double(tok, i + 1));
    }
    if (values.size() != (std::size_t{1} << declared)) {
      throw FormatError("point table for n = " + std::to_string(declared) + " needs " +
                        std::to_string(std::size_t{1} << declared) + " values, found " +
                        std::to_string(values.size()));
    }
    return PointTable(declared, std::move(values));
  }

  std::vector<std::pair<Mask, double>> entries;
  Mask all_bits = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto toks = tokens(lines[i]);
    if (toks.size() != 2) {
      throw FormatError("line " + std::to_string(i + 1) +
                        ": sparse spectrum lines need `<mask-hex> <coefficient>`");
    }
    const Mask subset = parse_hex_mask(toks[0], i + 1);
    entries.emplace_back(subset, parse_double(toks[1], i + 1));
    all_bits |= subset;
  }
  const int inferred = std::max(1, static_cast<int>(std::bit_width(all_bits)));
  const int vars = n.value_or(inferred);
  if (vars < inferred) {
    throw FormatError("sparse spectrum uses variable " + std::to_string(inferred) +
                      " but n = " + std::to_string(vars));
  }
  return Spectrum::from_sparse(vars, entries);
}

FunctionData load_function(const std::string& path, std::optional<int> n) {
  auto in = open_or_throw(path);
  return read_function(in, n);
}

Spectrum as_spectrum(const FunctionData& data) {
  if (const auto* table = std::get_if<PointTable>(&data)) return analyze(*table);
  return std::get<Spectrum>(data);
}

PointTable as_point_table(const FunctionData& data) {
  if (const auto* s = std::get_if<Spectrum>(&data)) return synthesize(*s);
  return std::get<PointTable>(data);
}

std::vector<Sample> read_samples(std::istream& in) {
  const auto lines = content_lines(in);
  std::vector<Sample> samples;
  samples.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto toks = tokens(lines[i]);
    if (toks.size() != 2) {
      throw FormatError("line " + std::to_string(i + 1) + ": sample lines need `<x-hex> <value>`");
    }
    samples.push_back({parse_hex_mask(toks[0], i + 1), parse_double(toks[1], i + 1)});
  }
  return samples;
}

std::vector<Sample> load_samples(const std::string& path) {
  auto in = open_or_throw(path);
  return read_samples(in);
}

void write_point_table(std::ostream& out, const PointTable& f) {
  out << f.n() << '\n' << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (double v : f.values()) out << v << '\n';
}

void write_sparse_spectrum(std::ostream& out, const Spectrum& s, double drop_below) {
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t m = 0; m < s.size(); ++m) {
    if (std::abs(s[m]) > drop_below) out << std::hex << m << std::dec << ' ' << s[m] << '\n';
  }
}

}  // namespace cube::io
