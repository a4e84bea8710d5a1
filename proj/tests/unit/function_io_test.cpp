#include "cube_spectra/function_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "cube_spectra/errors.hpp"

namespace cube {
namespace {

TEST(FunctionIoTest, ReadsPointTable) {
  std::istringstream in("# chi_{1,2}\n2\n1 -1\n-1\n1\n");
  const auto data = io::read_function(in);
  ASSERT_TRUE(std::holds_alternative<PointTable>(data));
  const Spectrum s = io::as_spectrum(data);
  EXPECT_DOUBLE_EQ(s[0b11], 1.0);
}

TEST(FunctionIoTest, ReadsSparseSpectrumAndInfersN) {
  std::istringstream in("0 0.5\n0x5 -0.25\nA 1\n");
  const auto data = io::read_function(in);
  ASSERT_TRUE(std::holds_alternative<Spectrum>(data));
  const Spectrum& s = std::get<Spectrum>(data);
  EXPECT_EQ(s.n(), 4);
  EXPECT_DOUBLE_EQ(s[0], 0.5);
  EXPECT_DOUBLE_EQ(s[5], -0.25);
  EXPECT_DOUBLE_EQ(s[10], 1.0);
}

TEST(FunctionIoTest, ExplicitNWidensSparseSpectrum) {
  std::istringstream in("1 1\n");
  EXPECT_EQ(std::get<Spectrum>(io::read_function(in, 6)).n(), 6);
  std::istringstream too_small("ff 1\n");
  EXPECT_THROW(io::read_function(too_small, 4), FormatError);
}

TEST(FunctionIoTest, RejectsMalformedInput) {
  std::istringstream short_table("2\n1 2 3\n");
  EXPECT_THROW(io::read_function(short_table), FormatError);
  std::istringstream bad_number("1\n1 abc\n");
  EXPECT_THROW(io::read_function(bad_number), FormatError);
  std::istringstream bad_mask("zz 1\n");
  EXPECT_THROW(io::read_function(bad_mask), FormatError);
  std::istringstream empty("\n# nothing\n");
  EXPECT_THROW(io::read_function(empty), FormatError);
}

TEST(FunctionIoTest, WrittenFilesReadBackExactly) {
  const PointTable f(3, {0.1, -0.7, 1.0 / 3.0, 0.0, 0.25, -1.0, 0.5, 2.0 / 7.0});
  std::stringstream table;
  io::write_point_table(table, f);
  const PointTable back = io::as_point_table(io::read_function(table));
  for (Mask b = 0; b < 8; ++b) EXPECT_EQ(back[b], f[b]);

  const Spectrum s = analyze(f);
  std::stringstream sparse;
  io::write_sparse_spectrum(sparse, s);
  const Spectrum s_back = io::as_spectrum(io::read_function(sparse, 3));
  for (Mask m = 0; m < 8; ++m) EXPECT_EQ(s_back[m], s[m]);
}

TEST(FunctionIoTest, ReadsSamples) {
  std::istringstream in("3 0.5\n0x0 -1\n");
  const auto samples = io::read_samples(in);
  ASSERT_EQ(samples.size(), 2u);
  EXPECT_EQ(samples[0].point, 3u);
  EXPECT_DOUBLE_EQ(samples[1].value, -1.0);
  std::istringstream bad("3\n");
  EXPECT_THROW(io::read_samples(bad), FormatError);
}

}  // namespace
}  // namespace cube
