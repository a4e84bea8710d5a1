#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace cube::cli {

using Json = nlohmann::ordered_json;

enum class Format { kJson, kCsv, kTable };

Format parse_format(std::string_view text);

/// One experiment run: parameters, per-trial records and a summary. Records
/// keep trial order; wall time is kept apart so the rest is byte-stable.
class Report {
 public:
  Report(std::string command, std::vector<std::string> argv);

  Json& params() { return params_; }
  Json& summary() { return summary_; }
  void add_record(Json record) { records_.push_back(std::move(record)); }
  std::size_t record_count() const { return records_.size(); }

  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void set_pass(bool pass) { pass_ = pass; }
  bool pass() const { return pass_; }
  void set_wall_seconds(double seconds) { wall_seconds_ = seconds; }

  Json to_json() const;
  void write(std::ostream& out, Format format) const;

 private:
  void write_csv(std::ostream& out) const;
  void write_table(std::ostream& out) const;

  std::string command_;
  std::vector<std::string> argv_;
  Json params_ = Json::object();
  Json records_ = Json::array();
  Json summary_ = Json::object();
  std::optional<std::uint64_t> seed_;
  std::optional<double> wall_seconds_;
  bool pass_ = true;
};

/// Scalar cell text: numbers in shortest round-trip form, arrays space-joined.
std::string cell_text(const Json& value);

}  // namespace cube::cli
