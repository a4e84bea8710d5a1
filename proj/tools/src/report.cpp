#include "cube_spectra/cli/report.hpp"

#include <algorithm>
#include <ostream>

#include "cube_spectra/errors.hpp"

namespace cube::cli {

Format parse_format(std::string_view text) {
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  if (text == "table") return Format::kTable;
  throw ArgumentError("unknown format '" + std::string(text) + "'");
}

Report::Report(std::string command, std::vector<std::string> argv)
    : command_(std::move(command)), argv_(std::move(argv)) {}

Json Report::to_json() const {
  Json out = Json::object();
  out["command"] = command_;
  out["argv"] = argv_;
  out["params"] = params_;
  if (seed_) out["seed"] = *seed_;
  out["records"] = records_;
  Json summary = summary_;
  summary["pass"] = pass_;
  out["summary"] = std::move(summary);
  if (wall_seconds_) out["timing"] = Json{{"wall_seconds", *wall_seconds_}};
  return out;
}

std::string cell_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "";
  if (value.is_array()) {
    std::string joined;
    for (const auto& item : value) {
      if (!joined.empty()) joined += ' ';
      joined += cell_text(item);
    }
    return joined;
  }
  return value.dump();
}

namespace {

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::vector<std::string> record_columns(const Json& records) {
  std::vector<std::string> columns;
  for (const auto& record : records) {
    for (const auto& item : record.items()) {
      if (std::find(columns.begin(), columns.end(), item.key()) == columns.end()) {
        columns.push_back(item.key());
      }
    }
  }
  return columns;
}

// Nested objects become dotted keys.
std::vector<std::pair<std::string, std::string>> flatten(const Json& object, const std::string& prefix = "") {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& item : object.items()) {
    const std::string key = prefix.empty() ? item.key() : prefix + "." + item.key();
    if (item.value().is_object()) {
      for (auto& inner : flatten(item.value(), key)) out.push_back(std::move(inner));
    } else {
      out.emplace_back(key, cell_text(item.value()));
    }
  }
  return out;
}

std::string field(const Json& record, const std::string& key) {
  return record.contains(key) ? cell_text(record.at(key)) : std::string();
}

}  // namespace

void Report::write(std::ostream& out, Format format) const {
  switch (format) {
    case Format::kJson:
      out << to_json().dump(2) << '\n';
      break;
    case Format::kCsv:
      write_csv(out);
      break;
    case Format::kTable:
      write_table(out);
      break;
  }
}

void Report::write_csv(std::ostream& out) const {
  const Json full = to_json();
  out << "# command," << csv_escape(command_) << '\n';
  for (const auto& [key, text] : flatten(params_)) out << "# param." << key << ',' << csv_escape(text) << '\n';
  if (seed_) out << "# seed," << *seed_ << '\n';
  const auto columns = record_columns(records_);
  if (!columns.empty()) {
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << csv_escape(columns[c]);
    out << '\n';
    for (const auto& record : records_) {
      for (std::size_t c = 0; c < columns.size(); ++c) {
        out << (c ? "," : "") << csv_escape(field(record, columns[c]));
      }
      out << '\n';
    }
  }
  for (const auto& [key, text] : flatten(full.at("summary"))) {
    out << "# summary." << key << ',' << csv_escape(text) << '\n';
  }
  if (wall_seconds_) out << "# timing.wall_seconds," << *wall_seconds_ << '\n';
}

void Report::write_table(std::ostream& out) const {
  const Json full = to_json();
  out << command_ << '\n';
  for (const auto& [key, text] : flatten(params_)) out << "  " << key << " = " << text << '\n';
  if (seed_) out << "  seed = " << *seed_ << '\n';

  const auto columns = record_columns(records_);
  if (!columns.empty()) {
    std::vector<std::size_t> widths;
    for (const auto& c : columns) widths.push_back(c.size());
    for (const auto& record : records_) {
      for (std::size_t c = 0; c < columns.size(); ++c) {
        widths[c] = std::max(widths[c], field(record, columns[c]).size());
      }
    }
    auto row = [&](auto&& text_of) {
      for (std::size_t c = 0; c < columns.size(); ++c) {
        const std::string text = text_of(c);
        out << (c ? "  " : "") << text;
        if (c + 1 < columns.size()) out << std::string(widths[c] - text.size(), ' ');
      }
      out << '\n';
    };
    out << '\n';
    row([&](std::size_t c) { return columns[c]; });
    row([&](std::size_t c) { return std::string(widths[c], '-'); });
    for (const auto& record : records_) row([&](std::size_t c) { return field(record, columns[c]); });
  }

  out << '\n';
  const auto summary = flatten(full.at("summary"));
  std::size_t key_width = 0;
  for (const auto& entry : summary) key_width = std::max(key_width, entry.first.size());
  for (const auto& [key, text] : summary) {
    out << key << std::string(key_width - key.size(), ' ') << "  " << text << '\n';
  }
  if (wall_seconds_) out << "wall_seconds" << "  " << *wall_seconds_ << '\n';
}

}  // namespace cube::cli
