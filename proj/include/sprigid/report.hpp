#pragma once

#include "json.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "sprigid/version.hpp"

namespace sprigid {

using Json = nlohmann::ordered_json;

/// One command's complete output: inputs echoed back, result rows with a
/// uniform key set, and verdict strings of the form "key=value". Exact
/// rationals appear as "p/q" strings, never floats.
struct Report {
  std::string command;
  Json inputs = Json::object();
  std::vector<Json> rows;
  std::vector<std::string> verdicts;
  std::string version = kVersion;
};

inline Json report_to_json(const Report &report) {
  Json j;
  j["command"] = report.command;
  j["inputs"] = report.inputs;
  j["rows"] = report.rows;
  j["verdicts"] = report.verdicts;
  j["version"] = report.version;
  return j;
}

inline Report report_from_json(const Json &j) {
  Report report;
  report.command = j.at("command").get<std::string>();
  report.inputs = j.at("inputs");
  for (const auto &row : j.at("rows")) report.rows.push_back(row);
  for (const auto &v : j.at("verdicts")) report.verdicts.push_back(v.get<std::string>());
  report.version = j.at("version").get<std::string>();
  return report;
}

inline std::string render_json(const Report &report) {
  return report_to_json(report).dump(2) + "\n";
}

inline Report parse_report(const std::string &text) {
  return report_from_json(Json::parse(text));
}

namespace detail {

inline std::string cell_text(const Json &value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "";
  return value.dump();
}

inline std::string csv_escape(const std::string &cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

/// RFC 4180: comma-separated, CRLF line endings, quotes doubled inside
/// quoted cells. Header row from the first row's keys.
inline std::string render_csv(const Report &report) {
  std::string out;
  if (report.rows.empty()) return out;
  bool first = true;
  for (const auto &item : report.rows.front().items()) {
    if (!first) out += ',';
    out += detail::csv_escape(item.key());
    first = false;
  }
  out += "\r\n";
  for (const auto &row : report.rows) {
    first = true;
    for (const auto &item : row.items()) {
      if (!first) out += ',';
      out += detail::csv_escape(detail::cell_text(item.value()));
      first = false;
    }
    out += "\r\n";
  }
  return out;
}

inline std::string render_text(const Report &report) {
  std::string out = "command: " + report.command + "\n";
  for (const auto &item : report.inputs.items())
    out += "input " + item.key() + " = " + detail::cell_text(item.value()) + "\n";
  if (!report.rows.empty()) {
    out += "\n";
    std::vector<std::string> headers;
    std::vector<size_t> widths;
    for (const auto &item : report.rows.front().items()) {
      headers.push_back(item.key());
      widths.push_back(item.key().size());
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto &row : report.rows) {
      std::vector<std::string> line;
      size_t col = 0;
      for (const auto &item : row.items()) {
        if (col >= headers.size() || item.key() != headers[col])
          throw std::logic_error("report rows must share one key set");
        line.push_back(detail::cell_text(item.value()));
        widths[col] = std::max(widths[col], line.back().size());
        ++col;
      }
      if (col != headers.size()) throw std::logic_error("report rows must share one key set");
      cells.push_back(std::move(line));
    }
    auto emit_line = [&](const std::vector<std::string> &line) {
      std::string text;
      for (size_t col = 0; col < line.size(); ++col) {
        text += line[col];
        if (col + 1 < line.size())
          text += std::string(widths[col] - line[col].size() + 2, ' ');
      }
      while (!text.empty() && text.back() == ' ') text.pop_back();
      out += text + "\n";
    };
    emit_line(headers);
    for (const auto &line : cells) emit_line(line);
  }
  if (!report.verdicts.empty()) {
    out += "\n";
    for (const auto &v : report.verdicts) out += "verdict: " + v + "\n";
  }
  out += "\nversion: " + report.version + "\n";
  return out;
}

inline std::string render_report(const Report &report, const std::string &format) {
  if (format == "text") return render_text(report);
  if (format == "json") return render_json(report);
  if (format == "csv") return render_csv(report);
  throw std::invalid_argument("unknown format: " + format);
}

}  // namespace sprigid
