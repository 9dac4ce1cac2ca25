#ifndef TYFAM_REPORT_HPP
#define TYFAM_REPORT_HPP

#include <tyfam/certificate.hpp>
#include <tyfam/enumeration.hpp>
#include <tyfam/graph6.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tyfam {

enum class ReportFormat { graph6, json, csv };

inline ReportFormat report_format_from_string(const std::string& s) {
  if (s == "g6" || s == "graph6")
    return ReportFormat::graph6;
  if (s == "json")
    return ReportFormat::json;
  if (s == "csv")
    return ReportFormat::csv;
  throw std::invalid_argument("unknown report format '" + s + "'");
}

/**
 * Serializes a report. Members appear sorted by (order, certificate), each
 * as the graph6 line of its canonical form; nothing run-dependent is
 * written, so equal reports give byte-identical documents.
 */
inline std::string write_report(const FamilyReport& report, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
  case ReportFormat::graph6:
    for (const auto& c : report.members)
      out << graph6_encode(graph_from_certificate(c)) << '\n';
    break;
  case ReportFormat::csv:
    out << "seed,mode,size,truncated,order,graph6\n";
    for (const auto& c : report.members)
      out << '"' << report.seed_label << "\"," << to_string(report.mode) << ',' << report.size << ','
          << (report.truncated ? "true" : "false") << ',' << c.order() << ','
          << graph6_encode(graph_from_certificate(c)) << '\n';
    break;
  case ReportFormat::json: {
    nlohmann::ordered_json doc;
    doc["seed"] = report.seed_label;
    doc["seed_graph6"] = graph6_encode(graph_from_certificate(report.seed_cert));
    doc["mode"] = to_string(report.mode);
    doc["size"] = report.size;
    doc["truncated"] = report.truncated;
    doc["count"] = report.members.size();
    auto hist = nlohmann::ordered_json::array();
    for (auto [order, count] : report.histogram)
      hist.push_back({{"order", order}, {"count", count}});
    doc["histogram"] = std::move(hist);
    auto members = nlohmann::ordered_json::array();
    for (const auto& c : report.members)
      members.push_back(graph6_encode(graph_from_certificate(c)));
    doc["members"] = std::move(members);
    out << doc.dump(2) << '\n';
    break;
  }
  }
  return out.str();
}

inline void write_report_file(const FamilyReport& report, ReportFormat format,
                              const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot open " + path + " for writing");
  out << write_report(report, format);
  if (!out)
    throw std::runtime_error("write to " + path + " failed");
}

namespace detail {

// Splits one CSV record; double-quoted fields may contain commas.
inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (ch == '"') {
      if (quoted && i + 1 < line.size() && line[i + 1] == '"')
        out.back().push_back(line[++i]);
      else
        quoted = !quoted;
    } else if (ch == ',' && !quoted) {
      out.emplace_back();
    } else if (ch != '\r') {
      out.back().push_back(ch);
    }
  }
  return out;
}

} // namespace detail

/**
 * Reads (x, value) points from a document: a JSON report contributes its
 * order histogram; a report CSV (with order and graph6 columns) is counted
 * per order; any other CSV is read as two numeric columns after a header.
 */
inline std::vector<std::pair<double, double>> read_points(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<std::pair<double, double>> pts;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw std::invalid_argument("empty input");
  if (text[first] == '{') {
    auto doc = nlohmann::json::parse(text);
    for (const auto& bucket : doc.at("histogram"))
      pts.emplace_back(bucket.at("order").get<double>(), bucket.at("count").get<double>());
    return pts;
  }
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  const auto header = detail::split_csv_line(line);
  int order_col = -1, g6_col = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "order")
      order_col = static_cast<int>(i);
    if (header[i] == "graph6")
      g6_col = static_cast<int>(i);
  }
  if (order_col >= 0 && g6_col >= 0) {
    std::map<double, double> hist;
    while (std::getline(lines, line))
      if (!line.empty())
        hist[std::stod(detail::split_csv_line(line).at(static_cast<std::size_t>(order_col)))] += 1;
    return {hist.begin(), hist.end()};
  }
  while (std::getline(lines, line)) {
    if (line.empty())
      continue;
    auto cells = detail::split_csv_line(line);
    if (cells.size() < 2)
      throw std::invalid_argument("expected two columns in '" + line + "'");
    pts.emplace_back(std::stod(cells[0]), std::stod(cells[1]));
  }
  return pts;
}

} // namespace tyfam

#endif
