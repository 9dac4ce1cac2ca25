#ifndef TYFAM_TABLE_HPP
#define TYFAM_TABLE_HPP

#include <nlohmann/json.hpp>

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tyfam {

enum class TableFormat { csv, json, markdown };

inline TableFormat table_format_from_string(const std::string& s) {
  if (s == "csv")
    return TableFormat::csv;
  if (s == "json")
    return TableFormat::json;
  if (s == "markdown" || s == "md")
    return TableFormat::markdown;
  throw std::invalid_argument("unknown table format '" + s + "'");
}

/// Labeled rectangular grid of cells.
struct TableDoc {
  std::string title;
  std::string corner;  // label of the row-label column
  std::vector<std::string> columns;
  std::vector<std::string> rows;
  std::vector<std::vector<std::string>> cells;

  void add_row(std::string label, std::vector<std::string> values) {
    if (values.size() != columns.size())
      throw std::invalid_argument("table row width does not match columns");
    rows.push_back(std::move(label));
    cells.push_back(std::move(values));
  }
};

inline std::string render(const TableDoc& t, TableFormat format) {
  std::ostringstream out;
  switch (format) {
  case TableFormat::csv:
    out << t.corner;
    for (const auto& c : t.columns)
      out << ',' << c;
    out << '\n';
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      out << t.rows[r];
      for (const auto& v : t.cells[r])
        out << ',' << v;
      out << '\n';
    }
    break;
  case TableFormat::markdown:
    if (!t.title.empty())
      out << "### " << t.title << "\n\n";
    out << "| " << t.corner << " |";
    for (const auto& c : t.columns)
      out << ' ' << c << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      out << "---:|";
    out << '\n';
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      out << "| " << t.rows[r] << " |";
      for (const auto& v : t.cells[r])
        out << ' ' << v << " |";
      out << '\n';
    }
    break;
  case TableFormat::json: {
    nlohmann::ordered_json doc;
    doc["title"] = t.title;
    doc["corner"] = t.corner;
    doc["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < t.rows.size(); ++r)
      rows.push_back({{"label", t.rows[r]}, {"values", t.cells[r]}});
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
    break;
  }
  }
  return out.str();
}

} // namespace tyfam

#endif
