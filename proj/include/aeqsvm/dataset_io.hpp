// CSV ingestion for training sets and query batches. Format: UTF-8,
// comma-separated, first column the +/-1 label, remaining columns real
// features; an optional header row is detected by a non-numeric first cell.
// Errors carry 1-based line numbers.
#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "aeqsvm/svm.hpp"

namespace aeqsvm {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(strip(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

inline bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  try {
    std::size_t used = 0;
    out = std::stod(s, &used);
    return used == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace detail

// Rows of plain feature vectors (no label column). Used for query batches.
inline std::vector<std::vector<double>> load_query_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::strip(line).empty()) continue;
    const std::vector<std::string> cells = detail::split_csv_line(line);
    std::vector<double> row;
    row.reserve(cells.size());
    bool numeric = true;
    for (const std::string& c : cells) {
      double v = 0.0;
      if (!detail::parse_double(c, v)) {
        numeric = false;
        break;
      }
      row.push_back(v);
    }
    if (!numeric) {
      if (rows.empty() && line_no == 1) continue;  // header row
      throw InputError("line " + std::to_string(line_no) + ": non-numeric cell");
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw InputError("line " + std::to_string(line_no) + ": ragged row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("no data rows in " + path);
  return rows;
}

// Parses an inline query like "0.5,-1.25,2".
inline std::vector<double> parse_inline_vector(const std::string& text) {
  const std::vector<std::string> cells = detail::split_csv_line(text);
  std::vector<double> out;
  out.reserve(cells.size());
  for (const std::string& c : cells) {
    double v = 0.0;
    if (!detail::parse_double(c, v))
      throw InputError("inline vector: non-numeric cell '" + c + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("inline vector: empty");
  return out;
}

inline TrainingSet load_dataset_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  TrainingSet ts;
  std::string line;
  int line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::strip(line).empty()) continue;
    const std::vector<std::string> cells = detail::split_csv_line(line);
    if (cells.size() < 2)
      throw InputError("line " + std::to_string(line_no) + ": need a label and features");
    double label = 0.0;
    if (!detail::parse_double(cells[0], label)) {
      if (!seen_data) continue;  // header row
      throw InputError("line " + std::to_string(line_no) + ": non-numeric label");
    }
    if (label != 1.0 && label != -1.0)
      throw InputError("line " + std::to_string(line_no) + ": label must be +1 or -1");
    std::vector<double> row;
    row.reserve(cells.size() - 1);
    for (std::size_t j = 1; j < cells.size(); ++j) {
      double v = 0.0;
      if (!detail::parse_double(cells[j], v))
        throw InputError("line " + std::to_string(line_no) + ": non-numeric feature");
      if (!std::isfinite(v))
        throw InputError("line " + std::to_string(line_no) + ": non-finite feature");
      row.push_back(v);
    }
    if (seen_data && row.size() != ts.vectors.front().size())
      throw InputError("line " + std::to_string(line_no) + ": ragged row");
    ts.labels.push_back(label > 0 ? 1 : -1);
    ts.vectors.push_back(std::move(row));
    seen_data = true;
  }
  if (ts.size() < 2) throw InputError("dataset needs at least 2 rows: " + path);
  return ts;
}

}  // namespace aeqsvm
