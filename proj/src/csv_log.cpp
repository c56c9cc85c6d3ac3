#include "multilift/csv_log.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace multilift {

void export_csv(const TimeSeriesLog& log, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("export_csv: cannot open " + path);

  for (size_t c = 0; c < log.schema.columns.size(); ++c) {
    if (c > 0) out << ',';
    out << log.schema.columns[c];
  }
  out << '\n';

  char buf[32];
  for (const auto& row : log.rows) {
    if (row.size() != log.schema.columns.size()) {
      throw std::runtime_error("export_csv: row width does not match schema");
    }
    for (size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      std::snprintf(buf, sizeof(buf), "%.17g", row[c]);
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("export_csv: write failed for " + path);
}

TimeSeriesLog parse_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("parse_csv: cannot open " + path);

  TimeSeriesLog log;
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("parse_csv: missing header in " + path);
  }
  {
    std::stringstream ss(line);
    std::string name;
    while (std::getline(ss, name, ',')) log.schema.columns.push_back(name);
  }
  const size_t width = log.schema.columns.size();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    row.reserve(width);
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != width) {
      throw std::runtime_error("parse_csv: ragged row in " + path);
    }
    log.rows.push_back(std::move(row));
  }
  if (log.rows.size() >= 2) {
    const int t_col = log.schema.index("t");
    if (t_col >= 0) log.h = log.rows[1][t_col] - log.rows[0][t_col];
  }
  return log;
}

}  // namespace multilift
