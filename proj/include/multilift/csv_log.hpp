#pragma once

#include <string>

#include "multilift/scenario.hpp"

namespace multilift {

// UTF-8 CSV: one header row with the schema column names, one row per logged
// step, doubles printed with 17 significant digits so parsing is bit-exact.
void export_csv(const TimeSeriesLog& log, const std::string& path);

// Inverse of export_csv (header must match the values per row). Used by the
// round-trip tests and available to downstream tooling.
TimeSeriesLog parse_csv(const std::string& path);

}  // namespace multilift
