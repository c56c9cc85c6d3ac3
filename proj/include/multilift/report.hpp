#pragma once

#include <string>

#include "multilift/scenario.hpp"

namespace multilift {

// JSON run summary written alongside each CSV: metrics, the scenario
// identity, and the attachment geometry actually used.
void write_metrics_json(const Metrics& metrics, const ScenarioConfig& cfg,
                        double wall_time_s, const std::string& path);

// Joint summary for a baseline-vs-sanm comparison, including the RMS
// improvement ratios.
void write_comparison_json(const Metrics& baseline, const Metrics& sanm,
                           const ScenarioConfig& cfg, const std::string& path);

}  // namespace multilift
