#pragma once

#include <string>
#include <vector>

#include "multilift/scenario.hpp"

namespace multilift {

// Minimal self-contained SVG line chart: autoscaled axes, tick labels and a
// legend. No external assets.
class SvgLinePlot {
 public:
  SvgLinePlot(std::string title, std::string x_label, std::string y_label);

  void add_series(const std::string& name, const std::vector<double>& x,
                  const std::vector<double>& y);
  void write(const std::string& path) const;

 private:
  std::string title_, x_label_, y_label_;
  struct Series {
    std::string name;
    std::vector<double> x, y;
  };
  std::vector<Series> series_;
};

// Renders the standard per-run charts next to the CSV:
//   <prefix>_errors.svg     tracking error norms
//   <prefix>_sanm.svg       adaptive estimates and RBF outputs
//   <prefix>_trajectory.svg horizontal projection of payload vs. reference
void emit_plots(const TimeSeriesLog& log, const std::string& out_dir,
                const std::string& prefix);

// Two-run overlay of ||e_x|| and Psi_R.
void emit_comparison_plot(const TimeSeriesLog& a, const std::string& label_a,
                          const TimeSeriesLog& b, const std::string& label_b,
                          const std::string& path);

}  // namespace multilift
