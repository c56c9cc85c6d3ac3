#include "multilift/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace multilift {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 660.0;   // plot area right edge; legend lives beyond
constexpr double kTop = 44.0;
constexpr double kBottom = 430.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string escape_xml(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void pad_range(double* lo, double* hi) {
  if (!(*hi > *lo)) {
    *lo -= 1.0;
    *hi += 1.0;
  } else {
    const double pad = 0.05 * (*hi - *lo);
    *lo -= pad;
    *hi += pad;
  }
}

}  // namespace

SvgLinePlot::SvgLinePlot(std::string title, std::string x_label,
                         std::string y_label)
    : title_(std::move(title)),
      x_label_(std::move(x_label)),
      y_label_(std::move(y_label)) {}

void SvgLinePlot::add_series(const std::string& name,
                             const std::vector<double>& x,
                             const std::vector<double>& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("SvgLinePlot: x/y size mismatch");
  }
  series_.push_back({name, x, y});
}

void SvgLinePlot::write(const std::string& path) const {
  if (series_.empty()) {
    throw std::runtime_error("SvgLinePlot: nothing to plot");
  }
  double x_lo = 1e300, x_hi = -1e300, y_lo = 1e300, y_hi = -1e300;
  for (const auto& s : series_) {
    for (double v : s.x) {
      x_lo = std::min(x_lo, v);
      x_hi = std::max(x_hi, v);
    }
    for (double v : s.y) {
      y_lo = std::min(y_lo, v);
      y_hi = std::max(y_hi, v);
    }
  }
  pad_range(&x_lo, &x_hi);
  pad_range(&y_lo, &y_hi);
  const auto map_x = [&](double v) {
    return kLeft + (v - x_lo) / (x_hi - x_lo) * (kRight - kLeft);
  };
  const auto map_y = [&](double v) {
    return kBottom - (v - y_lo) / (y_hi - y_lo) * (kBottom - kTop);
  };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("SvgLinePlot: cannot open " + path);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"24\" font-size=\"16\""
      << " text-anchor=\"middle\" font-family=\"sans-serif\">"
      << escape_xml(title_) << "</text>\n";

  // Axes, ticks and grid.
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
      << kRight - kLeft << "\" height=\"" << kBottom - kTop
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  const int ticks = 5;
  for (int i = 0; i <= ticks; ++i) {
    const double fx = x_lo + (x_hi - x_lo) * i / ticks;
    const double px = map_x(fx);
    out << "<line x1=\"" << px << "\" y1=\"" << kBottom << "\" x2=\"" << px
        << "\" y2=\"" << kBottom + 5 << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << px << "\" y=\"" << kBottom + 20
        << "\" font-size=\"11\" text-anchor=\"middle\""
        << " font-family=\"sans-serif\">" << fmt(fx) << "</text>\n";
    const double fy = y_lo + (y_hi - y_lo) * i / ticks;
    const double py = map_y(fy);
    out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << py << "\" x2=\""
        << kLeft << "\" y2=\"" << py << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << py + 4
        << "\" font-size=\"11\" text-anchor=\"end\""
        << " font-family=\"sans-serif\">" << fmt(fy) << "</text>\n";
  }
  out << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kHeight - 10
      << "\" font-size=\"13\" text-anchor=\"middle\""
      << " font-family=\"sans-serif\">" << escape_xml(x_label_) << "</text>\n"
      << "<text x=\"18\" y=\"" << (kTop + kBottom) / 2
      << "\" font-size=\"13\" text-anchor=\"middle\""
      << " font-family=\"sans-serif\" transform=\"rotate(-90 18 "
      << (kTop + kBottom) / 2 << ")\">" << escape_xml(y_label_) << "</text>\n";

  for (size_t s = 0; s < series_.size(); ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(*kPalette))];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.2\" points=\"";
    // Cap the emitted points so long runs stay compact.
    const size_t count = series_[s].x.size();
    const size_t stride = std::max<size_t>(1, count / 4000);
    for (size_t i = 0; i < count; i += stride) {
      out << fmt(map_x(series_[s].x[i])) << ',' << fmt(map_y(series_[s].y[i]))
          << ' ';
    }
    if (count > 0 && (count - 1) % stride != 0) {
      out << fmt(map_x(series_[s].x[count - 1])) << ','
          << fmt(map_y(series_[s].y[count - 1]));
    }
    out << "\"/>\n";
    const double ly = kTop + 16.0 * s;
    out << "<line x1=\"" << kRight + 12 << "\" y1=\"" << ly + 4 << "\" x2=\""
        << kRight + 36 << "\" y2=\"" << ly + 4 << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << kRight + 42 << "\" y=\"" << ly + 8
        << "\" font-size=\"12\" font-family=\"sans-serif\">"
        << escape_xml(series_[s].name) << "</text>\n";
  }
  out << "</svg>\n";
  if (!out) throw std::runtime_error("SvgLinePlot: write failed for " + path);
}

namespace {

std::vector<double> column(const TimeSeriesLog& log, const std::string& name) {
  const int idx = log.schema.index(name);
  if (idx < 0) {
    throw std::runtime_error("emit_plots: missing column " + name);
  }
  std::vector<double> out;
  out.reserve(log.rows.size());
  for (const auto& row : log.rows) out.push_back(row[idx]);
  return out;
}

std::vector<double> column_norm3(const TimeSeriesLog& log,
                                 const std::string& base) {
  const auto x = column(log, base + "_x");
  const auto y = column(log, base + "_y");
  const auto z = column(log, base + "_z");
  std::vector<double> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    out[i] = std::sqrt(x[i] * x[i] + y[i] * y[i] + z[i] * z[i]);
  }
  return out;
}

}  // namespace

void emit_plots(const TimeSeriesLog& log, const std::string& out_dir,
                const std::string& prefix) {
  if (log.rows.empty()) {
    throw std::runtime_error("emit_plots: empty log");
  }
  const auto t = column(log, "t");

  SvgLinePlot errors(prefix + ": tracking errors", "t [s]", "error");
  errors.add_series("||e_x|| [m]", t, column_norm3(log, "e_x"));
  errors.add_series("||e_v|| [m/s]", t, column_norm3(log, "e_v"));
  errors.add_series("Psi_R", t, column(log, "psi_R"));
  errors.write(out_dir + "/" + prefix + "_errors.svg");

  SvgLinePlot sanm(prefix + ": adaptive estimates", "t [s]", "value");
  sanm.add_series("m_hat_1 [kg]", t, column(log, "m_hat_x"));
  sanm.add_series("m_hat_2 [kg]", t, column(log, "m_hat_y"));
  sanm.add_series("m_hat_3 [kg]", t, column(log, "m_hat_z"));
  sanm.add_series("J_hat_1 [kg m^2]", t, column(log, "J_hat_x"));
  sanm.add_series("J_hat_2 [kg m^2]", t, column(log, "J_hat_y"));
  sanm.add_series("J_hat_3 [kg m^2]", t, column(log, "J_hat_z"));
  sanm.add_series("||phi_x||", t, column_norm3(log, "phi_x"));
  sanm.add_series("||phi_R||", t, column_norm3(log, "phi_R"));
  sanm.write(out_dir + "/" + prefix + "_sanm.svg");

  const auto x0x = column(log, "x0_x");
  const auto x0y = column(log, "x0_y");
  const auto exx = column(log, "e_x_x");
  const auto exy = column(log, "e_x_y");
  std::vector<double> xdx(x0x.size()), xdy(x0y.size());
  for (size_t i = 0; i < x0x.size(); ++i) {
    xdx[i] = x0x[i] - exx[i];
    xdy[i] = x0y[i] - exy[i];
  }
  SvgLinePlot traj(prefix + ": payload trajectory (top view)", "x [m]",
                   "y [m]");
  traj.add_series("payload", x0x, x0y);
  traj.add_series("reference", xdx, xdy);
  traj.write(out_dir + "/" + prefix + "_trajectory.svg");
}

void emit_comparison_plot(const TimeSeriesLog& a, const std::string& label_a,
                          const TimeSeriesLog& b, const std::string& label_b,
                          const std::string& path) {
  SvgLinePlot plot("controller comparison", "t [s]", "error");
  plot.add_series(label_a + " ||e_x|| [m]", column(a, "t"),
                  column_norm3(a, "e_x"));
  plot.add_series(label_b + " ||e_x|| [m]", column(b, "t"),
                  column_norm3(b, "e_x"));
  plot.add_series(label_a + " Psi_R", column(a, "t"), column(a, "psi_R"));
  plot.add_series(label_b + " Psi_R", column(b, "t"), column(b, "psi_R"));
  plot.write(path);
}

}  // namespace multilift
