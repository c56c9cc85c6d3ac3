#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "multilift/config_file.hpp"
#include "multilift/csv_log.hpp"
#include "multilift/report.hpp"
#include "multilift/scenario.hpp"
#include "multilift/svg_plot.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDiverged = 3;

struct CommonOptions {
  std::string group = "A";
  std::string controller = "sanm";
  std::optional<double> dt;
  std::optional<double> duration;
  std::optional<int> log_stride;
  std::string config_path;
  std::string out_dir = "out";
};

multilift::ScenarioConfig build_config(const CommonOptions& opt,
                                       const std::string& controller) {
  using namespace multilift;
  ScenarioConfig cfg = default_config(group_from_string(opt.group),
                                      variant_from_string(controller));
  if (!opt.config_path.empty()) {
    cfg = load_config(opt.config_path, cfg);
    // Command-line group/controller win over the file.
    cfg.group = group_from_string(opt.group);
    cfg.controller = variant_from_string(controller);
  }
  if (opt.dt) cfg.integrator.h = *opt.dt;
  if (opt.duration) cfg.integrator.duration = *opt.duration;
  if (opt.log_stride) cfg.log_stride = *opt.log_stride;
  cfg.validate();
  return cfg;
}

multilift::RunResult run_and_export(const multilift::ScenarioConfig& cfg,
                                    const std::string& out_dir) {
  using namespace multilift;
  std::filesystem::create_directories(out_dir);
  const std::string prefix =
      to_string(cfg.group) + "_" + to_string(cfg.controller);
  std::cout << "running group " << to_string(cfg.group) << " ("
            << to_string(cfg.controller) << "), dt = " << cfg.integrator.h
            << " s, duration = " << cfg.integrator.duration << " s"
            << std::endl;
  RunResult result = run_scenario(cfg);
  export_csv(result.log, out_dir + "/" + prefix + ".csv");
  write_metrics_json(result.metrics, cfg, result.wall_time_s,
                     out_dir + "/" + prefix + "_metrics.json");
  if (!result.log.rows.empty()) {
    emit_plots(result.log, out_dir, prefix);
  }
  const Metrics& m = result.metrics;
  std::cout << "  rms ||e_x|| = " << m.rms_e_x << " m, rms Psi_R = "
            << m.rms_psi_R << ", steps = " << m.steps << ", wall time = "
            << result.wall_time_s << " s" << std::endl;
  if (m.diverged) {
    std::cout << "  RUN FAILED at t = " << m.t_end << " s: "
              << m.failure_reason << std::endl;
  }
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace multilift;
  CLI::App app{"multilift: cable-suspended payload transport simulator"};
  app.require_subcommand(1);

  CommonOptions opt;

  CLI::App* run = app.add_subcommand("run", "run one scenario");
  run->add_option("--group", opt.group, "experiment group A..F or custom");
  run->add_option("--controller", opt.controller, "baseline or sanm");
  run->add_option("--dt", opt.dt, "integrator step [s]");
  run->add_option("--duration", opt.duration, "simulated time [s]");
  run->add_option("--config", opt.config_path, "config file with overrides");
  run->add_option("--out", opt.out_dir, "output directory");
  run->add_option("--log-stride", opt.log_stride, "log every k-th step");

  CLI::App* compare =
      app.add_subcommand("compare", "run both controllers and compare");
  compare->add_option("--group", opt.group, "experiment group A..F or custom");
  compare->add_option("--dt", opt.dt, "integrator step [s]");
  compare->add_option("--duration", opt.duration, "simulated time [s]");
  compare->add_option("--config", opt.config_path,
                      "config file with overrides");
  compare->add_option("--out", opt.out_dir, "output directory");
  compare->add_option("--log-stride", opt.log_stride, "log every k-th step");

  std::string validate_path;
  CLI::App* validate =
      app.add_subcommand("validate-config", "check a config file");
  validate->add_option("file", validate_path, "config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const ScenarioConfig cfg = build_config(opt, opt.controller);
      const RunResult result = run_and_export(cfg, opt.out_dir);
      return result.metrics.diverged ? kExitDiverged : kExitOk;
    }
    if (compare->parsed()) {
      const ScenarioConfig cfg_base = build_config(opt, "baseline");
      const ScenarioConfig cfg_sanm = build_config(opt, "sanm");
      const RunResult base = run_and_export(cfg_base, opt.out_dir);
      const RunResult sanm = run_and_export(cfg_sanm, opt.out_dir);
      const std::string group = to_string(cfg_sanm.group);
      write_comparison_json(base.metrics, sanm.metrics, cfg_sanm,
                            opt.out_dir + "/" + group +
                                "_compare_metrics.json");
      if (!base.log.rows.empty() && !sanm.log.rows.empty()) {
        emit_comparison_plot(base.log, "baseline", sanm.log, "sanm",
                             opt.out_dir + "/" + group + "_compare_errors.svg");
      }
      if (base.metrics.rms_e_x > 0.0) {
        std::cout << "rms ||e_x|| sanm/baseline = "
                  << sanm.metrics.rms_e_x / base.metrics.rms_e_x << std::endl;
      }
      if (base.metrics.rms_psi_R > 0.0) {
        std::cout << "rms Psi_R sanm/baseline = "
                  << sanm.metrics.rms_psi_R / base.metrics.rms_psi_R
                  << std::endl;
      }
      return (base.metrics.diverged || sanm.metrics.diverged) ? kExitDiverged
                                                              : kExitOk;
    }
    if (validate->parsed()) {
      const ScenarioConfig cfg =
          load_config(validate_path,
                      default_config(Group::A, ControllerVariant::sanm));
      std::cout << "config ok: group " << to_string(cfg.group) << ", "
                << to_string(cfg.controller) << ", n = " << cfg.n
                << ", dt = " << cfg.integrator.h << " s, duration = "
                << cfg.integrator.duration << " s" << std::endl;
      return kExitOk;
    }
  } catch (const ConfigError& ex) {
    std::cerr << "config error: " << ex.what() << std::endl;
    return kExitConfig;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "config error: " << ex.what() << std::endl;
    return kExitConfig;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << std::endl;
    return 1;
  }
  return kExitOk;
}
