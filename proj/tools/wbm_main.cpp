// wbm: run Wave Based Method T-sweeps from a config file or a named preset.
//
// Exit codes: 0 success, 1 configuration error, 2 numerical failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "wbm/config.hpp"
#include "wbm/csv.hpp"
#include "wbm/errors.hpp"
#include "wbm/experiments.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kConfigError = 1;
constexpr int kNumericalError = 2;

std::string file_stem(const std::string& name) {
  std::string out = name;
  for (char& c : out) {
    if (c == '/' || c == ' ' || c == '=') c = '_';
  }
  return out;
}

// Runs every variant, writes one CSV, reports failed records on stderr.
int run_variants(const std::vector<wbm::ExperimentConfig>& variants, const fs::path& csv_path,
                 const wbm::SweepOptions& options, bool quiet) {
  if (csv_path.has_parent_path()) fs::create_directories(csv_path.parent_path());
  std::ofstream out(csv_path);
  if (!out) {
    std::cerr << "error: cannot write " << csv_path << "\n";
    return kConfigError;
  }
  wbm::write_csv_header(out);
  bool failed = false;
  for (const auto& cfg : variants) {
    const auto records = wbm::run_sweep(cfg, options);
    wbm::write_csv_rows(out, records);
    for (const auto& r : records) {
      if (!r.ok) {
        failed = true;
        std::cerr << "error: " << r.experiment << " " << wbm::to_string(r.formulation)
                  << " T=" << wbm::format_double(r.truncation) << ": " << r.diagnostic
                  << "\n";
      } else if (!quiet) {
        std::cerr << r.experiment << " " << wbm::to_string(r.formulation)
                  << " T=" << wbm::format_double(r.truncation) << " N=" << r.n
                  << " error=" << wbm::format_double(r.error)
                  << " |x|=" << wbm::format_double(r.coef_norm) << "\n";
      }
    }
  }
  if (!quiet) std::cerr << "wrote " << csv_path.string() << "\n";
  return failed ? kNumericalError : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wave Based Method experiments for interior 2D Helmholtz problems"};
  app.require_subcommand(1);

  bool quiet = false;
  bool no_timing = false;
  app.add_flag("-q,--quiet", quiet, "Only report errors");
  app.add_flag("--no-timing", no_timing, "Write wall_ms = 0 for reproducible output");

  auto* run = app.add_subcommand("run", "Run the sweep described by a config file");
  std::string config_path;
  std::string run_out;
  run->add_option("--config", config_path, "Config file (key = value)")->required();
  run->add_option("--out", run_out, "Output directory");

  auto* preset = app.add_subcommand("preset", "Run a named preset");
  std::string preset_name;
  std::string preset_out = ".";
  double k = 0.924;
  bool dump = false;
  preset->add_option("name", preset_name, "Preset name (see list-presets)")->required();
  preset->add_option("--out", preset_out, "Output directory");
  preset->add_option("--k", k, "Wavenumber override")->check(CLI::PositiveNumber);
  preset->add_flag("--dump-config", dump,
                   "Print each variant as a config file instead of running it");

  auto* list = app.add_subcommand("list-presets", "List available presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kConfigError;
  }

  wbm::SweepOptions options;
  options.measure_time = !no_timing;

  try {
    if (*list) {
      for (const auto& p : wbm::presets()) {
        std::cout << p.name << "\t" << p.variants.size() << " variants\t" << p.description
                  << "\n";
      }
      return 0;
    }
    if (*run) {
      auto cfg = wbm::load_config(config_path);
      fs::path csv = cfg.output.empty() ? fs::path(file_stem(cfg.name) + ".csv")
                                        : fs::path(cfg.output);
      if (!run_out.empty()) csv = fs::path(run_out) / csv.filename();
      return run_variants({cfg}, csv, options, quiet);
    }
    const auto found = wbm::find_preset(preset_name, k);
    if (!found) {
      std::cerr << "error: unknown preset '" << preset_name << "'\n";
      return kConfigError;
    }
    if (dump) {
      for (const auto& v : found->variants) {
        std::cout << "# " << v.name << "\n" << wbm::format_config(v) << "\n";
      }
      return 0;
    }
    return run_variants(found->variants, fs::path(preset_out) / (found->name + ".csv"),
                        options, quiet);
  } catch (const wbm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumericalError;
  }
}
