#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "evanwave/errors.hpp"
#include "evanwave/layered.hpp"
#include "evanwave/scans.hpp"
#include "evanwave/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitDomainError = 3;

nlohmann::json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw evanwave::ConfigError("cannot open config file: " + path);
  }
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw evanwave::ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
}

std::string render(const evanwave::scans::Table& table, const std::string& format) {
  if (format == "csv") {
    std::ostringstream out;
    evanwave::scans::write_csv(out, table);
    return out.str();
  }
  return evanwave::scans::table_json(table).dump(2) + "\n";
}

// Results are fully rendered before the output file is touched, so a
// failing run never leaves a partial file behind.
void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + out_path);
  }
  out << payload;
}

void ftir_summary(const evanwave::scans::FtirScan& scan,
                  const evanwave::scans::Table& table) {
  const auto theta_c = evanwave::layered::critical_angle(
      scan.stack.entry.n, scan.stack.layers.front().medium.n);
  if (!theta_c || scan.theta0 <= *theta_c) {
    std::fprintf(stderr,
                 "warning: gap propagates at theta0=%.6f; no evanescent regime\n",
                 scan.theta0);
  }
  if (table.rows.size() < 2) {
    return;
  }
  const auto& last = table.rows.back();
  const double d_max = *last[0];
  const double tau_max = *last[3];
  // Reference point one decade below the widest gap (or the first row).
  std::size_t ref = 0;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (std::abs(*table.rows[i][0] - d_max / 10.0) <
        std::abs(*table.rows[ref][0] - d_max / 10.0)) {
      ref = i;
    }
  }
  const double tau_ref = *table.rows[ref][3];
  std::fprintf(stderr,
               "saturation: tau_g(d=%.6g)=%.6g, rel change vs d=%.6g: %.3g\n",
               d_max, tau_max, *table.rows[ref][0],
               std::abs(tau_max - tau_ref) / std::abs(tau_ref));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evanescent waves: waveguide dispersion, total reflection, "
               "tunnelling delay, and WKB phase decomposition"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  bool inject_branch_fault = false;

  const auto add_io = [&](CLI::App* cmd, bool with_format) {
    cmd->add_option("--config", config_path, "JSON configuration file")->required();
    cmd->add_option("--out", out_path, "output file (default: stdout)");
    if (with_format) {
      cmd->add_option("--format", format, "output format")
          ->check(CLI::IsMember({"csv", "json"}));
    }
  };

  auto* dispersion = app.add_subcommand(
      "dispersion", "waveguide dispersion sweep (omega_c, k, v_p, v_g)");
  add_io(dispersion, true);
  auto* tir = app.add_subcommand(
      "tir", "total-internal-reflection angle sweep of a bare interface");
  add_io(tir, true);
  auto* ftir = app.add_subcommand(
      "ftir", "frustrated-total-reflection gap sweep (|t|^2, phase, group delay)");
  add_io(ftir, true);
  auto* wkb = app.add_subcommand(
      "wkb", "split a potential into regions and report actions (JSON)");
  add_io(wkb, false);
  auto* verify = app.add_subcommand(
      "verify", "run the full verification suite and report each criterion");
  verify->add_flag("--inject-branch-fault", inject_branch_fault,
                   "debug hook: flip the exit-side branch cut; the unitarity "
                   "criterion must fail")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    if (dispersion->parsed()) {
      const auto scan = evanwave::scans::dispersion_from_json(load_config(config_path));
      emit(render(evanwave::scans::run(scan), format), out_path);
    } else if (tir->parsed()) {
      const auto scan = evanwave::scans::tir_from_json(load_config(config_path));
      const auto table = evanwave::scans::run(scan);
      const auto theta_c = evanwave::layered::critical_angle(scan.n1, scan.n2);
      if (theta_c) {
        std::fprintf(stderr, "theta_c=%.6f\n", *theta_c);
      } else {
        std::fprintf(stderr, "theta_c=none\n");
      }
      emit(render(table, format), out_path);
    } else if (ftir->parsed()) {
      const auto scan = evanwave::scans::ftir_from_json(load_config(config_path));
      const auto table = evanwave::scans::run(scan);
      ftir_summary(scan, table);
      emit(render(table, format), out_path);
    } else if (wkb->parsed()) {
      const auto job = evanwave::scans::wkb_from_json(load_config(config_path));
      emit(evanwave::scans::wkb_report(job).dump(2) + "\n", out_path);
    } else if (verify->parsed()) {
      const auto results =
          evanwave::verify::run_all({.flip_branch_cut = inject_branch_fault});
      evanwave::verify::print_report(std::cout, results);
      return evanwave::verify::all_passed(results) ? 0 : kExitVerifyFailed;
    }
  } catch (const evanwave::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const evanwave::Error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return 0;
}
