#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "evanwave/grid.hpp"
#include "evanwave/layered.hpp"
#include "evanwave/waveguide.hpp"

namespace evanwave::scans {

enum class Spacing { Linear, Log };

/// Sweep of one scalar parameter.  Invariants: count >= 2, start < stop,
/// and log spacing requires start > 0; violations throw ConfigError.
struct Range {
  double start;
  double stop;
  std::size_t count;
  Spacing spacing = Spacing::Linear;

  void validate() const;
  [[nodiscard]] std::vector<double> points() const;
};

[[nodiscard]] Range range_from_json(const nlohmann::json& j);

/// Numeric table with optional (empty-cell) entries, the common shape of
/// every scan output.  CSV cells carry 17 significant digits so values
/// round-trip exactly; the JSON form is {"columns": [...], "rows":
/// [[...], ...]} with null for empty cells.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
};

void write_csv(std::ostream& out, const Table& table);
[[nodiscard]] nlohmann::json table_json(const Table& table);

/// Waveguide dispersion sweep: columns omega, omega_c, k_re, k_im, v_p,
/// v_g, with empty velocity cells at and below cutoff.
struct DispersionScan {
  waveguide::ModeSpec mode;
  Range omega;
};

[[nodiscard]] DispersionScan dispersion_from_json(const nlohmann::json& j);
[[nodiscard]] Table run(const DispersionScan& scan);

/// Total-reflection angle sweep of a bare interface: columns theta0,
/// theta2_re, theta2_im, abs_r, depth (depth empty below the critical
/// angle).
struct TirScan {
  double n1;
  double n2;
  double omega;
  layered::Polarization polarization = layered::Polarization::S;
  Range theta;
};

[[nodiscard]] TirScan tir_from_json(const nlohmann::json& j);
[[nodiscard]] Table run(const TirScan& scan);

/// Frustrated-total-reflection gap sweep: the stack's single layer is
/// the gap whose thickness runs over the range.  Columns d, abs_t2,
/// phase_t, tau_g, v_eff; phase_t is unwrapped along the scan.
struct FtirScan {
  layered::MediumStack stack;
  double omega;
  double theta0;
  layered::Polarization polarization = layered::Polarization::S;
  Range gap;
  double d_omega = 0.0;  // 0 selects the group-delay default step
};

[[nodiscard]] FtirScan ftir_from_json(const nlohmann::json& j);
[[nodiscard]] Table run(const FtirScan& scan);

/// WKB decomposition job: raw potential U, fixed energy E, and the
/// energy step for the imaginary-time lapse.
struct WkbJob {
  RealField1D potential;
  double energy;
  double d_e;
  double hbar = 1.0;
};

[[nodiscard]] WkbJob wkb_from_json(const nlohmann::json& j);

/// Region-by-region report: classification, actions, damping factor,
/// imaginary-time lapse, plus the classical residuals of the generated
/// leading-order phases evaluated away from region boundaries.
[[nodiscard]] nlohmann::json wkb_report(const WkbJob& job);

}  // namespace evanwave::scans
