#include "evanwave/scans.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <utility>

#include "evanwave/serialization.hpp"
#include "evanwave/wkb.hpp"

namespace evanwave::scans {

namespace {

using nlohmann::json;

// Uniform wrapper so every malformed-shape failure surfaces as ConfigError.
template <class F>
auto parse_config(const json& j, F&& parse) {
  try {
    return parse(j);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
}

layered::Polarization polarization_from_json(const json& j) {
  const std::string value = j.value("polarization", "s");
  if (value == "s" || value == "S") {
    return layered::Polarization::S;
  }
  if (value == "p" || value == "P") {
    return layered::Polarization::P;
  }
  throw ConfigError("polarization must be \"s\" or \"p\"");
}

const char* kind_name(wkb::RegionKind kind) {
  switch (kind) {
    case wkb::RegionKind::Allowed:
      return "allowed";
    case wkb::RegionKind::Forbidden:
      return "forbidden";
    default:
      return "turning_point";
  }
}

}  // namespace

void Range::validate() const {
  if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop)) {
    throw ConfigError("range requires finite start < stop");
  }
  if (count < 2) {
    throw ConfigError("range requires count >= 2");
  }
  if (spacing == Spacing::Log && !(start > 0.0)) {
    throw ConfigError("log spacing requires start > 0");
  }
}

std::vector<double> Range::points() const {
  validate();
  std::vector<double> values(count);
  const double lo = spacing == Spacing::Log ? std::log(start) : start;
  const double hi = spacing == Spacing::Log ? std::log(stop) : stop;
  for (std::size_t i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(count - 1);
    const double u = std::lerp(lo, hi, f);
    values[i] = spacing == Spacing::Log ? std::exp(u) : u;
  }
  values.front() = start;
  values.back() = stop;
  return values;
}

Range range_from_json(const json& j) {
  return parse_config(j, [](const json& cfg) {
    Range range{cfg.at("start").get<double>(), cfg.at("stop").get<double>(),
                cfg.at("count").get<std::size_t>(), Spacing::Linear};
    const std::string spacing = cfg.value("spacing", "linear");
    if (spacing == "log") {
      range.spacing = Spacing::Log;
    } else if (spacing != "linear") {
      throw ConfigError("spacing must be \"linear\" or \"log\"");
    }
    range.validate();
    return range;
  });
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i == 0 ? "" : ",") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) {
        out << ',';
      }
      if (row[i].has_value()) {
        out << io::format_number(*row[i]);
      }
    }
    out << '\n';
  }
}

json table_json(const Table& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json cells = json::array();
    for (const auto& cell : row) {
      if (cell.has_value()) {
        cells.push_back(*cell);
      } else {
        cells.push_back(nullptr);
      }
    }
    rows.push_back(std::move(cells));
  }
  return json{{"columns", table.columns}, {"rows", std::move(rows)}};
}

DispersionScan dispersion_from_json(const json& j) {
  return parse_config(j, [](const json& cfg) {
    return DispersionScan{io::mode_from_json(cfg.at("mode")),
                          range_from_json(cfg.at("omega"))};
  });
}

Table run(const DispersionScan& scan) {
  if (!(scan.omega.start >= 0.0)) {
    throw ConfigError("omega range must be non-negative");
  }
  Table table{{"omega", "omega_c", "k_re", "k_im", "v_p", "v_g"}, {}};
  for (double omega : scan.omega.points()) {
    const auto point = waveguide::dispersion_point(scan.mode, omega);
    table.rows.push_back({point.omega, point.omega_c, point.k.real(),
                          point.k.imag(), point.v_p, point.v_g});
  }
  return table;
}

TirScan tir_from_json(const json& j) {
  return parse_config(j, [](const json& cfg) {
    return TirScan{cfg.at("n1").get<double>(), cfg.at("n2").get<double>(),
                   cfg.at("omega").get<double>(), polarization_from_json(cfg),
                   range_from_json(cfg.at("theta"))};
  });
}

Table run(const TirScan& scan) {
  const auto rows = layered::tir_scan(scan.n1, scan.n2, scan.theta.points(),
                                      scan.omega, scan.polarization);
  Table table{{"theta0", "theta2_re", "theta2_im", "abs_r", "depth"}, {}};
  for (const auto& row : rows) {
    table.rows.push_back({row.theta0, row.theta2.real(), row.theta2.imag(),
                          row.abs_r, row.depth});
  }
  return table;
}

FtirScan ftir_from_json(const json& j) {
  return parse_config(j, [](const json& cfg) {
    FtirScan scan{io::stack_from_json(cfg.at("stack")),
                  cfg.at("omega").get<double>(),
                  cfg.at("theta0").get<double>(),
                  polarization_from_json(cfg),
                  range_from_json(cfg.at("gap")),
                  cfg.value("d_omega", 0.0)};
    if (scan.stack.layers.size() != 1) {
      throw ConfigError("ftir stack must contain exactly one layer (the gap)");
    }
    if (!(scan.gap.start > 0.0)) {
      throw ConfigError("gap range must be strictly positive");
    }
    return scan;
  });
}

Table run(const FtirScan& scan) {
  const layered::Incidence inc{scan.omega, scan.theta0, scan.polarization};
  const layered::Medium gap = scan.stack.layers.front().medium;
  Table table{{"d", "abs_t2", "phase_t", "tau_g", "v_eff"}, {}};
  double phase_prev = 0.0;
  bool first = true;
  for (double d : scan.gap.points()) {
    const layered::MediumStack stack{scan.stack.entry,
                                     {layered::Layer{gap, d}},
                                     scan.stack.exit};
    const auto result = layered::stack_scattering(stack, inc);
    // Track one continuous phase branch down the scan.
    const double phase =
        first ? result.phase_t
              : phase_prev + std::remainder(result.phase_t - phase_prev,
                                            2.0 * std::numbers::pi);
    const double tau_g = layered::group_delay(stack, inc, scan.d_omega);
    table.rows.push_back({d, std::norm(result.t), phase, tau_g, d / tau_g});
    phase_prev = phase;
    first = false;
  }
  return table;
}

WkbJob wkb_from_json(const json& j) {
  return parse_config(j, [](const json& cfg) {
    const auto& pot = cfg.at("potential");
    WkbJob job{RealField1D(io::grid_from_json(pot.at("grid")),
                           pot.at("V").get<std::vector<double>>()),
               cfg.at("energy").get<double>(), cfg.at("d_e").get<double>(),
               cfg.value("hbar", 1.0)};
    if (!(job.d_e > 0.0)) {
      throw ConfigError("d_e must be positive");
    }
    if (!(job.hbar > 0.0)) {
      throw ConfigError("hbar must be positive");
    }
    return job;
  });
}

json wkb_report(const WkbJob& job) {
  const Grid1D grid = job.potential.grid();
  const std::size_t n = grid.size();
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = job.potential[i] - job.energy;
  }
  const PotentialProfile potential(grid, std::move(v));
  const auto classification = wkb::classify_regions(potential);

  // Leading-order phases: S_r accumulates sqrt(2V) under barriers, S_i
  // accumulates sqrt(-2V) in allowed regions; each is flat elsewhere.
  const double h = grid.spacing();
  std::vector<double> s_real(n, 0.0);
  std::vector<double> s_imag(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    const auto fr = [&](std::size_t k) {
      return std::sqrt(std::max(2.0 * potential[k], 0.0));
    };
    const auto fi = [&](std::size_t k) {
      return std::sqrt(std::max(-2.0 * potential[k], 0.0));
    };
    s_real[i] = s_real[i - 1] + 0.5 * h * (fr(i - 1) + fr(i));
    s_imag[i] = s_imag[i - 1] + 0.5 * h * (fi(i - 1) + fi(i));
  }
  const auto residual = wkb::hj_residual_classical(
      RealField1D(grid, s_real), RealField1D(grid, s_imag), potential);

  // Region interfaces pollute the finite-difference residual locally;
  // report the maximum at least five cells away from every interface.
  std::vector<std::size_t> interfaces;
  for (std::size_t r = 1; r < classification.regions.size(); ++r) {
    interfaces.push_back(classification.regions[r].first);
  }
  json max_residual = nullptr;
  double max_real = 0.0;
  double max_imag = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    bool clear = true;
    for (std::size_t b : interfaces) {
      const std::size_t dist = i > b ? i - b : b - i;
      if (dist <= 5) {
        clear = false;
        break;
      }
    }
    if (clear) {
      any = true;
      max_real = std::max(max_real, std::abs(residual.real_equation[i]));
      max_imag = std::max(max_imag, std::abs(residual.imag_equation[i]));
    }
  }
  if (any) {
    max_residual = json{{"real_equation", max_real}, {"imag_equation", max_imag}};
  }

  json regions = json::array();
  for (const auto& region : classification.regions) {
    const auto actions = wkb::wkb_action(potential, region);
    json entry{{"kind", kind_name(region.kind)},
               {"first", region.first},
               {"last", region.last},
               {"x_begin", region.x_begin},
               {"x_end", region.x_end},
               {"euclidean_action", actions.euclidean},
               {"lorentzian_action", actions.lorentzian}};
    if (region.kind == wkb::RegionKind::Forbidden) {
      entry["damping_factor"] = std::exp(-actions.euclidean / job.hbar);
      try {
        entry["imaginary_time_lapse"] =
            wkb::imaginary_time_lapse(potential, region, job.d_e);
      } catch (const RegionChanged&) {
        entry["imaginary_time_lapse"] = nullptr;
      }
    }
    regions.push_back(std::move(entry));
  }

  return json{{"energy", job.energy},
              {"d_e", job.d_e},
              {"hbar", job.hbar},
              {"regions", std::move(regions)},
              {"max_classical_residual", std::move(max_residual)}};
}

}  // namespace evanwave::scans
