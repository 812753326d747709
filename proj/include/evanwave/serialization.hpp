#pragma once

#include <string>

#include "json.hpp"

#include "evanwave/grid.hpp"
#include "evanwave/layered.hpp"
#include "evanwave/oracle.hpp"
#include "evanwave/waveguide.hpp"

namespace evanwave::io {

/// Decimal form with 17 significant digits; round-trips a double exactly.
[[nodiscard]] std::string format_number(double value);

/// Grids serialize as {"x_min": ..., "x_max": ..., "n": ...}.
[[nodiscard]] nlohmann::json to_json(const Grid1D& grid);
[[nodiscard]] Grid1D grid_from_json(const nlohmann::json& j);

/// Complex fields serialize as {"grid": ..., "values": [[re, im], ...]}.
[[nodiscard]] nlohmann::json to_json(const ComplexField1D& field);
[[nodiscard]] ComplexField1D complex_field_from_json(const nlohmann::json& j);

/// Potentials serialize as {"grid": ..., "V": [...]}.
[[nodiscard]] nlohmann::json to_json(const PotentialProfile& potential);
[[nodiscard]] PotentialProfile potential_from_json(const nlohmann::json& j);

/// Modes serialize as {"a": ..., "b": ..., "n1": ..., "n2": ...}.
[[nodiscard]] nlohmann::json to_json(const waveguide::ModeSpec& mode);
[[nodiscard]] waveguide::ModeSpec mode_from_json(const nlohmann::json& j);

/// Stacks serialize as {"entry": {"n": ...}, "layers": [{"n": ..., "d":
/// ...}, ...], "exit": {"n": ...}}.
[[nodiscard]] nlohmann::json to_json(const layered::MediumStack& stack);
[[nodiscard]] layered::MediumStack stack_from_json(const nlohmann::json& j);

/// Sampled scattering coefficients serialize as {"grid": ..., "c": [...]}.
[[nodiscard]] nlohmann::json to_json(const oracle::Profile1D& profile);
[[nodiscard]] oracle::Profile1D profile_from_json(const nlohmann::json& j);

/// Scattering amplitudes serialize as {"r": [re, im], "t": [re, im]}.
[[nodiscard]] nlohmann::json to_json(const oracle::Amplitudes& amplitudes);
[[nodiscard]] oracle::Amplitudes amplitudes_from_json(const nlohmann::json& j);

}  // namespace evanwave::io
