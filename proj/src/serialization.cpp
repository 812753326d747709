#include "evanwave/serialization.hpp"

#include <array>
#include <cstdio>

namespace evanwave::io {

namespace {

using nlohmann::json;

std::vector<std::array<double, 2>> complex_pairs(
    std::span<const std::complex<double>> values) {
  std::vector<std::array<double, 2>> pairs;
  pairs.reserve(values.size());
  for (const auto& v : values) {
    pairs.push_back({v.real(), v.imag()});
  }
  return pairs;
}

std::vector<std::complex<double>> pairs_to_complex(const json& j) {
  std::vector<std::complex<double>> values;
  values.reserve(j.size());
  for (const auto& pair : j) {
    values.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  return values;
}

}  // namespace

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

json to_json(const Grid1D& grid) {
  return json{{"x_min", grid.x_min()}, {"x_max", grid.x_max()}, {"n", grid.size()}};
}

Grid1D grid_from_json(const json& j) {
  return Grid1D(j.at("x_min").get<double>(), j.at("x_max").get<double>(),
                j.at("n").get<std::size_t>());
}

json to_json(const ComplexField1D& field) {
  return json{{"grid", to_json(field.grid())}, {"values", complex_pairs(field.values())}};
}

ComplexField1D complex_field_from_json(const json& j) {
  return ComplexField1D(grid_from_json(j.at("grid")),
                        pairs_to_complex(j.at("values")));
}

json to_json(const PotentialProfile& potential) {
  return json{{"grid", to_json(potential.grid())},
              {"V", std::vector<double>(potential.v().begin(), potential.v().end())}};
}

PotentialProfile potential_from_json(const json& j) {
  return PotentialProfile(grid_from_json(j.at("grid")),
                          j.at("V").get<std::vector<double>>());
}

json to_json(const waveguide::ModeSpec& mode) {
  return json{{"a", mode.a}, {"b", mode.b}, {"n1", mode.n1}, {"n2", mode.n2}};
}

waveguide::ModeSpec mode_from_json(const json& j) {
  return waveguide::ModeSpec(j.at("a").get<double>(), j.at("b").get<double>(),
                             j.at("n1").get<int>(), j.at("n2").get<int>());
}

json to_json(const layered::MediumStack& stack) {
  json layers = json::array();
  for (const auto& layer : stack.layers) {
    layers.push_back(json{{"n", layer.medium.n}, {"d", layer.thickness}});
  }
  return json{{"entry", json{{"n", stack.entry.n}}},
              {"layers", std::move(layers)},
              {"exit", json{{"n", stack.exit.n}}}};
}

layered::MediumStack stack_from_json(const json& j) {
  std::vector<layered::Layer> layers;
  for (const auto& layer : j.at("layers")) {
    layers.emplace_back(layered::Medium(layer.at("n").get<double>()),
                        layer.at("d").get<double>());
  }
  return layered::MediumStack(layered::Medium(j.at("entry").at("n").get<double>()),
                              std::move(layers),
                              layered::Medium(j.at("exit").at("n").get<double>()));
}

json to_json(const oracle::Profile1D& profile) {
  return json{{"grid", to_json(profile.grid())},
              {"c", std::vector<double>(profile.coefficient().begin(),
                                        profile.coefficient().end())}};
}

oracle::Profile1D profile_from_json(const json& j) {
  return oracle::Profile1D(grid_from_json(j.at("grid")),
                           j.at("c").get<std::vector<double>>());
}

json to_json(const oracle::Amplitudes& amplitudes) {
  return json{{"r", {amplitudes.r.real(), amplitudes.r.imag()}},
              {"t", {amplitudes.t.real(), amplitudes.t.imag()}}};
}

oracle::Amplitudes amplitudes_from_json(const json& j) {
  const auto& r = j.at("r");
  const auto& t = j.at("t");
  return oracle::Amplitudes{{r.at(0).get<double>(), r.at(1).get<double>()},
                            {t.at(0).get<double>(), t.at(1).get<double>()}};
}

}  // namespace evanwave::io
