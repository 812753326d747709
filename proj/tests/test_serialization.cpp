#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "evanwave/serialization.hpp"

using namespace evanwave;
using nlohmann::json;
using Complex = std::complex<double>;

TEST_CASE("format_number round-trips doubles through text") {
  for (double value : {0.0, 1.0, -1.0 / 3.0, 0.1, 6.283185307179586, 1e-300,
                       -2.2250738585072014e-308, 12345678.9012345678}) {
    const std::string text = io::format_number(value);
    CHECK(std::strtod(text.c_str(), nullptr) == value);
  }
}

TEST_CASE("grid serialization uses the documented keys and round-trips") {
  const Grid1D grid(-1.5, 2.5, 17);
  const json j = io::to_json(grid);
  CHECK(j.at("x_min").get<double>() == -1.5);
  CHECK(j.at("x_max").get<double>() == 2.5);
  CHECK(j.at("n").get<std::size_t>() == 17);
  CHECK(j.size() == 3);

  const Grid1D back = io::grid_from_json(j);
  CHECK(back == grid);
}

TEST_CASE("complex fields round-trip with [re, im] pairs") {
  const Grid1D grid(0.0, 1.0, 5);
  std::vector<Complex> values;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values.emplace_back(std::cos(grid.x(i)), std::sin(grid.x(i)));
  }
  const ComplexField1D field(grid, values);

  const json j = io::to_json(field);
  CHECK(j.at("values").size() == 5);
  CHECK(j.at("values").at(2).at(0).get<double>() == values[2].real());
  CHECK(j.at("values").at(2).at(1).get<double>() == values[2].imag());

  const ComplexField1D back = io::complex_field_from_json(j);
  CHECK(back.grid() == grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(back.values()[i] == values[i]);
  }
}

TEST_CASE("potentials round-trip under the \"V\" key") {
  const Grid1D grid(0.0, 2.0, 9);
  std::vector<double> v;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    v.push_back(grid.x(i) * grid.x(i));
  }
  const PotentialProfile potential(grid, v);
  const json j = io::to_json(potential);
  CHECK(j.contains("V"));
  CHECK(j.at("V").size() == 9);

  const PotentialProfile back = io::potential_from_json(j);
  CHECK(back.grid() == grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(back.v()[i] == v[i]);
  }
}

TEST_CASE("mode specs round-trip") {
  const waveguide::ModeSpec mode(0.8, 1.3, 2, 3);
  const json j = io::to_json(mode);
  CHECK(j.at("a").get<double>() == 0.8);
  CHECK(j.at("b").get<double>() == 1.3);
  CHECK(j.at("n1").get<int>() == 2);
  CHECK(j.at("n2").get<int>() == 3);

  const waveguide::ModeSpec back = io::mode_from_json(j);
  CHECK(back.a == mode.a);
  CHECK(back.b == mode.b);
  CHECK(back.n1 == mode.n1);
  CHECK(back.n2 == mode.n2);
}

TEST_CASE("stacks round-trip with nested entry/layers/exit") {
  const layered::MediumStack stack{
      layered::Medium{1.5},
      {layered::Layer{layered::Medium{1.0}, 0.7},
       layered::Layer{layered::Medium{2.1}, 0.2}},
      layered::Medium{1.3}};
  const json j = io::to_json(stack);
  CHECK(j.at("entry").at("n").get<double>() == 1.5);
  CHECK(j.at("exit").at("n").get<double>() == 1.3);
  REQUIRE(j.at("layers").size() == 2);
  CHECK(j.at("layers").at(0).at("n").get<double>() == 1.0);
  CHECK(j.at("layers").at(0).at("d").get<double>() == 0.7);
  CHECK(j.at("layers").at(1).at("n").get<double>() == 2.1);

  const layered::MediumStack back = io::stack_from_json(j);
  CHECK(back.entry.n == stack.entry.n);
  CHECK(back.exit.n == stack.exit.n);
  REQUIRE(back.layers.size() == 2);
  CHECK(back.layers[1].thickness == 0.2);

  // Invalid physical values surface as construction errors, not as
  // silently accepted JSON.
  json bad = j;
  bad["layers"][0]["d"] = -1.0;
  CHECK_THROWS_AS((void)io::stack_from_json(bad), std::invalid_argument);
}

TEST_CASE("sampled profiles round-trip under the \"c\" key") {
  const Grid1D grid(0.0, 4.0, 41);
  std::vector<double> c(grid.size(), 2.0);
  for (std::size_t i = 15; i < 26; ++i) {
    c[i] = -1.0;
  }
  const oracle::Profile1D profile(grid, c);
  const json j = io::to_json(profile);
  CHECK(j.at("c").size() == 41);

  const oracle::Profile1D back = io::profile_from_json(j);
  CHECK(back.grid() == grid);
  CHECK(back.coefficient()[20] == -1.0);
  CHECK(back.coefficient()[0] == 2.0);
}

TEST_CASE("amplitudes round-trip as [re, im] pairs") {
  const oracle::Amplitudes amps{Complex{-0.25, 0.5}, Complex{0.125, -0.75}};
  const json j = io::to_json(amps);
  CHECK(j.at("r").at(0).get<double>() == -0.25);
  CHECK(j.at("r").at(1).get<double>() == 0.5);
  CHECK(j.at("t").at(0).get<double>() == 0.125);
  CHECK(j.at("t").at(1).get<double>() == -0.75);

  const oracle::Amplitudes back = io::amplitudes_from_json(j);
  CHECK(back.r == amps.r);
  CHECK(back.t == amps.t);
}

TEST_CASE("missing keys raise json errors for the CLI to map") {
  CHECK_THROWS_AS((void)io::grid_from_json(json{{"x_min", 0.0}}), json::exception);
  CHECK_THROWS_AS((void)io::stack_from_json(json::object()), json::exception);
}
