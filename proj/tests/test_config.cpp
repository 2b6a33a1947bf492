#include "doctest.h"

#include <cmath>
#include <string>

#include "casimir/config.hpp"

using namespace casimir;

namespace {

std::string message_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

const char* minimal = R"({
  "scale": {"plasma_energy_ev": 9.0},
  "left": "drude_gold_T0",
  "right": "vacuum",
  "gap": 850
})";

}  // namespace

TEST_CASE("minimal config parses with defaults") {
    const RunConfig c = parse_config(minimal);
    CHECK(c.scale.plasma_energy_ev == 9.0);
    CHECK(c.cavity.gap == 850.0);
    CHECK(!c.temperature_kelvin.has_value());
    CHECK(c.quad.rel_tol == 1e-8);
    CHECK(c.quad.x_max == 80.0);
    CHECK(c.quad.matsubara_term_tol == 1e-10);
    CHECK(!c.scan.has_value());
    CHECK(!c.sweep.has_value());
    CHECK(!c.bracket.has_value());
    CHECK(c.cavity.right.terminator.is_vacuum());
}

TEST_CASE("builtin material names") {
    const RunConfig c = parse_config(minimal);
    // drude_gold_T0 = {omega_p: 1, omega_t: 0, gamma: 3.9e-9}, mu = 1.
    const OscillatorParams& gold = c.cavity.left.terminator.electric.params();
    CHECK(gold.omega_p == 1.0);
    CHECK(gold.omega_t == 0.0);
    CHECK(gold.gamma == 3.9e-9);
    CHECK(c.cavity.left.terminator.magnetic.is_constant());
    CHECK(c.cavity.left.terminator.magnetic.at(1.0) == 1.0);

    const RunConfig mirror = parse_config(R"({
      "scale": {"plasma_energy_ev": 9.0},
      "left": "perfect_mirror", "right": "perfect_mirror", "gap": 1
    })");
    CHECK(std::isinf(mirror.cavity.left.terminator.electric.at(2.0)));
}

TEST_CASE("material objects: absolute, relative, and constant responses") {
    const RunConfig c = parse_config(R"({
      "scale": {"plasma_energy_ev": 9.0},
      "left": {"electric": {"omega_p": 1.0, "gamma": 3.9e-9}},
      "right": {
        "electric": {"P": 0.5, "Q": 0.1, "gamma_over_omega_t": 1e-2},
        "magnetic": {"P": 3.0, "Q": 1e-4, "gamma_over_omega_t": 1e-2}
      },
      "gap": 850
    })");
    const OscillatorParams& em = c.cavity.right.terminator.magnetic.params();
    CHECK(em.omega_p == doctest::Approx(3e-4).epsilon(1e-15));
    CHECK(em.omega_t == doctest::Approx(1e-4).epsilon(1e-15));
    CHECK(em.gamma == doctest::Approx(1e-6).epsilon(1e-15));
    CHECK(c.cavity.left.terminator.electric.params().omega_t == 0.0);

    const RunConfig k = parse_config(R"({
      "scale": {"plasma_energy_ev": 9.0},
      "left": {"electric": {"constant": 4.0}, "magnetic": {"constant": 2.0}},
      "right": {"electric": {"constant": "inf"}},
      "gap": 1
    })");
    CHECK(k.cavity.left.terminator.electric.at(10.0) == 4.0);
    CHECK(k.cavity.left.terminator.magnetic.at(10.0) == 2.0);
    CHECK(std::isinf(k.cavity.right.terminator.electric.at(10.0)));
}

TEST_CASE("layered stacks parse terminator and layers in order") {
    const RunConfig c = parse_config(R"({
      "scale": {"plasma_energy_ev": 9.0},
      "left": {
        "terminator": {"electric": {"constant": 9.0}},
        "layers": [
          {"material": {"electric": {"constant": 4.0}}, "thickness": 0.3},
          {"material": "vacuum", "thickness": 0.1}
        ]
      },
      "right": "perfect_mirror",
      "gap": 2
    })");
    REQUIRE(c.cavity.left.layers.size() == 2);
    CHECK(c.cavity.left.terminator.electric.at(1.0) == 9.0);
    CHECK(c.cavity.left.layers[0].thickness == 0.3);
    CHECK(c.cavity.left.layers[1].material.is_vacuum());
}

TEST_CASE("temperature: kelvin or the zero keyword") {
    const RunConfig zero = parse_config(R"({
      "scale": {"plasma_energy_ev": 9.0},
      "left": "vacuum", "right": "vacuum", "gap": 1,
      "temperature": "zero"
    })");
    CHECK(!zero.temperature_kelvin.has_value());

    const RunConfig warm = parse_config(R"({
      "scale": {"plasma_energy_ev": 9.0},
      "left": "vacuum", "right": "vacuum", "gap": 1,
      "temperature": 300
    })");
    REQUIRE(warm.temperature_kelvin.has_value());
    CHECK(*warm.temperature_kelvin == 300.0);

    CHECK(message_of(R"({
      "scale": {"plasma_energy_ev": 9.0},
      "left": "vacuum", "right": "vacuum", "gap": 1,
      "temperature": -4
    })").find("temperature") != std::string::npos);
}

TEST_CASE("scan, sweep, and bracket blocks") {
    const RunConfig c = parse_config(R"({
      "scale": {"plasma_energy_ev": 9.0},
      "left": "drude_gold_T0", "right": "vacuum", "gap": 1,
      "scan": {"d_min": 100, "d_max": 2000, "points": 5, "spacing": "log"},
      "sweep": {
        "axis1": {"target": "right.electric.P", "min": 0, "max": 10, "points": 3},
        "axis2": {"target": "right.magnetic.P", "min": 0, "max": 10, "points": 2}
      },
      "bracket": [100, 2000]
    })");
    REQUIRE(c.scan.has_value());
    const auto d = c.scan->grid();
    REQUIRE(d.size() == 5);
    CHECK(d.front() == doctest::Approx(100.0));
    CHECK(d.back() == doctest::Approx(2000.0));
    // Log spacing: constant ratio between neighbours.
    CHECK(d[1] / d[0] == doctest::Approx(d[2] / d[1]).epsilon(1e-12));

    REQUIRE(c.sweep.has_value());
    CHECK(c.sweep->first.target == "right.electric.P");
    CHECK(c.sweep->first.grid() == std::vector<double>{0.0, 5.0, 10.0});
    CHECK(c.sweep->second.grid() == std::vector<double>{0.0, 10.0});

    REQUIRE(c.bracket.has_value());
    CHECK(c.bracket->first == 100.0);
    CHECK(c.bracket->second == 2000.0);
}

TEST_CASE("empty document reports the required fields") {
    const std::string msg = message_of("{}");
    CHECK(msg.find("scale") != std::string::npos);
    CHECK(msg.find("left") != std::string::npos);
    CHECK(msg.find("right") != std::string::npos);
    CHECK(msg.find("gap") != std::string::npos);
}

TEST_CASE("unknown keys are rejected with their field path") {
    CHECK(message_of(R"({
      "scale": {"plasma_energy_ev": 9.0},
      "left": "vacuum", "right": "vacuum", "gap": 1,
      "typo_key": 1
    })").find("typo_key") != std::string::npos);

    const std::string nested = message_of(R"({
      "scale": {"plasma_energy_ev": 9.0},
      "left": {"electric": {"omega_p": 1.0, "bogus": 2}},
      "right": "vacuum", "gap": 1
    })");
    CHECK(nested.find("left.electric.bogus") != std::string::npos);
}

TEST_CASE("malformed inputs raise ConfigError with a location") {
    CHECK_THROWS_AS(parse_config("not json"), ConfigError);
    CHECK_THROWS_AS(parse_config("[1, 2]"), ConfigError);
    CHECK(message_of(R"({
      "scale": {"plasma_energy_ev": -9.0},
      "left": "vacuum", "right": "vacuum", "gap": 1
    })").find("plasma_energy_ev") != std::string::npos);
    CHECK(message_of(R"({
      "scale": {"plasma_energy_ev": 9.0},
      "left": "unobtainium", "right": "vacuum", "gap": 1
    })").find("unobtainium") != std::string::npos);
    CHECK(message_of(R"({
      "scale": {"plasma_energy_ev": 9.0},
      "left": "vacuum", "right": "vacuum", "gap": 0
    })").find("gap") != std::string::npos);
    CHECK(message_of(R"({
      "scale": {"plasma_energy_ev": 9.0},
      "left": {"electric": {"omega_p": 1, "P": 1}},
      "right": "vacuum", "gap": 1
    })").find("left") != std::string::npos);
    CHECK(message_of(R"({
      "scale": {"plasma_energy_ev": 9.0},
      "left": {"electric": {"constant": 0.5}},
      "right": "vacuum", "gap": 1
    })").find("constant") != std::string::npos);
    CHECK(message_of(R"({
      "scale": {"plasma_energy_ev": 9.0},
      "left": "vacuum", "right": "vacuum", "gap": 1,
      "quadrature": {"rel_tol": 2.0}
    })").find("quadrature") != std::string::npos);
    CHECK(message_of(R"({
      "scale": {"plasma_energy_ev": 9.0},
      "left": "vacuum", "right": "vacuum", "gap": 1,
      "scan": {"d_min": 5, "d_max": 1, "points": 3}
    })").find("scan") != std::string::npos);
    CHECK(message_of(R"({
      "scale": {"plasma_energy_ev": 9.0},
      "left": "vacuum", "right": "vacuum", "gap": 1,
      "bracket": [100]
    })").find("bracket") != std::string::npos);
}
