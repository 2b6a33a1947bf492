#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "casimir/analysis.hpp"

using namespace casimir;

namespace {

MaterialModel drude_gold() {
    MaterialModel m;
    m.electric = Response::oscillator(OscillatorParams(1.0, 0.0, 3.9e-9));
    return m;
}

MaterialModel realistic_magnetodielectric() {
    MaterialModel m;
    m.electric = Response::oscillator(OscillatorParams::from_relative(0.5, 0.1, 1e-2));
    m.magnetic = Response::oscillator(OscillatorParams::from_relative(3.0, 1e-4, 1e-2));
    return m;
}

CavityConfig realistic_cavity(double d) {
    return CavityConfig(LayerStack::half_space(drude_gold()),
                        LayerStack::half_space(realistic_magnetodielectric()), d);
}

const OscillatorParams& right_magnetic(const CavityConfig& c) {
    return c.right.terminator.magnetic.params();
}

}  // namespace

TEST_CASE("apply_parameter: absolute parameters and the gap") {
    CavityConfig c = realistic_cavity(850.0);
    apply_parameter(c, "d", 123.0);
    CHECK(c.gap == 123.0);

    apply_parameter(c, "right.magnetic.omega_p", 0.5);
    CHECK(right_magnetic(c).omega_p == 0.5);
    apply_parameter(c, "right.magnetic.omega_t", 0.25);
    CHECK(right_magnetic(c).omega_t == 0.25);
    apply_parameter(c, "right.magnetic.gamma", 1e-3);
    CHECK(right_magnetic(c).gamma == 1e-3);
    apply_parameter(c, "left.electric.gamma", 0.07);
    CHECK(c.left.terminator.electric.params().gamma == 0.07);
}

TEST_CASE("apply_parameter: P keeps omega_t, Q rescales the oscillator") {
    CavityConfig c = realistic_cavity(850.0);

    // Start: P = 3, Q = 1e-4, gamma/omega_t = 1e-2.
    apply_parameter(c, "right.magnetic.P", 5.0);
    CHECK(right_magnetic(c).omega_t == doctest::Approx(1e-4).epsilon(1e-14));
    CHECK(right_magnetic(c).omega_p == doctest::Approx(5e-4).epsilon(1e-14));
    CHECK(right_magnetic(c).gamma == doctest::Approx(1e-6).epsilon(1e-14));

    // Setting Q keeps P = 5 and gamma/omega_t = 1e-2 fixed.
    apply_parameter(c, "right.magnetic.Q", 0.2);
    CHECK(right_magnetic(c).omega_t == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(right_magnetic(c).omega_p == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(right_magnetic(c).gamma == doctest::Approx(2e-3).epsilon(1e-14));
}

TEST_CASE("apply_parameter: invalid paths and values are rejected") {
    CavityConfig c = realistic_cavity(850.0);
    CHECK_THROWS_AS(apply_parameter(c, "middle.electric.P", 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(apply_parameter(c, "left.thermal.P", 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(apply_parameter(c, "left.electric.bogus", 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(apply_parameter(c, "d", 0.0), std::domain_error);
    CHECK_THROWS_AS(apply_parameter(c, "left.electric.omega_p", -1.0),
                    std::domain_error);
    // Constant responses cannot be addressed through oscillator fields.
    CavityConfig vac(LayerStack::half_space(MaterialModel::vacuum()),
                     LayerStack::half_space(MaterialModel::vacuum()), 1.0);
    CHECK_THROWS_AS(apply_parameter(vac, "right.electric.P", 2.0),
                    std::domain_error);
}

TEST_CASE("sweep_2d matches pointwise evaluation and is row-major") {
    SweepSpec spec{realistic_cavity(1.0),
                   "right.electric.P",
                   "right.magnetic.P",
                   {0.5, 2.0, 8.0},
                   {1.0, 8.0},
                   std::nullopt,
                   QuadratureSettings{}};
    spec.quad.rel_tol = 1e-6;
    const ScanResult grid = sweep_2d(spec, 2);
    REQUIRE(grid.points.size() == 6);
    CHECK(grid.axis1 == spec.values1);
    CHECK(grid.axis2 == spec.values2);

    for (std::size_t i = 0; i < spec.values1.size(); ++i) {
        for (std::size_t j = 0; j < spec.values2.size(); ++j) {
            const ScanPoint& p = grid.points[i * spec.values2.size() + j];
            REQUIRE(p.ok);
            CHECK(p.a1 == spec.values1[i]);
            CHECK(p.a2 == spec.values2[j]);
            CavityConfig c = spec.base;
            apply_parameter(c, spec.axis1, p.a1);
            apply_parameter(c, spec.axis2, p.a2);
            CHECK(p.f_over_fid == force_T0_polar(c, spec.quad).f_over_fid);
        }
    }
    // Thread count must not change results.
    const ScanResult serial = sweep_2d(spec, 1);
    for (std::size_t i = 0; i < grid.points.size(); ++i)
        CHECK(grid.points[i].f_over_fid == serial.points[i].f_over_fid);
}

TEST_CASE("sweep_2d records failures per point instead of throwing") {
    SweepSpec spec{realistic_cavity(850.0),
                   "d",
                   "right.magnetic.P",
                   {850.0, -1.0},
                   {3.0},
                   std::nullopt,
                   QuadratureSettings{}};
    spec.quad.rel_tol = 1e-6;
    const ScanResult grid = sweep_2d(spec);
    REQUIRE(grid.points.size() == 2);
    CHECK(grid.points[0].ok);
    CHECK(!grid.points[1].ok);
    CHECK(!grid.points[1].error.empty());
}

TEST_CASE("distance_scan agrees with individual force calls") {
    const CavityConfig c = realistic_cavity(1.0);
    const std::vector<double> grid{100.0, 640.0, 850.0, 2000.0};
    QuadratureSettings quad;
    quad.rel_tol = 1e-7;
    const ScanResult scan = distance_scan(c, grid, std::nullopt, quad, 2);
    REQUIRE(scan.points.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        REQUIRE(scan.points[i].ok);
        CavityConfig at = c;
        at.gap = grid[i];
        CHECK(scan.points[i].f_over_f0 == force_T0_polar(at, quad).f_over_f0);
    }
    // Attraction at short range, repulsion past the crossover.
    CHECK(scan.points[0].f_over_f0 > 0.0);
    CHECK(scan.points[2].f_over_f0 < 0.0);
    CHECK(scan.points[3].f_over_f0 < 0.0);

    CHECK_THROWS_AS(distance_scan(c, {2.0, 2.0}, std::nullopt, quad),
                    std::domain_error);
}

TEST_CASE("crossover_distance finds the attraction-repulsion boundary") {
    const CavityConfig c = realistic_cavity(1.0);
    QuadratureSettings quad;
    quad.rel_tol = 1e-7;
    const auto d = crossover_distance(c, 100.0, 2000.0, 0.5, std::nullopt, quad);
    REQUIRE(d.has_value());
    CHECK(*d == doctest::Approx(640.0).epsilon(0.01));
    CavityConfig below = c, above = c;
    below.gap = *d - 5.0;
    above.gap = *d + 5.0;
    CHECK(force_T0_polar(below, quad).f_over_f0 > 0.0);
    CHECK(force_T0_polar(above, quad).f_over_f0 < 0.0);
}

TEST_CASE("crossover_distance returns nullopt when the sign never changes") {
    const CavityConfig metals(LayerStack::half_space(drude_gold()),
                              LayerStack::half_space(drude_gold()), 1.0);
    QuadratureSettings quad;
    quad.rel_tol = 1e-6;
    CHECK(!crossover_distance(metals, 1.0, 100.0, 0.5, std::nullopt, quad)
               .has_value());
}

TEST_CASE("extremal_repulsion locates the most repulsive point") {
    const CavityConfig c = realistic_cavity(1.0);
    QuadratureSettings quad;
    quad.rel_tol = 1e-7;
    const auto ext = extremal_repulsion(c, 100.0, 2000.0, 0.5, std::nullopt, quad);
    REQUIRE(ext.has_value());
    CHECK(ext->first == doctest::Approx(850.0).epsilon(0.02));
    CHECK(ext->second == doctest::Approx(-2.88e-14).epsilon(0.02));
    // Neighbourhood check: the reported minimum really is locally minimal.
    for (double d : {ext->first - 20.0, ext->first + 20.0}) {
        CavityConfig at = c;
        at.gap = d;
        CHECK(force_T0_polar(at, quad).f_over_f0 >= ext->second);
    }
}

TEST_CASE("extremal_repulsion returns nullopt for purely attractive systems") {
    const CavityConfig metals(LayerStack::half_space(drude_gold()),
                              LayerStack::half_space(drude_gold()), 1.0);
    QuadratureSettings quad;
    quad.rel_tol = 1e-6;
    CHECK(!extremal_repulsion(metals, 1.0, 100.0, 0.5, std::nullopt, quad)
               .has_value());
}
