#ifndef CASIMIR_ANALYSIS_HPP
#define CASIMIR_ANALYSIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "casimir/force.hpp"

namespace casimir {

/// Applies a value to a named material parameter of a CavityConfig.
/// Paths: {left|right}.{electric|magnetic}.{omega_p|omega_t|gamma|P|Q},
/// addressing the stack terminator, or "d" for the gap width.
/// Setting Q rescales omega_p and gamma so that P and gamma/omega_t stay
/// fixed; setting P keeps omega_t and the ratio gamma/omega_t.
void apply_parameter(CavityConfig& config, const std::string& path,
                     double value);

struct SweepSpec {
    CavityConfig base;
    std::string axis1, axis2;  // parameter paths
    std::vector<double> values1, values2;
    std::optional<double> temperature;  // reduced t; nullopt = T = 0
    QuadratureSettings quad;

    void validate() const;
};

struct ScanPoint {
    double a1 = 0.0, a2 = 0.0;
    double f_over_fid = 0.0, f_over_f0 = 0.0;
    double est_error = 0.0;
    std::size_t evaluations = 0;
    bool ok = false;
    std::string error;  // set when !ok
};

/// Row-major over the first axis; failed points carry an error marker
/// instead of creating gaps.
struct ScanResult {
    std::vector<double> axis1, axis2;
    std::vector<ScanPoint> points;
};

// Evaluates the force on the dense grid axis1 x axis2. threads = 0 picks
// hardware concurrency; output ordering is fixed regardless.
ScanResult sweep_2d(const SweepSpec& spec, unsigned threads = 1);

// Force versus distance over d_grid (positive, strictly monotone).
ScanResult distance_scan(const CavityConfig& config,
                         const std::vector<double>& d_grid,
                         std::optional<double> temperature = std::nullopt,
                         const QuadratureSettings& quad = {},
                         unsigned threads = 1);

// Root of f(d) = 0 inside [d_lo, d_hi] by bracketing bisection, refined to
// tol_d. If the endpoints do not bracket a sign change, the interval is
// scanned at 64 points first; returns nullopt when no sign change exists.
std::optional<double> crossover_distance(
    const CavityConfig& config, double d_lo, double d_hi, double tol_d = 0.5,
    std::optional<double> temperature = std::nullopt,
    const QuadratureSettings& quad = {});

// Location and value of the most repulsive force in [d_lo, d_hi]: coarse
// 64-point scan followed by golden-section refinement. nullopt when the
// minimum is non-negative.
std::optional<std::pair<double, double>> extremal_repulsion(
    const CavityConfig& config, double d_lo, double d_hi, double tol_d = 0.5,
    std::optional<double> temperature = std::nullopt,
    const QuadratureSettings& quad = {});

}  // namespace casimir

#endif
