#ifndef CASIMIR_FORCE_HPP
#define CASIMIR_FORCE_HPP

#include <cstddef>

#include "casimir/optics.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

/// Two stacks facing each other across a vacuum gap of reduced width d.
struct CavityConfig {
    LayerStack left;
    LayerStack right;
    double gap;  // in 1/k_P units

    CavityConfig(LayerStack left, LayerStack right, double gap);
};

struct QuadratureSettings {
    double rel_tol = 1e-8;
    double x_max = 80.0;  // truncation of the radial integral
    int max_subdivisions = 5000;
    double matsubara_term_tol = 1e-10;
    std::size_t max_matsubara_terms = 2000000;

    void validate() const;
};

/// Sign convention: positive = attractive (f_id > 0 for ideal mirrors),
/// negative = repulsive.
struct ForceResult {
    double f_over_f0 = 0.0;   // force in f0 = pi^2 hbar c k_P^4 / 240 units
    double f_over_fid = 0.0;  // force over f_id(d) = f0 / d^4
    double est_error = 0.0;   // quadrature estimate, in f_over_fid units
    std::size_t evaluations = 0;
    std::size_t matsubara_terms = 0;
};

// Polar integrand of the T = 0 force: x^3 e^{-x} sin(phi) times the
// polarization sum, with materials evaluated at xi = (x/2d) cos(phi),
// k = (x/2d) sin(phi).
double integrand_polar(double x, double phi, const CavityConfig& config);

// T = 0 force via the polar (x, phi) double integral,
// f/f_id = (15 / 2 pi^4) * Int dx Int dphi integrand_polar.
ForceResult force_T0_polar(const CavityConfig& config,
                           const QuadratureSettings& settings = {});

// Same quantity via the direct (xi, k) integral,
// f/f0 = (120 / pi^4) * Int dxi Int dk k kappa sum_q R e^{-2 kappa d} /
// (1 - R e^{-2 kappa d}); the independent cross-check path.
ForceResult force_T0_cartesian(const CavityConfig& config,
                               const QuadratureSettings& settings = {});

// k-integral at the Matsubara frequency xi_m = 2 pi m t, weighted by
// (1 - delta_m0 / 2). The m = 0 term takes the static reflection limits;
// for bare half-spaces it reduces to a trilogarithm series.
double matsubara_term(const CavityConfig& config, std::size_t m, double t,
                      const QuadratureSettings& settings = {});

// Finite-temperature force, f/f0 = (120 / pi^4) (2 pi t) sum_m term_m,
// summed until two consecutive terms fall below matsubara_term_tol times
// the running sum.
ForceResult force_finite_T(const CavityConfig& config, double t,
                           const QuadratureSettings& settings = {});

}  // namespace casimir

#endif
