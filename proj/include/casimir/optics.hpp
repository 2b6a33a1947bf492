#ifndef CASIMIR_OPTICS_HPP
#define CASIMIR_OPTICS_HPP

#include <vector>

#include "casimir/materials.hpp"

namespace casimir {

enum class Polarization { TM, TE };  // p, s

/// Evaluation point on the imaginary frequency axis: omega = i xi,
/// in-plane wavevector k, both in reduced units (c = 1).
struct TransverseMode {
    double xi;
    double k;
    Polarization pol;

    TransverseMode(double xi, double k, Polarization pol);
};

struct Layer {
    MaterialModel material;
    double thickness;  // in 1/k_P units, > 0
};

/// Semi-infinite terminator plus finite layers, ordered from the gap
/// outward. An empty layer list is a bare half-space.
struct LayerStack {
    MaterialModel terminator;
    std::vector<Layer> layers;

    static LayerStack half_space(const MaterialModel& m) { return {m, {}}; }
    void validate() const;
};

// kappa = sqrt(eps mu xi^2 + k^2). eps/mu may be the +inf sentinel only
// at xi = 0.
double kappa(double eps, double mu, double xi, double k);

// Vacuum | medium Fresnel coefficient at imaginary frequency; handles the
// +inf sentinel by its algebraic limit (r_p -> +1, r_s -> -1 at xi > 0).
double half_space_reflection(const TransverseMode& mode, double eps, double mu);

// xi -> 0 limit at fixed k > 0: r_p = (eps0-1)/(eps0+1), r_s likewise in
// mu0; k-independent. Drude metal gives (1, 0).
double static_reflection(Polarization pol, const MaterialModel& material);

// Fresnel coefficient between two media; reduces to half_space_reflection
// when medium i is vacuum, and obeys r_ij = -r_ji.
double interface_reflection(const TransverseMode& mode, double eps_i,
                            double mu_i, double eps_j, double mu_j);

// Reflection coefficient of a layered stack seen from the vacuum gap,
// by the standard recursion from the terminator inward. At xi = 0 the
// static limits are taken analytically.
double stack_reflection(const LayerStack& stack, const TransverseMode& mode);

}  // namespace casimir

#endif
