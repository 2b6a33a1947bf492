#include "casimir/units.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace casimir {

ReferenceScale::ReferenceScale(double plasma_energy_ev)
    : plasma_energy_ev(plasma_energy_ev) {
    if (!(plasma_energy_ev > 0.0))
        throw std::domain_error("ReferenceScale: plasma_energy_ev must be > 0");
}

double length_unit_nm(const ReferenceScale& scale) {
    return hbar_c_ev_nm / scale.plasma_energy_ev;
}

double force_unit_si(const ReferenceScale& scale) {
    // k_P in 1/nm; f0 = pi^2/240 * hbar c * k_P^4, in eV/nm^3 then pascals.
    const double k_p = scale.plasma_energy_ev / hbar_c_ev_nm;
    const double k_p4 = k_p * k_p * k_p * k_p;
    const double f0_ev_nm3 =
        std::numbers::pi * std::numbers::pi / 240.0 * hbar_c_ev_nm * k_p4;
    return f0_ev_nm3 * ev_per_nm3_to_pascal;
}

double distance_si_um(const ReferenceScale& scale, double d_reduced) {
    if (!(d_reduced > 0.0))
        throw std::domain_error("distance_si_um: d_reduced must be > 0");
    return d_reduced * length_unit_nm(scale) * 1e-3;
}

double reduced_temperature(const ReferenceScale& scale, double kelvin) {
    if (kelvin < 0.0)
        throw std::domain_error("reduced_temperature: kelvin must be >= 0");
    return k_boltzmann_ev_per_k * kelvin / scale.plasma_energy_ev;
}

}  // namespace casimir
