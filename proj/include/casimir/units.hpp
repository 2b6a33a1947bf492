#ifndef CASIMIR_UNITS_HPP
#define CASIMIR_UNITS_HPP

namespace casimir {

// CODATA values, compiled in.
inline constexpr double hbar_c_ev_nm = 197.3269804;       // eV nm
inline constexpr double k_boltzmann_ev_per_k = 8.617333e-5;  // eV/K
inline constexpr double ev_per_nm3_to_pascal = 1.602176634e8;

/// Reference metal defining the reduced unit system: frequencies in
/// omega_P, lengths in 1/k_P = c/omega_P, pressures in
/// f0 = pi^2 hbar c k_P^4 / 240.
struct ReferenceScale {
    double plasma_energy_ev;  // hbar * omega_P

    explicit ReferenceScale(double plasma_energy_ev);
};

// 1/k_P in nanometers.
double length_unit_nm(const ReferenceScale& scale);

// f0 in N/m^2.
double force_unit_si(const ReferenceScale& scale);

// Reduced gap width -> micrometers.
double distance_si_um(const ReferenceScale& scale, double d_reduced);

// Kelvin -> t = k_B T / (hbar omega_P).
double reduced_temperature(const ReferenceScale& scale, double kelvin);

}  // namespace casimir

#endif
