#ifndef CASIMIR_MATERIALS_HPP
#define CASIMIR_MATERIALS_HPP

#include <limits>

namespace casimir {

/// Single Drude-Lorentz resonance in reduced units (frequencies measured
/// in omega_P of the reference metal). omega_t = 0 with omega_p > 0 is a
/// Drude metal; its static permittivity is the +inf sentinel.
struct OscillatorParams {
    double omega_p = 0.0;  // coupling strength
    double omega_t = 0.0;  // resonance position
    double gamma = 0.0;    // linewidth

    OscillatorParams() = default;
    OscillatorParams(double omega_p, double omega_t, double gamma);

    // Relative parameterization: P = omega_p/omega_t, Q = omega_t/omega_P.
    static OscillatorParams from_relative(double p, double q,
                                          double gamma_over_omega_t);
};

// eps(i xi) or mu(i xi) = 1 + omega_p^2 / (omega_t^2 + xi^2 + gamma xi).
// Returns +inf for a Drude metal at xi = 0.
double response_at_imag_freq(const OscillatorParams& params, double xi);

// xi -> 0 limit; +inf sentinel for a Drude metal.
double static_value(const OscillatorParams& params);

/// One response function: either a dispersive oscillator or a
/// frequency-independent constant (which may be the +inf mirror sentinel).
class Response {
  public:
    Response() : constant_(1.0), is_constant_(true) {}

    static Response constant(double value);
    static Response oscillator(const OscillatorParams& params);

    double at(double xi) const;
    double static_value() const;
    bool is_constant() const { return is_constant_; }
    bool is_dispersive() const { return !is_constant_; }
    const OscillatorParams& params() const { return params_; }

  private:
    OscillatorParams params_;
    double constant_ = 1.0;
    bool is_constant_ = true;
};

struct MaterialModel {
    Response electric;
    Response magnetic;

    static MaterialModel vacuum() { return {}; }
    bool is_vacuum() const;
};

inline constexpr double infinite_response =
    std::numeric_limits<double>::infinity();

}  // namespace casimir

#endif
