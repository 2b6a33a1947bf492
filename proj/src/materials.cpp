#include "casimir/materials.hpp"

#include <cmath>
#include <stdexcept>

namespace casimir {

OscillatorParams::OscillatorParams(double omega_p, double omega_t, double gamma)
    : omega_p(omega_p), omega_t(omega_t), gamma(gamma) {
    if (!(omega_p >= 0.0) || !(omega_t >= 0.0) || !(gamma >= 0.0))
        throw std::domain_error(
            "OscillatorParams: omega_p, omega_t, gamma must be >= 0");
}

OscillatorParams OscillatorParams::from_relative(double p, double q,
                                                 double gamma_over_omega_t) {
    if (!(p >= 0.0) || !(q >= 0.0) || !(gamma_over_omega_t >= 0.0))
        throw std::domain_error("from_relative: parameters must be >= 0");
    return OscillatorParams(p * q, q, gamma_over_omega_t * q);
}

double response_at_imag_freq(const OscillatorParams& params, double xi) {
    if (!(xi >= 0.0))
        throw std::domain_error("response_at_imag_freq: xi must be >= 0");
    if (params.omega_p == 0.0) return 1.0;
    const double denom =
        params.omega_t * params.omega_t + xi * xi + params.gamma * xi;
    if (denom == 0.0) return infinite_response;
    return 1.0 + params.omega_p * params.omega_p / denom;
}

double static_value(const OscillatorParams& params) {
    if (params.omega_p == 0.0) return 1.0;
    if (params.omega_t == 0.0) return infinite_response;
    const double ratio = params.omega_p / params.omega_t;
    return 1.0 + ratio * ratio;
}

Response Response::constant(double value) {
    if (!(value >= 1.0))  // admits +inf
        throw std::domain_error("Response::constant: value must be >= 1");
    Response r;
    r.constant_ = value;
    r.is_constant_ = true;
    return r;
}

Response Response::oscillator(const OscillatorParams& params) {
    Response r;
    r.params_ = params;
    r.is_constant_ = false;
    return r;
}

double Response::at(double xi) const {
    if (is_constant_) {
        if (!(xi >= 0.0)) throw std::domain_error("Response::at: xi must be >= 0");
        return constant_;
    }
    return response_at_imag_freq(params_, xi);
}

double Response::static_value() const {
    if (is_constant_) return constant_;
    return casimir::static_value(params_);
}

bool MaterialModel::is_vacuum() const {
    auto unity = [](const Response& r) {
        return r.is_constant() ? r.static_value() == 1.0
                               : r.params().omega_p == 0.0;
    };
    return unity(electric) && unity(magnetic);
}

}  // namespace casimir
