#include "casimir/optics.hpp"

#include <cmath>
#include <stdexcept>

namespace casimir {

namespace {

bool is_inf(double v) { return std::isinf(v); }

void require_passive(double eps, double mu) {
    if (!(eps >= 1.0) || !(mu >= 1.0))
        throw std::domain_error("reflection: passive media require eps, mu >= 1");
}

// r = (a_j kap_i - a_i kap_j) / (a_j kap_i + a_i kap_j), with the
// infinite-response limits taken algebraically. `a` is eps for TM, mu
// for TE.
double fresnel_ratio(double a_i, double kap_i, double a_j, double kap_j) {
    if (is_inf(a_j)) {
        if (is_inf(a_i))
            throw std::domain_error("reflection: both media have infinite response");
        return 1.0;
    }
    if (is_inf(a_i)) return -1.0;
    if (is_inf(kap_j)) return -1.0;
    if (is_inf(kap_i)) return 1.0;
    const double num = a_j * kap_i - a_i * kap_j;
    const double den = a_j * kap_i + a_i * kap_j;
    return num / den;
}

// kappa inside a medium. At xi = 0 the limit is k for every response,
// including the infinite sentinel (eps * xi^2 -> 0 for a Drude metal; the
// same convention carries r_s(0) = (mu0 - 1)/(mu0 + 1) for sentinel eps).
double kappa_in(double eps, double mu, double xi, double k) {
    if (xi == 0.0) return k;
    return std::sqrt(eps * mu * xi * xi + k * k);
}

struct MediumAt {
    double eps;
    double mu;
};

MediumAt evaluate(const MaterialModel& m, double xi) {
    if (xi == 0.0) return {m.electric.static_value(), m.magnetic.static_value()};
    return {m.electric.at(xi), m.magnetic.at(xi)};
}

double reflect_pair(Polarization pol, double eps_i, double mu_i, double kap_i,
                    double eps_j, double mu_j, double kap_j) {
    if (pol == Polarization::TM)
        return fresnel_ratio(eps_i, kap_i, eps_j, kap_j);
    return fresnel_ratio(mu_i, kap_i, mu_j, kap_j);
}

}  // namespace

TransverseMode::TransverseMode(double xi, double k, Polarization pol)
    : xi(xi), k(k), pol(pol) {
    if (!(xi >= 0.0) || !(k >= 0.0))
        throw std::domain_error("TransverseMode: xi, k must be >= 0");
    if (xi == 0.0 && k == 0.0)
        throw std::domain_error("TransverseMode: xi = k = 0 is degenerate");
}

void LayerStack::validate() const {
    for (const auto& layer : layers)
        if (!(layer.thickness > 0.0))
            throw std::domain_error("LayerStack: layer thickness must be > 0");
}

double kappa(double eps, double mu, double xi, double k) {
    if (!(xi >= 0.0) || !(k >= 0.0) || (xi == 0.0 && k == 0.0))
        throw std::domain_error("kappa: invalid (xi, k)");
    if (xi == 0.0) return k;
    if (is_inf(eps) || is_inf(mu))
        throw std::domain_error("kappa: infinite response at xi > 0");
    return std::sqrt(eps * mu * xi * xi + k * k);
}

double half_space_reflection(const TransverseMode& mode, double eps, double mu) {
    require_passive(eps, mu);
    const double kap0 = kappa_in(1.0, 1.0, mode.xi, mode.k);
    const double kap_m = kappa_in(eps, mu, mode.xi, mode.k);
    return reflect_pair(mode.pol, 1.0, 1.0, kap0, eps, mu, kap_m);
}

double static_reflection(Polarization pol, const MaterialModel& material) {
    const double v = pol == Polarization::TM ? material.electric.static_value()
                                             : material.magnetic.static_value();
    if (is_inf(v)) return 1.0;
    return (v - 1.0) / (v + 1.0);
}

double interface_reflection(const TransverseMode& mode, double eps_i,
                            double mu_i, double eps_j, double mu_j) {
    require_passive(eps_i, mu_i);
    require_passive(eps_j, mu_j);
    const double kap_i = kappa_in(eps_i, mu_i, mode.xi, mode.k);
    const double kap_j = kappa_in(eps_j, mu_j, mode.xi, mode.k);
    return reflect_pair(mode.pol, eps_i, mu_i, kap_i, eps_j, mu_j, kap_j);
}

double stack_reflection(const LayerStack& stack, const TransverseMode& mode) {
    stack.validate();
    const double xi = mode.xi;
    const double k = mode.k;

    // Media from the gap inward: vacuum, layers..., terminator.
    const std::size_t n = stack.layers.size();
    auto medium = [&](std::size_t idx) -> const MaterialModel& {
        return idx < n ? stack.layers[idx].material : stack.terminator;
    };

    // r seen at the deepest interface, then folded outward through each
    // finite layer.
    double r = 0.0;
    {
        const MediumAt front = n > 0 ? evaluate(medium(n - 1), xi)
                                     : MediumAt{1.0, 1.0};
        const MediumAt behind = evaluate(medium(n), xi);
        const double kap_f = kappa_in(front.eps, front.mu, xi, k);
        const double kap_b = kappa_in(behind.eps, behind.mu, xi, k);
        r = reflect_pair(mode.pol, front.eps, front.mu, kap_f, behind.eps,
                         behind.mu, kap_b);
    }

    for (std::size_t step = n; step-- > 0;) {
        const MediumAt layer = evaluate(medium(step), xi);
        const double kap_layer = kappa_in(layer.eps, layer.mu, xi, k);
        const double atten =
            is_inf(kap_layer)
                ? 0.0
                : std::exp(-2.0 * kap_layer * stack.layers[step].thickness);

        const MediumAt front = step > 0 ? evaluate(medium(step - 1), xi)
                                        : MediumAt{1.0, 1.0};
        const double kap_f = kappa_in(front.eps, front.mu, xi, k);
        const double r_front = reflect_pair(mode.pol, front.eps, front.mu, kap_f,
                                            layer.eps, layer.mu, kap_layer);

        r = (r_front + r * atten) / (1.0 + r_front * r * atten);
    }
    return r;
}

}  // namespace casimir
