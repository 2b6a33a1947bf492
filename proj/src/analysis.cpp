#include "casimir/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

namespace casimir {

namespace {

ForceResult evaluate_force(const CavityConfig& config,
                           std::optional<double> temperature,
                           const QuadratureSettings& quad) {
    if (temperature) return force_finite_T(config, *temperature, quad);
    return force_T0_polar(config, quad);
}

ScanPoint evaluate_point(const CavityConfig& config, double a1, double a2,
                         std::optional<double> temperature,
                         const QuadratureSettings& quad) {
    ScanPoint p;
    p.a1 = a1;
    p.a2 = a2;
    try {
        const ForceResult f = evaluate_force(config, temperature, quad);
        p.f_over_fid = f.f_over_fid;
        p.f_over_f0 = f.f_over_f0;
        p.est_error = f.est_error;
        p.evaluations = f.evaluations;
        p.ok = true;
    } catch (const std::exception& e) {
        p.error = e.what();
    }
    return p;
}

void run_indexed(std::size_t count, unsigned threads,
                 const std::function<void(std::size_t)>& task) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count;
                 i = next.fetch_add(1))
                task(i);
        });
    for (auto& th : pool) th.join();
}

void require_monotone(const std::vector<double>& grid, const char* name) {
    if (grid.empty())
        throw std::domain_error(std::string(name) + ": grid must be non-empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]) && !(grid[i] < grid[i - 1]))
            throw std::domain_error(std::string(name) +
                                    ": grid must be strictly monotone");
    const bool increasing = grid.size() < 2 || grid[1] > grid[0];
    for (std::size_t i = 1; i < grid.size(); ++i)
        if ((grid[i] > grid[i - 1]) != increasing)
            throw std::domain_error(std::string(name) +
                                    ": grid must be strictly monotone");
}

// Coarse pre-scan grid: logarithmic when the bracket spans more than a
// factor of 20, linear otherwise.
std::vector<double> prescan_grid(double d_lo, double d_hi, int n = 64) {
    std::vector<double> grid(n);
    if (d_hi / d_lo > 20.0) {
        const double ratio = std::log(d_hi / d_lo);
        for (int i = 0; i < n; ++i)
            grid[i] = d_lo * std::exp(ratio * i / (n - 1.0));
    } else {
        for (int i = 0; i < n; ++i)
            grid[i] = d_lo + (d_hi - d_lo) * i / (n - 1.0);
    }
    return grid;
}

}  // namespace

void apply_parameter(CavityConfig& config, const std::string& path,
                     double value) {
    if (path == "d") {
        if (!(value > 0.0))
            throw std::domain_error("apply_parameter: d must be > 0");
        config.gap = value;
        return;
    }
    const auto dot1 = path.find('.');
    const auto dot2 = path.find('.', dot1 + 1);
    if (dot1 == std::string::npos || dot2 == std::string::npos)
        throw std::domain_error("apply_parameter: bad path '" + path + "'");
    const std::string stack_name = path.substr(0, dot1);
    const std::string response_name = path.substr(dot1 + 1, dot2 - dot1 - 1);
    const std::string field = path.substr(dot2 + 1);
    if (stack_name != "left" && stack_name != "right")
        throw std::domain_error("apply_parameter: unknown stack '" + stack_name +
                                "'");
    if (response_name != "electric" && response_name != "magnetic")
        throw std::domain_error("apply_parameter: unknown response '" +
                                response_name + "'");

    LayerStack& stack = stack_name == "left" ? config.left : config.right;
    Response& response = response_name == "electric"
                             ? stack.terminator.electric
                             : stack.terminator.magnetic;
    if (!response.is_dispersive())
        throw std::domain_error(
            "apply_parameter: target response is not an oscillator");
    OscillatorParams p = response.params();

    if (field == "omega_p") {
        p.omega_p = value;
    } else if (field == "omega_t") {
        p.omega_t = value;
    } else if (field == "gamma") {
        p.gamma = value;
    } else if (field == "P") {
        // P = omega_p / omega_t at fixed omega_t.
        p.omega_p = value * p.omega_t;
    } else if (field == "Q") {
        // Q = omega_t / omega_P; preserves P and gamma/omega_t.
        if (p.omega_t > 0.0) {
            const double scale = value / p.omega_t;
            p.omega_p *= scale;
            p.gamma *= scale;
        }
        p.omega_t = value;
    } else {
        throw std::domain_error("apply_parameter: unknown field '" + field +
                                "'");
    }
    response = Response::oscillator(OscillatorParams(p.omega_p, p.omega_t,
                                                     p.gamma));
}

void SweepSpec::validate() const {
    require_monotone(values1, "sweep axis1");
    require_monotone(values2, "sweep axis2");
    quad.validate();
}

ScanResult sweep_2d(const SweepSpec& spec, unsigned threads) {
    spec.validate();
    ScanResult result;
    result.axis1 = spec.values1;
    result.axis2 = spec.values2;
    const std::size_t n1 = spec.values1.size();
    const std::size_t n2 = spec.values2.size();
    result.points.resize(n1 * n2);

    run_indexed(n1 * n2, threads, [&](std::size_t idx) {
        const std::size_t i = idx / n2;
        const std::size_t j = idx % n2;
        CavityConfig config = spec.base;
        ScanPoint& p = result.points[idx];
        try {
            apply_parameter(config, spec.axis1, spec.values1[i]);
            apply_parameter(config, spec.axis2, spec.values2[j]);
        } catch (const std::exception& e) {
            p.a1 = spec.values1[i];
            p.a2 = spec.values2[j];
            p.error = e.what();
            return;
        }
        p = evaluate_point(config, spec.values1[i], spec.values2[j],
                           spec.temperature, spec.quad);
    });
    return result;
}

ScanResult distance_scan(const CavityConfig& config,
                         const std::vector<double>& d_grid,
                         std::optional<double> temperature,
                         const QuadratureSettings& quad, unsigned threads) {
    require_monotone(d_grid, "distance_scan");
    for (double d : d_grid)
        if (!(d > 0.0))
            throw std::domain_error("distance_scan: distances must be > 0");

    ScanResult result;
    result.axis1 = d_grid;
    result.points.resize(d_grid.size());
    run_indexed(d_grid.size(), threads, [&](std::size_t i) {
        CavityConfig point_config = config;
        point_config.gap = d_grid[i];
        result.points[i] =
            evaluate_point(point_config, d_grid[i], 0.0, temperature, quad);
    });
    return result;
}

std::optional<double> crossover_distance(const CavityConfig& config,
                                         double d_lo, double d_hi, double tol_d,
                                         std::optional<double> temperature,
                                         const QuadratureSettings& quad) {
    if (!(d_lo > 0.0) || !(d_lo < d_hi))
        throw std::domain_error("crossover_distance: need 0 < d_lo < d_hi");

    auto f = [&](double d) {
        CavityConfig c = config;
        c.gap = d;
        return evaluate_force(c, temperature, quad).f_over_fid;
    };

    double lo = d_lo, hi = d_hi;
    double f_lo = f(lo), f_hi = f(hi);
    if (f_lo * f_hi > 0.0) {
        // Scan for a sign change before declaring none.
        const auto grid = prescan_grid(d_lo, d_hi);
        bool found = false;
        double prev_d = grid[0], prev_f = f(grid[0]);
        for (std::size_t i = 1; i < grid.size(); ++i) {
            const double fd = f(grid[i]);
            if (prev_f == 0.0) return prev_d;
            if (prev_f * fd < 0.0) {
                lo = prev_d;
                hi = grid[i];
                f_lo = prev_f;
                f_hi = fd;
                found = true;
                break;
            }
            prev_d = grid[i];
            prev_f = fd;
        }
        if (!found) return std::nullopt;
    }
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;

    while (hi - lo > tol_d) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if (f_lo * f_mid < 0.0) {
            hi = mid;
            f_hi = f_mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::optional<std::pair<double, double>> extremal_repulsion(
    const CavityConfig& config, double d_lo, double d_hi, double tol_d,
    std::optional<double> temperature, const QuadratureSettings& quad) {
    if (!(d_lo > 0.0) || !(d_lo < d_hi))
        throw std::domain_error("extremal_repulsion: need 0 < d_lo < d_hi");

    auto f = [&](double d) {
        CavityConfig c = config;
        c.gap = d;
        return evaluate_force(c, temperature, quad).f_over_f0;
    };

    const auto grid = prescan_grid(d_lo, d_hi);
    std::size_t best = 0;
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        values[i] = f(grid[i]);
        if (values[i] < values[best]) best = i;
    }
    if (values[best] >= 0.0) return std::nullopt;

    double a = grid[best > 0 ? best - 1 : best];
    double b = grid[best + 1 < grid.size() ? best + 1 : best];
    if (a >= b) return std::make_pair(grid[best], values[best]);

    // Golden-section refinement.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol_d) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    const double d_star = 0.5 * (a + b);
    const double f_star = f(d_star);
    if (f_star >= 0.0) return std::nullopt;
    return std::make_pair(d_star, f_star);
}

}  // namespace casimir
