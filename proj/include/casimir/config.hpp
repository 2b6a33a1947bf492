#ifndef CASIMIR_CONFIG_HPP
#define CASIMIR_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "casimir/analysis.hpp"
#include "casimir/force.hpp"
#include "casimir/units.hpp"

namespace casimir {

/// Validation failure with the offending field path in the message.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ScanBlock {
    double d_min = 0.0;
    double d_max = 0.0;
    int points = 0;
    bool log_spacing = false;

    std::vector<double> grid() const;
};

struct SweepAxisBlock {
    std::string target;
    double min = 0.0;
    double max = 0.0;
    int points = 0;

    std::vector<double> grid() const;
};

/// A fully validated run: reference scale, cavity, temperature and
/// quadrature settings, plus optional command-specific blocks.
struct RunConfig {
    ReferenceScale scale;
    CavityConfig cavity;
    std::optional<double> temperature_kelvin;  // nullopt = T = 0 path
    QuadratureSettings quad;
    std::optional<ScanBlock> scan;
    std::optional<std::pair<SweepAxisBlock, SweepAxisBlock>> sweep;
    std::optional<std::pair<double, double>> bracket;
};

// Parses and validates a JSON run configuration. Material blocks accept
// absolute reduced parameters {omega_p, omega_t, gamma}, relative
// {P, Q, gamma_over_omega_t}, {constant: x | "inf"}, or the reserved names
// "vacuum", "drude_gold_T0", "perfect_mirror". Unknown keys are rejected.
RunConfig parse_config(const std::string& text);

}  // namespace casimir

#endif
