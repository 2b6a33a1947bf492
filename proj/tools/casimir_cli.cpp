// Command-line front end: config-driven force evaluation, distance scans,
// parameter sweeps, crossover/extremum searches and unit conversion.
// Exit codes: 0 success, 1 validation error, 2 convergence failure.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "casimir/analysis.hpp"
#include "casimir/config.hpp"
#include "casimir/force.hpp"
#include "casimir/units.hpp"

namespace {

using namespace casimir;

// Shortest round-trip decimal representation, for byte-stable CSV output.
std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string sanitize(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n') c = ';';
    return s;
}

unsigned thread_count() {
    const char* env = std::getenv("CASIMIR_MD_THREADS");
    if (!env) return 0;  // auto
    unsigned value = 0;
    const auto res = std::from_chars(env, env + std::string(env).size(), value);
    if (res.ec != std::errc{}) return 0;
    return value;
}

struct Options {
    std::string config_path;
    std::string output_path;
    std::string temperature;  // "", "zero", or kelvin
    double tol = 0.0;         // 0 = keep config value
    bool si = false;
};

struct Run {
    RunConfig config;
    std::optional<double> t_reduced;  // nullopt = T = 0
};

Run load_run(const Options& opt) {
    std::ifstream in(opt.config_path);
    if (!in) throw ConfigError("cannot open config file: " + opt.config_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    RunConfig config = parse_config(buffer.str());

    if (!opt.temperature.empty()) {
        if (opt.temperature == "zero") {
            config.temperature_kelvin = std::nullopt;
        } else {
            double kelvin = 0.0;
            try {
                kelvin = std::stod(opt.temperature);
            } catch (const std::exception&) {
                throw ConfigError("--temperature: expected kelvin or \"zero\"");
            }
            if (!(kelvin > 0.0))
                throw ConfigError("--temperature: kelvin must be > 0");
            config.temperature_kelvin = kelvin;
        }
    }
    if (opt.tol > 0.0) {
        config.quad.rel_tol = opt.tol;
        config.quad.validate();
    }

    Run run{std::move(config), std::nullopt};
    if (run.config.temperature_kelvin)
        run.t_reduced =
            reduced_temperature(run.config.scale, *run.config.temperature_kelvin);
    return run;
}

std::ostream& open_sink(const Options& opt, std::ofstream& file) {
    if (opt.output_path.empty()) return std::cout;
    file.open(opt.output_path);
    if (!file) throw ConfigError("cannot open output file: " + opt.output_path);
    return file;
}

int cmd_force(const Options& opt) {
    const Run run = load_run(opt);
    const ForceResult f =
        run.t_reduced
            ? force_finite_T(run.config.cavity, *run.t_reduced, run.config.quad)
            : force_T0_polar(run.config.cavity, run.config.quad);

    std::cout << "f_over_f0 = " << fmt(f.f_over_f0) << "\n";
    std::cout << "f_over_fid = " << fmt(f.f_over_fid) << "\n";
    std::cout << "sign: " << (f.f_over_f0 > 0.0   ? "attractive"
                              : f.f_over_f0 < 0.0 ? "repulsive"
                                                  : "zero")
              << "\n";
    std::cout << "est_error = " << fmt(f.est_error)
              << ", evaluations = " << f.evaluations << "\n";
    if (f.matsubara_terms > 0)
        std::cout << "matsubara_terms = " << f.matsubara_terms << "\n";
    if (opt.si) {
        const double f0 = force_unit_si(run.config.scale);
        std::cout << "f_si_N_per_m2 = " << fmt(f.f_over_f0 * f0) << "\n";
        std::cout << "d_um = "
                  << fmt(distance_si_um(run.config.scale, run.config.cavity.gap))
                  << "\n";
    }
    return 0;
}

int cmd_scan(const Options& opt) {
    const Run run = load_run(opt);
    if (!run.config.scan)
        throw ConfigError("scan: config is missing the 'scan' block");
    const auto grid = run.config.scan->grid();
    const ScanResult result =
        distance_scan(run.config.cavity, grid, run.t_reduced, run.config.quad,
                      thread_count());

    std::ofstream file;
    std::ostream& out = open_sink(opt, file);
    out << "d_reduced,f_over_f0,f_over_fid,est_error,evaluations";
    if (opt.si) out << ",d_um,f_si_N_per_m2";
    out << "\n";
    const double f0 = force_unit_si(run.config.scale);
    bool any_failed = false;
    for (const ScanPoint& p : result.points) {
        if (!p.ok) {
            any_failed = true;
            out << fmt(p.a1) << ",error:" << sanitize(p.error) << ",,,";
            if (opt.si) out << ",,";
            out << "\n";
            continue;
        }
        out << fmt(p.a1) << ',' << fmt(p.f_over_f0) << ',' << fmt(p.f_over_fid)
            << ',' << fmt(p.est_error) << ',' << p.evaluations;
        if (opt.si)
            out << ',' << fmt(distance_si_um(run.config.scale, p.a1)) << ','
                << fmt(p.f_over_f0 * f0);
        out << "\n";
    }
    return any_failed ? 2 : 0;
}

int cmd_sweep(const Options& opt) {
    const Run run = load_run(opt);
    if (!run.config.sweep)
        throw ConfigError("sweep: config is missing the 'sweep' block");
    SweepSpec spec{run.config.cavity,
                   run.config.sweep->first.target,
                   run.config.sweep->second.target,
                   run.config.sweep->first.grid(),
                   run.config.sweep->second.grid(),
                   run.t_reduced,
                   run.config.quad};
    const ScanResult result = sweep_2d(spec, thread_count());

    std::ofstream file;
    std::ostream& out = open_sink(opt, file);
    out << "axis1,axis2,f_over_fid,f_over_f0,status\n";
    bool any_failed = false;
    for (const ScanPoint& p : result.points) {
        if (p.ok) {
            out << fmt(p.a1) << ',' << fmt(p.a2) << ',' << fmt(p.f_over_fid)
                << ',' << fmt(p.f_over_f0) << ",ok\n";
        } else {
            any_failed = true;
            out << fmt(p.a1) << ',' << fmt(p.a2) << ",,,error:"
                << sanitize(p.error) << "\n";
        }
    }
    return any_failed ? 2 : 0;
}

int cmd_crossover(const Options& opt) {
    const Run run = load_run(opt);
    if (!run.config.bracket)
        throw ConfigError("crossover: config is missing the 'bracket' block");
    const auto [lo, hi] = *run.config.bracket;
    const auto root = crossover_distance(run.config.cavity, lo, hi, 0.5,
                                         run.t_reduced, run.config.quad);

    std::ofstream file;
    std::ostream& out = open_sink(opt, file);
    out << "d_crossover_reduced";
    if (opt.si) out << ",d_um";
    out << "\n";
    if (root) {
        out << fmt(*root);
        if (opt.si) out << ',' << fmt(distance_si_um(run.config.scale, *root));
        out << "\n";
        std::cout << "crossover at k_P d = " << fmt(*root) << "\n";
    } else {
        out << "none";
        if (opt.si) out << ',';
        out << "\n";
        std::cout << "no sign change in bracket [" << fmt(lo) << ", " << fmt(hi)
                  << "]\n";
    }
    return 0;
}

int cmd_extremum(const Options& opt) {
    const Run run = load_run(opt);
    if (!run.config.bracket)
        throw ConfigError("extremum: config is missing the 'bracket' block");
    const auto [lo, hi] = *run.config.bracket;
    const auto extremum = extremal_repulsion(run.config.cavity, lo, hi, 0.5,
                                             run.t_reduced, run.config.quad);

    std::ofstream file;
    std::ostream& out = open_sink(opt, file);
    out << "d_star_reduced,f_star_over_f0";
    if (opt.si) out << ",d_um,f_si_N_per_m2";
    out << "\n";
    if (extremum) {
        const auto [d_star, f_star] = *extremum;
        out << fmt(d_star) << ',' << fmt(f_star);
        if (opt.si)
            out << ',' << fmt(distance_si_um(run.config.scale, d_star)) << ','
                << fmt(f_star * force_unit_si(run.config.scale));
        out << "\n";
        std::cout << "most repulsive at k_P d = " << fmt(d_star)
                  << ", f/f0 = " << fmt(f_star) << "\n";
    } else {
        out << "none,";
        if (opt.si) out << ",,";
        out << "\n";
        std::cout << "no repulsive region in bracket\n";
    }
    return 0;
}

int cmd_convert(const Options& opt) {
    const Run run = load_run(opt);
    const ReferenceScale& scale = run.config.scale;
    std::cout << "plasma_energy_ev = " << fmt(scale.plasma_energy_ev) << "\n";
    std::cout << "length_unit_nm = " << fmt(length_unit_nm(scale)) << "\n";
    std::cout << "f0_N_per_m2 = " << fmt(force_unit_si(scale)) << "\n";
    std::cout << "d_reduced = " << fmt(run.config.cavity.gap) << "\n";
    std::cout << "d_um = " << fmt(distance_si_um(scale, run.config.cavity.gap))
              << "\n";
    if (run.config.temperature_kelvin)
        std::cout << "t_reduced = " << fmt(*run.t_reduced) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casimir force between dispersive magnetodielectric stacks "
                 "(reduced Lifshitz-type integrals; positive = attractive)"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config_path, "JSON run configuration")
            ->required();
        sub->add_option("--output", opt.output_path,
                        "CSV output path (default stdout)");
        sub->add_option("--temperature", opt.temperature,
                        "temperature in kelvin, or \"zero\" (overrides config)");
        sub->add_option("--tol", opt.tol,
                        "quadrature relative tolerance override");
        sub->add_flag("--si", opt.si, "add SI columns/values to the output");
    };
    add_common(app.add_subcommand("force",
                                  "single force evaluation at the config gap"));
    add_common(app.add_subcommand("scan",
                                  "force versus distance over the 'scan' grid"));
    add_common(app.add_subcommand("sweep",
                                  "2D parameter sweep over the 'sweep' axes"));
    add_common(app.add_subcommand(
        "crossover", "attraction/repulsion sign-change distance"));
    add_common(app.add_subcommand("extremum",
                                  "most repulsive distance and force"));
    add_common(app.add_subcommand(
        "convert", "reduced-to-SI unit conversions for the config"));

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        if (command == "force") return cmd_force(opt);
        if (command == "scan") return cmd_scan(opt);
        if (command == "sweep") return cmd_sweep(opt);
        if (command == "crossover") return cmd_crossover(opt);
        if (command == "extremum") return cmd_extremum(opt);
        if (command == "convert") return cmd_convert(opt);
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence failure: " << e.what()
                  << " (partial = " << e.partial << ")\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
