#include "casimir/config.hpp"

#include <cmath>
#include <set>

#include "json.hpp"

namespace casimir {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ConfigError(path.empty() ? message : path + ": " + message);
}

void reject_unknown_keys(const json& node, const std::string& path,
                         const std::set<std::string>& allowed) {
    for (const auto& item : node.items())
        if (!allowed.count(item.key()))
            fail(path.empty() ? item.key() : path + "." + item.key(),
                 "unknown key");
}

double number_at(const json& node, const std::string& path) {
    if (!node.is_number()) fail(path, "expected a number");
    return node.get<double>();
}

Response parse_response(const json& node, const std::string& path) {
    if (!node.is_object()) fail(path, "expected an object");
    if (node.contains("constant")) {
        reject_unknown_keys(node, path, {"constant"});
        const json& c = node["constant"];
        if (c.is_string()) {
            if (c.get<std::string>() != "inf")
                fail(path + ".constant", "expected a number or \"inf\"");
            return Response::constant(infinite_response);
        }
        const double v = number_at(c, path + ".constant");
        if (!(v >= 1.0)) fail(path + ".constant", "must be >= 1");
        return Response::constant(v);
    }
    const bool absolute = node.contains("omega_p") || node.contains("omega_t");
    const bool relative = node.contains("P") || node.contains("Q");
    if (absolute && relative)
        fail(path, "mix of absolute and relative oscillator parameters");
    try {
        if (relative) {
            reject_unknown_keys(node, path, {"P", "Q", "gamma_over_omega_t"});
            const double p = number_at(node.value("P", json(0.0)), path + ".P");
            const double q = number_at(node.value("Q", json(0.0)), path + ".Q");
            const double g = number_at(node.value("gamma_over_omega_t", json(0.0)),
                                       path + ".gamma_over_omega_t");
            return Response::oscillator(OscillatorParams::from_relative(p, q, g));
        }
        reject_unknown_keys(node, path, {"omega_p", "omega_t", "gamma"});
        const double wp =
            number_at(node.value("omega_p", json(0.0)), path + ".omega_p");
        const double wt =
            number_at(node.value("omega_t", json(0.0)), path + ".omega_t");
        const double g = number_at(node.value("gamma", json(0.0)), path + ".gamma");
        return Response::oscillator(OscillatorParams(wp, wt, g));
    } catch (const std::domain_error& e) {
        fail(path, e.what());
    }
}

MaterialModel builtin_material(const std::string& name, const std::string& path) {
    if (name == "vacuum") return MaterialModel::vacuum();
    if (name == "drude_gold_T0") {
        MaterialModel m;
        m.electric = Response::oscillator(OscillatorParams(1.0, 0.0, 3.9e-9));
        return m;
    }
    if (name == "perfect_mirror") {
        MaterialModel m;
        m.electric = Response::constant(infinite_response);
        return m;
    }
    fail(path, "unknown material name '" + name + "'");
}

MaterialModel parse_material(const json& node, const std::string& path) {
    if (node.is_string()) return builtin_material(node.get<std::string>(), path);
    if (!node.is_object()) fail(path, "expected a material name or object");
    reject_unknown_keys(node, path, {"electric", "magnetic"});
    MaterialModel m;
    if (node.contains("electric"))
        m.electric = parse_response(node["electric"], path + ".electric");
    if (node.contains("magnetic"))
        m.magnetic = parse_response(node["magnetic"], path + ".magnetic");
    return m;
}

LayerStack parse_stack(const json& node, const std::string& path) {
    if (node.is_object() && node.contains("terminator")) {
        reject_unknown_keys(node, path, {"terminator", "layers"});
        LayerStack stack;
        stack.terminator = parse_material(node["terminator"], path + ".terminator");
        if (node.contains("layers")) {
            const json& layers = node["layers"];
            if (!layers.is_array()) fail(path + ".layers", "expected an array");
            for (std::size_t i = 0; i < layers.size(); ++i) {
                const std::string lp = path + ".layers[" + std::to_string(i) + "]";
                const json& entry = layers[i];
                if (!entry.is_object()) fail(lp, "expected an object");
                reject_unknown_keys(entry, lp, {"material", "thickness"});
                if (!entry.contains("material") || !entry.contains("thickness"))
                    fail(lp, "layer needs 'material' and 'thickness'");
                const double t = number_at(entry["thickness"], lp + ".thickness");
                if (!(t > 0.0)) fail(lp + ".thickness", "must be > 0");
                stack.layers.push_back(
                    {parse_material(entry["material"], lp + ".material"), t});
            }
        }
        return stack;
    }
    return LayerStack::half_space(parse_material(node, path));
}

std::optional<double> parse_temperature(const json& node,
                                        const std::string& path) {
    if (node.is_string()) {
        if (node.get<std::string>() != "zero")
            fail(path, "expected kelvin value or \"zero\"");
        return std::nullopt;
    }
    const double kelvin = number_at(node, path);
    if (!(kelvin > 0.0)) fail(path, "temperature in kelvin must be > 0");
    return kelvin;
}

}  // namespace

std::vector<double> ScanBlock::grid() const {
    std::vector<double> grid(points);
    if (points == 1) {
        grid[0] = d_min;
        return grid;
    }
    if (log_spacing) {
        const double ratio = std::log(d_max / d_min);
        for (int i = 0; i < points; ++i)
            grid[i] = d_min * std::exp(ratio * i / (points - 1.0));
    } else {
        for (int i = 0; i < points; ++i)
            grid[i] = d_min + (d_max - d_min) * i / (points - 1.0);
    }
    return grid;
}

std::vector<double> SweepAxisBlock::grid() const {
    std::vector<double> grid(points);
    if (points == 1) {
        grid[0] = min;
        return grid;
    }
    for (int i = 0; i < points; ++i)
        grid[i] = min + (max - min) * i / (points - 1.0);
    return grid;
}

RunConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) fail("", "top level must be an object");
    reject_unknown_keys(root, "",
                        {"scale", "left", "right", "gap", "temperature",
                         "quadrature", "scan", "sweep", "bracket"});
    for (const char* key : {"scale", "left", "right", "gap"})
        if (!root.contains(key))
            fail("", std::string("missing required field '") + key +
                         "' (required: scale, left, right, gap)");

    const json& scale_node = root["scale"];
    if (!scale_node.is_object()) fail("scale", "expected an object");
    reject_unknown_keys(scale_node, "scale", {"plasma_energy_ev"});
    if (!scale_node.contains("plasma_energy_ev"))
        fail("scale", "missing 'plasma_energy_ev'");
    const double e_p =
        number_at(scale_node["plasma_energy_ev"], "scale.plasma_energy_ev");
    if (!(e_p > 0.0)) fail("scale.plasma_energy_ev", "must be > 0");

    const double gap = number_at(root["gap"], "gap");
    if (!(gap > 0.0)) fail("gap", "must be > 0");

    RunConfig config{ReferenceScale(e_p),
                     CavityConfig(parse_stack(root["left"], "left"),
                                  parse_stack(root["right"], "right"), gap),
                     std::nullopt,
                     {},
                     std::nullopt,
                     std::nullopt,
                     std::nullopt};

    if (root.contains("temperature"))
        config.temperature_kelvin =
            parse_temperature(root["temperature"], "temperature");

    if (root.contains("quadrature")) {
        const json& q = root["quadrature"];
        if (!q.is_object()) fail("quadrature", "expected an object");
        reject_unknown_keys(q, "quadrature",
                            {"rel_tol", "x_max", "max_subdivisions",
                             "matsubara_term_tol"});
        if (q.contains("rel_tol"))
            config.quad.rel_tol = number_at(q["rel_tol"], "quadrature.rel_tol");
        if (q.contains("x_max"))
            config.quad.x_max = number_at(q["x_max"], "quadrature.x_max");
        if (q.contains("max_subdivisions"))
            config.quad.max_subdivisions = static_cast<int>(
                number_at(q["max_subdivisions"], "quadrature.max_subdivisions"));
        if (q.contains("matsubara_term_tol"))
            config.quad.matsubara_term_tol = number_at(
                q["matsubara_term_tol"], "quadrature.matsubara_term_tol");
        try {
            config.quad.validate();
        } catch (const std::domain_error& e) {
            fail("quadrature", e.what());
        }
    }

    if (root.contains("scan")) {
        const json& s = root["scan"];
        if (!s.is_object()) fail("scan", "expected an object");
        reject_unknown_keys(s, "scan", {"d_min", "d_max", "points", "spacing"});
        for (const char* key : {"d_min", "d_max", "points"})
            if (!s.contains(key))
                fail("scan", std::string("missing '") + key + "'");
        ScanBlock block;
        block.d_min = number_at(s["d_min"], "scan.d_min");
        block.d_max = number_at(s["d_max"], "scan.d_max");
        block.points = static_cast<int>(number_at(s["points"], "scan.points"));
        if (!(block.d_min > 0.0) || !(block.d_max > block.d_min))
            fail("scan", "need 0 < d_min < d_max");
        if (block.points < 1) fail("scan.points", "must be >= 1");
        if (s.contains("spacing")) {
            const std::string spacing = s["spacing"].is_string()
                                            ? s["spacing"].get<std::string>()
                                            : std::string();
            if (spacing != "log" && spacing != "linear")
                fail("scan.spacing", "expected \"log\" or \"linear\"");
            block.log_spacing = spacing == "log";
        }
        config.scan = block;
    }

    if (root.contains("sweep")) {
        const json& s = root["sweep"];
        if (!s.is_object()) fail("sweep", "expected an object");
        reject_unknown_keys(s, "sweep", {"axis1", "axis2"});
        auto parse_axis = [&](const char* key) {
            if (!s.contains(key)) fail("sweep", std::string("missing '") + key + "'");
            const json& axis = s[key];
            const std::string path = std::string("sweep.") + key;
            if (!axis.is_object()) fail(path, "expected an object");
            reject_unknown_keys(axis, path, {"target", "min", "max", "points"});
            for (const char* field : {"target", "min", "max", "points"})
                if (!axis.contains(field))
                    fail(path, std::string("missing '") + field + "'");
            SweepAxisBlock block;
            if (!axis["target"].is_string()) fail(path + ".target", "expected a string");
            block.target = axis["target"].get<std::string>();
            block.min = number_at(axis["min"], path + ".min");
            block.max = number_at(axis["max"], path + ".max");
            block.points = static_cast<int>(number_at(axis["points"], path + ".points"));
            if (!(block.max > block.min)) fail(path, "need min < max");
            if (block.points < 1) fail(path + ".points", "must be >= 1");
            return block;
        };
        config.sweep = std::make_pair(parse_axis("axis1"), parse_axis("axis2"));
    }

    if (root.contains("bracket")) {
        const json& b = root["bracket"];
        if (!b.is_array() || b.size() != 2)
            fail("bracket", "expected [d_lo, d_hi]");
        const double lo = number_at(b[0], "bracket[0]");
        const double hi = number_at(b[1], "bracket[1]");
        if (!(lo > 0.0) || !(hi > lo)) fail("bracket", "need 0 < d_lo < d_hi");
        config.bracket = std::make_pair(lo, hi);
    }

    return config;
}

}  // namespace casimir
