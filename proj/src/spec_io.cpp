#include "apg/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "apg/errors.hpp"
#include "json.hpp"

namespace apg {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError(path + ": " + what);
}

const json& field(const json& j, const std::string& path, const char* key) {
    if (!j.is_object()) fail(path, "expected a table");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing field");
    return *it;
}

double num(const json& j, const std::string& path, const char* key) {
    const json& v = field(j, path, key);
    if (!v.is_number()) fail(path + "." + key, "expected a number");
    return v.get<double>();
}

std::vector<std::pair<double, double>> pair_list(const json& v, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array of [x, y] pairs");
    std::vector<std::pair<double, double>> out;
    for (const auto& e : v) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            fail(path, "expected [x, y] number pairs");
        out.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return out;
}

TimeFunction time_function_from(const json& j, const std::string& path) {
    const std::string kind = field(j, path, "kind").get<std::string>();
    if (kind == "linear") return TimeFunction::linear(num(j, path, "a"));
    if (kind == "power") return TimeFunction::power(num(j, path, "a"), num(j, path, "p"));
    if (kind == "piecewise")
        return TimeFunction::piecewise(pair_list(field(j, path, "knots"), path + ".knots"));
    if (kind == "composed")
        return TimeFunction::composed(time_function_from(field(j, path, "outer"), path + ".outer"),
                                      time_function_from(field(j, path, "inner"), path + ".inner"));
    fail(path + ".kind", "unknown time-function kind '" + kind + "'");
}

json time_function_to(const TimeFunction& f) {
    switch (f.kind()) {
        case TimeFunction::Kind::linear:
            return {{"kind", "linear"}, {"a", f.param_a()}};
        case TimeFunction::Kind::power:
            return {{"kind", "power"}, {"a", f.param_a()}, {"p", f.param_p()}};
        case TimeFunction::Kind::piecewise: {
            json knots = json::array();
            for (const auto& [t, v] : f.knots()) knots.push_back({t, v});
            return {{"kind", "piecewise"}, {"knots", knots}};
        }
        case TimeFunction::Kind::composed:
            return {{"kind", "composed"},
                    {"outer", time_function_to(f.outer())},
                    {"inner", time_function_to(f.inner())}};
    }
    return {};
}

ParamCurve curve_from(const json& j, const std::string& path) {
    if (j.is_number()) return ParamCurve(j.get<double>());
    if (j.is_object() && j.contains("constant")) return ParamCurve(num(j, path, "constant"));
    if (j.is_object() && j.contains("knots"))
        return ParamCurve(pair_list(j["knots"], path + ".knots"));
    fail(path, "expected a number, {constant: x} or {knots: [[s,v],...]}");
}

json curve_to(const ParamCurve& c) {
    if (c.is_constant()) return c.knots().front().second;
    json knots = json::array();
    for (const auto& [s, v] : c.knots()) knots.push_back({s, v});
    return {{"knots", knots}};
}

LevyMeasure measure_from(const json& j, const std::string& path) {
    const std::string kind = field(j, path, "kind").get<std::string>();
    if (kind == "none") return LevyMeasure::none();
    if (kind == "symmetric_stable")
        return LevyMeasure::symmetric_stable(num(j, path, "alpha"), num(j, path, "c"));
    if (kind == "one_sided_stable")
        return LevyMeasure::one_sided_stable(num(j, path, "alpha"), num(j, path, "c"));
    if (kind == "atoms")
        return LevyMeasure::discrete(pair_list(field(j, path, "atoms"), path + ".atoms"));
    if (kind == "pareto") return LevyMeasure::pareto(num(j, path, "alpha"), num(j, path, "c"));
    if (kind == "stable_like")
        return LevyMeasure::stable_like(num(j, path, "alpha"), num(j, path, "cplus"),
                                        num(j, path, "cminus"));
    fail(path + ".kind", "unknown measure kind '" + kind + "'");
}

json measure_to(const LevyMeasure& m) {
    switch (m.kind()) {
        case LevyMeasure::Kind::none:
            return {{"kind", "none"}};
        case LevyMeasure::Kind::symmetric_stable:
            return {{"kind", "symmetric_stable"}, {"alpha", m.alpha()}, {"c", m.c()}};
        case LevyMeasure::Kind::one_sided_stable:
            return {{"kind", "one_sided_stable"}, {"alpha", m.alpha()}, {"c", m.c()}};
        case LevyMeasure::Kind::atoms: {
            json atoms = json::array();
            for (const auto& [x, mass] : m.atoms()) atoms.push_back({x, mass});
            return {{"kind", "atoms"}, {"atoms", atoms}};
        }
        case LevyMeasure::Kind::pareto:
            return {{"kind", "pareto"}, {"alpha", m.alpha()}, {"c", m.c()}};
        case LevyMeasure::Kind::stable_like:
            return {{"kind", "stable_like"},
                    {"alpha", m.alpha()},
                    {"cplus", m.cplus()},
                    {"cminus", m.cminus()}};
    }
    return {};
}

LevyKernel kernel_from(const json& j, const std::string& path) {
    const std::string kind = field(j, path, "kind").get<std::string>();
    if (kind == "none") return LevyKernel::none();
    if (kind == "time_scaled")
        return LevyKernel::time_scaled(time_function_from(field(j, path, "time"), path + ".time"),
                                       measure_from(field(j, path, "measure"), path + ".measure"));
    if (kind == "disintegrated") {
        StableLikeFamily fam;
        fam.alpha = curve_from(field(j, path, "alpha"), path + ".alpha");
        fam.cplus = curve_from(field(j, path, "cplus"), path + ".cplus");
        fam.cminus = curve_from(field(j, path, "cminus"), path + ".cminus");
        return LevyKernel::disintegrated(time_function_from(field(j, path, "u"), path + ".u"),
                                         std::move(fam));
    }
    if (kind == "sum") {
        const json& parts = field(j, path, "parts");
        if (!parts.is_array()) fail(path + ".parts", "expected an array of kernels");
        std::vector<LevyKernel> ks;
        for (std::size_t i = 0; i < parts.size(); ++i)
            ks.push_back(kernel_from(parts[i], path + ".parts[" + std::to_string(i) + "]"));
        return LevyKernel::sum(std::move(ks));
    }
    fail(path + ".kind", "unknown kernel kind '" + kind + "'");
}

json kernel_to(const LevyKernel& k) {
    switch (k.kind()) {
        case LevyKernel::Kind::none:
            return {{"kind", "none"}};
        case LevyKernel::Kind::time_scaled:
            return {{"kind", "time_scaled"},
                    {"time", time_function_to(k.time_change())},
                    {"measure", measure_to(k.base_measure())}};
        case LevyKernel::Kind::disintegrated:
            return {{"kind", "disintegrated"},
                    {"u", time_function_to(k.u())},
                    {"alpha", curve_to(k.family().alpha)},
                    {"cplus", curve_to(k.family().cplus)},
                    {"cminus", curve_to(k.family().cminus)}};
        case LevyKernel::Kind::sum: {
            json parts = json::array();
            for (const auto& p : k.parts()) parts.push_back(kernel_to(p));
            return {{"kind", "sum"}, {"parts", parts}};
        }
    }
    return {};
}

}  // namespace

ProcessSpec spec_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("spec parse error: ") + e.what());
    }
    ProcessSpec spec;
    spec.d = static_cast<int>(num(j, "spec", "d"));
    spec.T_max = num(j, "spec", "T_max");
    spec.label = field(j, "spec", "label").get<std::string>();
    const json& comps = field(j, "spec", "components");
    if (!comps.is_array()) fail("spec.components", "expected an array");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string path = "spec.components[" + std::to_string(i) + "]";
        Component c;
        c.drift = time_function_from(field(comps[i], path, "drift"), path + ".drift");
        c.gauss = time_function_from(field(comps[i], path, "gaussian"), path + ".gaussian");
        c.kernel = kernel_from(field(comps[i], path, "kernel"), path + ".kernel");
        spec.components.push_back(std::move(c));
    }
    spec.validate();
    return spec;
}

std::string spec_to_json(const ProcessSpec& spec) {
    json comps = json::array();
    for (const auto& c : spec.components)
        comps.push_back({{"drift", time_function_to(c.drift)},
                         {"gaussian", time_function_to(c.gauss)},
                         {"kernel", kernel_to(c.kernel)}});
    const json j = {
        {"d", spec.d}, {"T_max", spec.T_max}, {"label", spec.label}, {"components", comps}};
    return j.dump(2) + "\n";
}

ProcessSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open spec file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return spec_from_json(ss.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

namespace {

Component brownian_component() {
    return Component{TimeFunction::zero(), TimeFunction::linear(1.0), LevyKernel::none()};
}

ProcessSpec make_builtin(const std::string& name) {
    ProcessSpec s;
    s.label = name;
    if (name == "brownian") {
        s.components.push_back(brownian_component());
    } else if (name == "brownian_2d") {
        s.d = 2;
        s.components.push_back(brownian_component());
        s.components.push_back(brownian_component());
    } else if (name == "drift") {
        s.components.push_back(
            Component{TimeFunction::linear(1.0), TimeFunction::zero(), LevyKernel::none()});
    } else if (name == "compound_poisson") {
        // unit jumps at rate 3; B_t = 3t restores the small-jump compensator
        s.components.push_back(Component{
            TimeFunction::linear(3.0), TimeFunction::zero(),
            LevyKernel::time_scaled(TimeFunction::linear(1.0), LevyMeasure::discrete({{1.0, 3.0}}))});
    } else if (name == "stable_a05" || name == "stable_a1" || name == "stable_a15") {
        const double alpha = name == "stable_a05" ? 0.5 : (name == "stable_a1" ? 1.0 : 1.5);
        s.components.push_back(Component{TimeFunction::zero(), TimeFunction::zero(),
                                         LevyKernel::time_scaled(TimeFunction::linear(1.0),
                                                                 LevyMeasure::symmetric_stable(
                                                                     alpha, 1.0))});
    } else if (name == "subordinator_half") {
        // nu = x^{-3/2} dx on (0,inf); B_t = 2t makes gamma0 = 0
        s.components.push_back(Component{
            TimeFunction::linear(2.0), TimeFunction::zero(),
            LevyKernel::time_scaled(TimeFunction::linear(1.0),
                                    LevyMeasure::one_sided_stable(0.5, 1.0))});
    } else if (name == "brownian_timechange") {
        // Brownian motion run at f(t) = t^2
        s.components.push_back(
            Component{TimeFunction::zero(), TimeFunction::power(1.0, 2.0), LevyKernel::none()});
    } else if (name == "sec3_example") {
        // stable-like kernel with drifting alpha_s, sigma^2 = 4, b_s = 0
        StableLikeFamily fam;
        fam.alpha = ParamCurve({{0.0, 0.9}, {1.0, 1.3}});
        fam.cplus = ParamCurve(2.0);
        fam.cminus = ParamCurve(1.0);
        s.components.push_back(
            Component{TimeFunction::zero(), TimeFunction::linear(4.0),
                      LevyKernel::disintegrated(TimeFunction::linear(1.0), std::move(fam))});
    } else if (name == "two_levy_sum") {
        // X^3_t = X^1_{f1(t)} + X^2_{f2(t)}: 1-stable at f1(t)=t plus
        // compensated unit-jump Poisson (rate 3) at f2(t)=t^2
        std::vector<LevyKernel> parts;
        parts.push_back(LevyKernel::time_scaled(TimeFunction::linear(1.0),
                                                LevyMeasure::symmetric_stable(1.0, 1.0)));
        parts.push_back(LevyKernel::time_scaled(TimeFunction::power(1.0, 2.0),
                                                LevyMeasure::discrete({{1.0, 3.0}})));
        s.components.push_back(Component{TimeFunction::power(3.0, 2.0), TimeFunction::zero(),
                                         LevyKernel::sum(std::move(parts))});
    } else if (name == "pareto_cp") {
        s.T_max = 4.0;
        s.components.push_back(Component{
            TimeFunction::zero(), TimeFunction::zero(),
            LevyKernel::time_scaled(TimeFunction::linear(1.0), LevyMeasure::pareto(1.0, 1.0))});
    } else {
        throw ConfigError("unknown builtin spec '" + name + "'");
    }
    if (s.components.size() > 1) s.d = static_cast<int>(s.components.size());
    s.validate();
    return s;
}

}  // namespace

ProcessSpec builtin_spec(const std::string& name) { return make_builtin(name); }

std::vector<std::string> builtin_names() {
    return {"brownian",  "drift",       "compound_poisson",  "stable_a05",
            "stable_a1", "stable_a15",  "subordinator_half", "brownian_timechange",
            "sec3_example", "two_levy_sum", "pareto_cp",     "brownian_2d"};
}

ProcessSpec resolve_spec(const std::string& name_or_path) {
    for (const auto& n : builtin_names())
        if (n == name_or_path) return builtin_spec(n);
    return load_spec_file(name_or_path);
}

}  // namespace apg
