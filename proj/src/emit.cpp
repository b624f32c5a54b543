#include "dephase/emit.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include <json.hpp>

#include "dephase/errors.hpp"

namespace dephase {

using nlohmann::json;

namespace {

constexpr const char* kEol = "\r\n";

json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }
std::complex<double> complex_from(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

json coefficients_json(const PhaseCoefficients& c) {
    return {{"A", c.a}, {"B", c.b}, {"C_modulus", c.c_modulus}, {"C_phase", c.c_phase}};
}

PhaseCoefficients coefficients_from(const json& j) {
    return {j.at("A").get<double>(), j.at("B").get<double>(), j.at("C_modulus").get<double>(),
            j.at("C_phase").get<double>()};
}

json fringe_json(const std::vector<FringeSample>& pattern) {
    json out = json::array();
    for (const auto& s : pattern) out.push_back({{"detector_phase", s.detector_phase}, {"intensity", s.intensity}});
    return out;
}

std::vector<FringeSample> fringe_from(const json& j) {
    std::vector<FringeSample> out;
    for (const auto& s : j) out.push_back({s.at("detector_phase").get<double>(), s.at("intensity").get<double>()});
    return out;
}

ClosedForm closed_form_from(const std::string& s) {
    for (auto f : {ClosedForm::DipoleElliptic, ClosedForm::DipoleAsymmetric, ClosedForm::ElectronElliptic,
                   ClosedForm::ElectronAsymmetric}) {
        if (s == to_string(f)) return f;
    }
    throw ConfigError("unknown closed form '" + s + "'");
}

ClosedFormBranch branch_from(const std::string& s) {
    for (auto b : {ClosedFormBranch::Exact, ClosedFormBranch::Asymptotic})
        if (s == to_string(b)) return b;
    throw ConfigError("unknown closed-form branch '" + s + "'");
}

FitBasis fit_basis_from(const std::string& s) {
    for (auto b : {FitBasis::RawSamples, FitBasis::DecadeMaxima})
        if (s == to_string(b)) return b;
    throw ConfigError("unknown fit basis '" + s + "'");
}

template <typename F>
auto parse_with(const std::string& text, const char* what, F&& body) {
    try {
        return body(json::parse(text));
    } catch (const json::exception& e) {
        throw ConfigError(std::string(what) + ": " + e.what());
    }
}

void csv_row(std::string& out, std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto& c : cells) {
        if (!first) out += ',';
        out += csv_field(c);
        first = false;
    }
    out += kEol;
}

void plot_line(std::string& out, double x, double y) {
    out += format_number(x);
    out += ' ';
    out += format_number(y);
    out += '\n';
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "plot-data") return OutputFormat::PlotData;
    throw ConfigError("unknown format '" + name + "' (expected csv, json or plot-data)");
}

std::string format_number(double v) {
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw DomainError("format_number: conversion failed");
    return {buf.data(), end};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string emit(const ScenarioReport& r, OutputFormat format) {
    if (format == OutputFormat::PlotData) {
        std::string out;
        for (const auto& s : r.fringe) plot_line(out, s.detector_phase, s.intensity);
        return out;
    }
    if (format == OutputFormat::Csv) {
        const auto n = [](double v) { return format_number(v); };
        std::string out;
        csv_row(out, {"field", "value"});
        csv_row(out, {"scenario", r.scenario});
        csv_row(out, {"angular_frequency", n(r.angular_frequency)});
        csv_row(out, {"amplitude", n(r.amplitude)});
        csv_row(out, {"flight_time", n(r.flight_time)});
        csv_row(out, {"omega_tau", n(r.omega_tau)});
        csv_row(out, {"separation", n(r.separation)});
        csv_row(out, {"longitudinal_length", n(r.longitudinal_length)});
        csv_row(out, {"speed", n(r.speed)});
        csv_row(out, {"A", n(r.coefficients.a)});
        csv_row(out, {"B", n(r.coefficients.b)});
        csv_row(out, {"C_modulus", n(r.coefficients.c_modulus)});
        csv_row(out, {"C_phase", n(r.coefficients.c_phase)});
        csv_row(out, {"overlap_factor", n(r.decoherence.overlap_factor)});
        csv_row(out, {"oracle_overlap.re", n(r.decoherence.oracle_overlap.real())});
        csv_row(out, {"oracle_overlap.im", n(r.decoherence.oracle_overlap.imag())});
        csv_row(out, {"visibility", n(r.decoherence.visibility)});
        csv_row(out, {"fringe_shift", n(r.decoherence.fringe_shift)});
        csv_row(out, {"grid_delta", n(r.oracle.grid_delta)});
        csv_row(out, {"monte_carlo_delta", n(r.oracle.monte_carlo_delta)});
        csv_row(out, {"monte_carlo_bound", n(r.oracle.monte_carlo_bound)});
        csv_row(out, {"oracle_agrees", r.oracle.agrees ? "true" : "false"});
        csv_row(out, {"geometry_closed_form", r.geometry_closed_form ? n(*r.geometry_closed_form) : ""});
        for (const auto& c : r.closed_forms) {
            const std::string key = std::string(to_string(c.form)) + "." + to_string(c.branch);
            csv_row(out, {"closed_form." + key, n(c.value)});
            csv_row(out, {"closed_form_ratio." + key, n(c.ratio)});
        }
        for (const auto& w : r.warnings) csv_row(out, {"warning", w});
        return out;
    }
    json j;
    j["scenario"] = r.scenario;
    j["angular_frequency"] = r.angular_frequency;
    j["amplitude"] = r.amplitude;
    j["flight_time"] = r.flight_time;
    j["omega_tau"] = r.omega_tau;
    j["separation"] = r.separation;
    j["longitudinal_length"] = r.longitudinal_length;
    j["speed"] = r.speed;
    j["coefficients"] = coefficients_json(r.coefficients);
    j["decoherence"] = {{"overlap_factor", r.decoherence.overlap_factor},
                        {"oracle_overlap", complex_json(r.decoherence.oracle_overlap)},
                        {"visibility", r.decoherence.visibility},
                        {"fringe_shift", r.decoherence.fringe_shift}};
    j["oracle"] = {{"grid_overlap", complex_json(r.oracle.grid_overlap)},
                   {"grid_delta", r.oracle.grid_delta},
                   {"monte_carlo_overlap", complex_json(r.oracle.monte_carlo_overlap)},
                   {"monte_carlo_delta", r.oracle.monte_carlo_delta},
                   {"monte_carlo_bound", r.oracle.monte_carlo_bound},
                   {"agrees", r.oracle.agrees}};
    j["fringe"] = fringe_json(r.fringe);
    j["geometry_closed_form"] = r.geometry_closed_form ? json(*r.geometry_closed_form) : json(nullptr);
    j["closed_forms"] = json::array();
    for (const auto& c : r.closed_forms)
        j["closed_forms"].push_back(
            {{"form", to_string(c.form)}, {"branch", to_string(c.branch)}, {"value", c.value}, {"ratio", c.ratio}});
    j["warnings"] = r.warnings;
    return j.dump(2) + "\n";
}

std::string emit(const SweepResult& r, OutputFormat format) {
    if (format == OutputFormat::PlotData) {
        std::string out;
        for (const auto& s : r.samples) plot_line(out, s.parameter_value, s.c_modulus);
        out += '\n';
        for (const auto& s : r.samples) plot_line(out, s.parameter_value, s.overlap_factor);
        out += '\n';
        for (const auto& d : r.envelope_stats) plot_line(out, d.argmax, d.max_c_modulus);
        return out;
    }
    if (format == OutputFormat::Csv) {
        std::string out;
        csv_row(out, {"parameter_value", "C_modulus", "F"});
        for (const auto& s : r.samples)
            csv_row(out, {format_number(s.parameter_value), format_number(s.c_modulus),
                          format_number(s.overlap_factor)});
        return out;
    }
    json j;
    j["scenario"] = r.scenario;
    j["swept_parameter"] = to_string(r.swept_parameter);
    j["samples"] = json::array();
    for (const auto& s : r.samples)
        j["samples"].push_back(
            {{"parameter_value", s.parameter_value}, {"C_modulus", s.c_modulus}, {"F", s.overlap_factor}});
    if (r.slope_fit) {
        j["slope_fit"] = {{"exponent", r.slope_fit->exponent},
                          {"intercept", r.slope_fit->intercept},
                          {"residual_rms", r.slope_fit->residual_rms},
                          {"n_points", r.slope_fit->n_points}};
    } else {
        j["slope_fit"] = nullptr;
    }
    j["fit_basis"] = to_string(r.fit_basis);
    j["envelope_stats"] = json::array();
    for (const auto& d : r.envelope_stats)
        j["envelope_stats"].push_back({{"decade_start", d.decade_start},
                                       {"decade_end", d.decade_end},
                                       {"max_C_modulus", d.max_c_modulus},
                                       {"min_C_modulus", d.min_c_modulus},
                                       {"argmax", d.argmax},
                                       {"count", d.count}});
    return j.dump(2) + "\n";
}

std::string emit(const std::vector<FringeSample>& pattern, OutputFormat format) {
    std::string out;
    switch (format) {
        case OutputFormat::PlotData:
            for (const auto& s : pattern) plot_line(out, s.detector_phase, s.intensity);
            return out;
        case OutputFormat::Csv:
            csv_row(out, {"detector_phase", "intensity"});
            for (const auto& s : pattern) csv_row(out, {format_number(s.detector_phase), format_number(s.intensity)});
            return out;
        case OutputFormat::Json: return json{{"fringe", fringe_json(pattern)}}.dump(2) + "\n";
    }
    return out;
}

ScenarioReport report_from_json(const std::string& text) {
    return parse_with(text, "report", [](const json& j) {
        ScenarioReport r;
        r.scenario = j.at("scenario").get<std::string>();
        r.angular_frequency = j.at("angular_frequency").get<double>();
        r.amplitude = j.at("amplitude").get<double>();
        r.flight_time = j.at("flight_time").get<double>();
        r.omega_tau = j.at("omega_tau").get<double>();
        r.separation = j.at("separation").get<double>();
        r.longitudinal_length = j.at("longitudinal_length").get<double>();
        r.speed = j.at("speed").get<double>();
        r.coefficients = coefficients_from(j.at("coefficients"));
        const auto& d = j.at("decoherence");
        r.decoherence.overlap_factor = d.at("overlap_factor").get<double>();
        r.decoherence.oracle_overlap = complex_from(d.at("oracle_overlap"));
        r.decoherence.visibility = d.at("visibility").get<double>();
        r.decoherence.fringe_shift = d.at("fringe_shift").get<double>();
        const auto& o = j.at("oracle");
        r.oracle.grid_overlap = complex_from(o.at("grid_overlap"));
        r.oracle.grid_delta = o.at("grid_delta").get<double>();
        r.oracle.monte_carlo_overlap = complex_from(o.at("monte_carlo_overlap"));
        r.oracle.monte_carlo_delta = o.at("monte_carlo_delta").get<double>();
        r.oracle.monte_carlo_bound = o.at("monte_carlo_bound").get<double>();
        r.oracle.agrees = o.at("agrees").get<bool>();
        r.fringe = fringe_from(j.at("fringe"));
        if (!j.at("geometry_closed_form").is_null())
            r.geometry_closed_form = j.at("geometry_closed_form").get<double>();
        for (const auto& c : j.at("closed_forms"))
            r.closed_forms.push_back({closed_form_from(c.at("form").get<std::string>()),
                                      branch_from(c.at("branch").get<std::string>()), c.at("value").get<double>(),
                                      c.at("ratio").get<double>()});
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
        return r;
    });
}

SweepResult sweep_from_json(const std::string& text) {
    return parse_with(text, "sweep", [](const json& j) {
        SweepResult r;
        r.scenario = j.at("scenario").get<std::string>();
        r.swept_parameter = parse_sweep_parameter(j.at("swept_parameter").get<std::string>());
        for (const auto& s : j.at("samples"))
            r.samples.push_back(
                {s.at("parameter_value").get<double>(), s.at("C_modulus").get<double>(), s.at("F").get<double>()});
        if (!j.at("slope_fit").is_null()) {
            const auto& f = j.at("slope_fit");
            r.slope_fit = numerics::SlopeFit{f.at("exponent").get<double>(), f.at("intercept").get<double>(),
                                             f.at("residual_rms").get<double>(), f.at("n_points").get<int>()};
        }
        r.fit_basis = fit_basis_from(j.at("fit_basis").get<std::string>());
        for (const auto& d : j.at("envelope_stats"))
            r.envelope_stats.push_back({d.at("decade_start").get<double>(), d.at("decade_end").get<double>(),
                                        d.at("max_C_modulus").get<double>(), d.at("min_C_modulus").get<double>(),
                                        d.at("argmax").get<double>(), d.at("count").get<int>()});
        return r;
    });
}

}  // namespace dephase
