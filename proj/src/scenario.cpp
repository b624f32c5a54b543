#include "dephase/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dephase/errors.hpp"

namespace dephase {

using nlohmann::json;

namespace {

struct UnitEntry {
    const char* name;
    double factor;
};

const std::vector<UnitEntry>& unit_table(Dimension dim) {
    static const std::vector<UnitEntry> length{
        {"m", 1e6}, {"cm", 1e4}, {"mm", 1e3}, {"um", 1.0}, {"nm", 1e-3}, {"natural", 1.0}};
    static const std::vector<UnitEntry> time{
        {"s", units::time_from_seconds(1.0)}, {"ns", units::time_from_seconds(1e-9)}, {"natural", 1.0}};
    static const std::vector<UnitEntry> speed{{"c", 1.0}, {"m/s", units::speed_from_metres_per_second(1.0)}};
    static const std::vector<UnitEntry> field{{"V/m", units::kFieldPerVoltPerMeter}, {"natural", 1.0}};
    // flux resolves to SI W/m^2, the input of amplitude_from_intensity
    static const std::vector<UnitEntry> flux{{"W/cm^2", 1e4}, {"W/m^2", 1.0}};
    static const std::vector<UnitEntry> dipole{
        {"e*m", 1e6}, {"e*nm", 1e-3}, {"e*um", 1.0}, {"e*natural", 1.0}};
    static const std::vector<UnitEntry> charge{{"e", 1.0}};
    switch (dim) {
        case Dimension::Length: return length;
        case Dimension::Time: return time;
        case Dimension::Speed: return speed;
        case Dimension::Field: return field;
        case Dimension::Flux: return flux;
        case Dimension::DipoleMoment: return dipole;
        case Dimension::Charge: return charge;
    }
    throw ConfigError("unknown dimension");
}

const char* dimension_name(Dimension dim) {
    switch (dim) {
        case Dimension::Length: return "length";
        case Dimension::Time: return "time";
        case Dimension::Speed: return "speed";
        case Dimension::Field: return "field";
        case Dimension::Flux: return "flux";
        case Dimension::DipoleMoment: return "dipole moment";
        case Dimension::Charge: return "charge";
    }
    return "?";
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
    return out;
}

double unit_factor(const std::string& unit, Dimension dim) {
    for (const auto& e : unit_table(dim))
        if (unit == e.name) return e.factor;
    throw ConfigError("unknown " + std::string(dimension_name(dim)) + " unit '" + unit + "' (expected one of " +
                      join(units_for(dim)) + ")");
}

const std::set<std::string> kOutputNames{"coefficients", "overlap", "fringe", "sweep"};

// --- JSON helpers ---------------------------------------------------------

void check_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    for (const auto& [key, _] : j.items()) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            throw ConfigError(where + ": unknown key '" + key + "'");
    }
}

template <typename T>
T get_or(const json& j, const char* key, const T& fallback, const std::string& where) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(where + "." + key + ": " + e.what());
    }
}

json vec_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec_from(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3 || !std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_number(); }))
        throw ConfigError(where + ": expected an array of three numbers");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Vec3 vec_or(const json& j, const char* key, const Vec3& fallback, const std::string& where) {
    return j.contains(key) ? vec_from(j.at(key), where + "." + key) : fallback;
}

json quantity_json(const Quantity& q) { return {{"value", q.value}, {"unit", q.unit}}; }
json quantity_json(const VectorQuantity& q) { return {{"value", vec_json(q.value)}, {"unit", q.unit}}; }

Quantity quantity_from(const json& j, const std::string& where, Dimension dim) {
    check_keys(j, where, {"value", "unit"});
    if (!j.contains("value") || !j.at("value").is_number()) throw ConfigError(where + ": missing numeric 'value'");
    if (!j.contains("unit") || !j.at("unit").is_string()) throw ConfigError(where + ": missing 'unit'");
    Quantity q{j.at("value").get<double>(), j.at("unit").get<std::string>()};
    unit_factor(q.unit, dim);
    return q;
}

VectorQuantity vector_quantity_from(const json& j, const std::string& where, Dimension dim) {
    check_keys(j, where, {"value", "unit"});
    if (!j.contains("value")) throw ConfigError(where + ": missing 'value'");
    if (!j.contains("unit") || !j.at("unit").is_string()) throw ConfigError(where + ": missing 'unit'");
    VectorQuantity q{vec_from(j.at("value"), where + ".value"), j.at("unit").get<std::string>()};
    unit_factor(q.unit, dim);
    return q;
}

Quantity quantity_or(const json& j, const char* key, const Quantity& fallback, const std::string& where,
                     Dimension dim) {
    return j.contains(key) ? quantity_from(j.at(key), where + "." + key, dim) : fallback;
}

const char* kind_name(GeometryKind k) {
    switch (k) {
        case GeometryKind::Elliptic: return "elliptic";
        case GeometryKind::Asymmetric: return "asymmetric";
        case GeometryKind::Piecewise: return "piecewise";
    }
    return "?";
}

GeometryKind geometry_kind_from(const std::string& s) {
    if (s == "elliptic") return GeometryKind::Elliptic;
    if (s == "asymmetric") return GeometryKind::Asymmetric;
    if (s == "piecewise") return GeometryKind::Piecewise;
    throw ConfigError("geometry.kind: expected elliptic, asymmetric or piecewise, got '" + s + "'");
}

json waypoints_json(const std::vector<WaypointConfig>& arm) {
    json out = json::array();
    for (const auto& w : arm) out.push_back({{"time", quantity_json(w.time)}, {"position", quantity_json(w.position)}});
    return out;
}

std::vector<WaypointConfig> waypoints_from(const json& j, const std::string& where) {
    if (!j.is_array()) throw ConfigError(where + ": expected an array");
    std::vector<WaypointConfig> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string w = where + "[" + std::to_string(i) + "]";
        check_keys(j[i], w, {"time", "position"});
        if (!j[i].contains("time") || !j[i].contains("position")) throw ConfigError(w + ": needs time and position");
        out.push_back({quantity_from(j[i].at("time"), w + ".time", Dimension::Time),
                       vector_quantity_from(j[i].at("position"), w + ".position", Dimension::Length)});
    }
    return out;
}

std::vector<Waypoint> resolve_waypoints(const std::vector<WaypointConfig>& arm) {
    std::vector<Waypoint> out;
    out.reserve(arm.size());
    for (const auto& w : arm)
        out.push_back({to_natural(w.time, Dimension::Time), to_natural(w.position, Dimension::Length)});
    return out;
}

// --- presets ----------------------------------------------------------------

Scenario electron_base(const std::string& name, GeometryKind kind) {
    Scenario s;
    s.name = name;
    s.particle.kind = ParticleSpec::Kind::Charge;
    s.particle.charge = {-1.0, "e"};
    s.field.flux = Quantity{10.0, "W/cm^2"};
    s.field.wavelength = {100.0, "um"};
    s.geometry.kind = kind;
    s.geometry.separation = {100.0, "um"};
    // s' = 10 v lambda / (2 pi), so that w tau = 10
    s.geometry.longitudinal_length = {100.0 / (2.0 * std::numbers::pi), "um"};
    s.geometry.speed = {0.1, "c"};
    return s;
}

Scenario dipole_base(const std::string& name, GeometryKind kind) {
    Scenario s;
    s.name = name;
    s.particle.kind = ParticleSpec::Kind::Dipole;
    s.particle.electric_dipole = {{0.0, 1.0, 0.0}, "e*nm"};
    s.particle.magnetic_dipole = {{}, "e*nm"};
    s.particle.dipole_length = {1.0, "nm"};
    s.field.flux = Quantity{10.0, "W/cm^2"};
    s.field.wavelength = {15.0, "mm"};
    s.geometry.kind = kind;
    s.geometry.separation = {1.0, "mm"};
    s.geometry.longitudinal_length = {1.0, "mm"};
    s.geometry.speed = {1e-5, "c"};
    return s;
}

std::map<std::string, Scenario> build_presets() {
    std::map<std::string, Scenario> out;

    auto ee = electron_base("electron-elliptic-sec4", GeometryKind::Elliptic);
    ee.description =
        "Electron on mirror-image elliptic arms: alpha = 100 um, v = 0.1 c, lambda = 100 um, "
        "10 W/cm^2; s' chosen so that w tau = 10.";
    out.emplace(ee.name, ee);

    auto ea = electron_base("electron-asymmetric-sec4", GeometryKind::Asymmetric);
    ea.description =
        "Electron on the asymmetric staircase pair: alpha = 100 um, v = 0.1 c, lambda = 100 um, "
        "10 W/cm^2, w tau = 10, riser fraction 0.05.";
    out.emplace(ea.name, ea);

    auto de = dipole_base("dipole-elliptic-sec4", GeometryKind::Elliptic);
    de.description =
        "Electric dipole d = e * 1 nm along y on elliptic arms: alpha = s' = 1 mm, v = 1e-5 c, "
        "lambda = 15 mm, 10 W/cm^2.";
    out.emplace(de.name, de);

    auto da = dipole_base("dipole-asymmetric-sec4", GeometryKind::Asymmetric);
    da.geometry.riser_fraction = 1e-5;
    da.description =
        "Electric dipole d = e * 1 nm along y on the staircase pair: alpha = s' = 1 mm, v = 1e-5 c, "
        "lambda = 15 mm, 10 W/cm^2. Riser fraction 1e-5 keeps the risers shorter than a field period.";
    out.emplace(da.name, da);

    auto fa = dipole_base("fullerene-asymmetric-sec4", GeometryKind::Asymmetric);
    fa.field.flux = Quantity{26.0, "W/cm^2"};
    fa.field.wavelength = {3.0, "m"};
    fa.geometry.separation = {7.0, "mm"};
    fa.geometry.longitudinal_length = {1.0, "m"};
    fa.geometry.riser_fraction = 1e-7;
    fa.description =
        "TOY MODEL of a fullerene beam: a dipole d = e * 1 nm along y at v = 1e-5 c, 26 W/cm^2. "
        "Assumed values: s' = 1 m, lambda = 3 m (same order as the travel distance), "
        "alpha = 7 mm, riser fraction 1e-7.";
    out.emplace(fa.name, fa);

    for (auto& [name, s] : out) s.outputs = {"coefficients", "overlap", "fringe"};
    return out;
}

const std::map<std::string, Scenario>& presets() {
    static const auto table = build_presets();
    return table;
}

template <typename E>
[[noreturn]] void rethrow_as(const E&, const std::string& message) {
    throw E(message);
}

std::vector<ClosedFormComparison> literal_closed_forms(const ResolvedScenario& r, double c_modulus,
                                                       std::vector<std::string>& warnings) {
    if (r.pair.kind() == GeometryKind::Piecewise) {
        warnings.emplace_back("no printed closed form for piecewise geometries");
        return {};
    }
    const bool elliptic = r.pair.kind() == GeometryKind::Elliptic;
    ClosedFormInputs in;
    if (r.particle.is_charge())
        in.which = elliptic ? ClosedForm::ElectronElliptic : ClosedForm::ElectronAsymmetric;
    else
        in.which = elliptic ? ClosedForm::DipoleElliptic : ClosedForm::DipoleAsymmetric;
    in.separation = r.pair.separation();
    in.longitudinal_length = r.pair.longitudinal_length();
    in.speed = r.pair.speed();
    in.wavelength = r.field.wavelength();
    in.amplitude = r.field.amplitude();
    in.dipole_length = r.particle.dipole_length_scale();
    if (!r.particle.is_charge()) in.dipole_y = r.particle.electric_dipole().y;

    std::vector<ClosedFormComparison> out;
    std::vector<ClosedFormBranch> branches{ClosedFormBranch::Exact};
    if (elliptic) branches.push_back(ClosedFormBranch::Asymptotic);
    for (auto b : branches) {
        in.branch = b;
        ClosedFormComparison c{in.which, b, 0.0, 0.0};
        try {
            c.value = closed_form_c(in);
        } catch (const DomainError& e) {
            warnings.push_back(std::string("literal closed form skipped: ") + e.what());
            continue;
        }
        if (c.value != 0.0) c.ratio = c_modulus / c.value;
        for (auto& w : closed_form_caveats(in)) warnings.push_back(std::move(w));
        out.push_back(c);
    }
    return out;
}

ScenarioReport run_unchecked(const Scenario& s) {
    s.validate();
    const auto r = resolve(s);
    ScenarioReport rep;
    rep.scenario = s.name;
    rep.angular_frequency = r.field.angular_frequency();
    rep.amplitude = r.field.amplitude();
    rep.flight_time = r.pair.flight_time();
    rep.omega_tau = rep.angular_frequency * rep.flight_time;
    rep.separation = r.pair.separation();
    rep.longitudinal_length = r.pair.longitudinal_length();
    rep.speed = r.pair.speed();
    rep.warnings = r.pair.warnings();

    rep.coefficients = extract_coefficients(r.particle, r.field, r.pair, s.quadrature);
    const double c = rep.coefficients.c_modulus;
    const double f = overlap_factor(c);

    auto& o = rep.oracle;
    o.grid_overlap = time_average_oracle(rep.coefficients, rep.angular_frequency, UniformGrid{s.oracle.grid_points});
    o.grid_delta = std::abs(o.grid_overlap - f);
    o.monte_carlo_overlap = time_average_oracle(rep.coefficients, rep.angular_frequency,
                                                MonteCarlo{s.oracle.monte_carlo_samples, s.seed});
    o.monte_carlo_delta = std::abs(o.monte_carlo_overlap - f);
    o.monte_carlo_bound = 3.0 / std::sqrt(static_cast<double>(s.oracle.monte_carlo_samples));
    o.agrees = o.grid_delta < s.oracle.tolerance;
    if (!o.agrees) rep.warnings.emplace_back("grid time average disagrees with J0(|C|)");
    if (o.monte_carlo_delta >= o.monte_carlo_bound)
        rep.warnings.emplace_back("Monte Carlo time average outside 3/sqrt(N) of J0(|C|)");

    const auto& fs = s.fringe;
    const auto pattern =
        fringe_pattern({f, 0.0}, fs.points, fs.phase_span, fs.amplitude_1, fs.amplitude_2);
    rep.decoherence.overlap_factor = f;
    rep.decoherence.oracle_overlap = o.grid_overlap;
    rep.decoherence.visibility = visibility(pattern);
    rep.decoherence.fringe_shift = std::arg(std::complex<double>(f, 0.0));
    if (std::find(s.outputs.begin(), s.outputs.end(), "fringe") != s.outputs.end()) rep.fringe = pattern;

    rep.geometry_closed_form = geometry_closed_form(r.particle, r.field, r.pair);
    rep.closed_forms = literal_closed_forms(r, c, rep.warnings);
    return rep;
}

}  // namespace

double to_natural(const Quantity& q, Dimension dim) { return q.value * unit_factor(q.unit, dim); }

Vec3 to_natural(const VectorQuantity& q, Dimension dim) { return q.value * unit_factor(q.unit, dim); }

std::vector<std::string> units_for(Dimension dim) {
    std::vector<std::string> out;
    for (const auto& e : unit_table(dim)) out.emplace_back(e.name);
    return out;
}

ParticleSpec ParticleConfig::resolve() const {
    if (kind == ParticleSpec::Kind::Charge) return ParticleSpec::charged(to_natural(charge, Dimension::Charge));
    return ParticleSpec::dipole(to_natural(electric_dipole, Dimension::DipoleMoment),
                                to_natural(magnetic_dipole, Dimension::DipoleMoment),
                                to_natural(dipole_length, Dimension::Length));
}

FieldConfig FieldSettings::resolve() const {
    if (flux.has_value() == amplitude.has_value())
        throw ConfigError("field: give exactly one of 'flux' and 'amplitude'");
    const double lambda = to_natural(wavelength, Dimension::Length);
    const double e0 = flux ? units::field_from_volts_per_metre(
                                 units::amplitude_from_intensity(to_natural(*flux, Dimension::Flux)))
                           : to_natural(*amplitude, Dimension::Field);
    return FieldConfig::from_wavelength(e0, lambda, propagation, polarization);
}

void Scenario::validate() const {
    if (name.empty()) throw ConfigError("scenario: empty name");
    if (field.flux.has_value() == field.amplitude.has_value())
        throw ConfigError("field: give exactly one of 'flux' and 'amplitude'");
    for (const auto& o : outputs)
        if (!kOutputNames.contains(o)) throw ConfigError("outputs: unknown output '" + o + "'");
    if (oracle.grid_points < 1 || oracle.monte_carlo_samples < 1)
        throw ConfigError("oracle: sample counts must be positive");
    if (!(oracle.tolerance > 0.0)) throw ConfigError("oracle: tolerance must be positive");
    if (fringe.points < 8) throw ConfigError("fringe: at least 8 points");
    if (!(fringe.phase_span > 0.0)) throw ConfigError("fringe: phase_span must be positive");
    if (geometry.kind == GeometryKind::Piecewise && (geometry.arm_1.empty() || geometry.arm_2.empty()))
        throw ConfigError("geometry: piecewise geometry needs arm_1 and arm_2 waypoints");
    try {
        quadrature.validate();
    } catch (const DomainError& e) {
        throw ConfigError(std::string("quadrature: ") + e.what());
    }
}

PathPair rebuild_pair(const Scenario& s, double separation, double speed) {
    const double length = to_natural(s.geometry.longitudinal_length, Dimension::Length);
    switch (s.geometry.kind) {
        case GeometryKind::Elliptic: return build_elliptic_pair(separation, length, speed);
        case GeometryKind::Asymmetric:
            return build_asymmetric_pair(separation, length, speed, s.geometry.riser_fraction);
        case GeometryKind::Piecewise: break;
    }
    throw DomainError("piecewise geometries cannot be rebuilt from separation and speed");
}

ResolvedScenario resolve(const Scenario& s) {
    auto particle = s.particle.resolve();
    auto field = s.field.resolve();
    if (s.geometry.kind == GeometryKind::Piecewise) {
        return {particle, field,
                build_piecewise_pair(resolve_waypoints(s.geometry.arm_1), resolve_waypoints(s.geometry.arm_2)),
                0.0};
    }
    return {particle, field,
            rebuild_pair(s, to_natural(s.geometry.separation, Dimension::Length),
                         to_natural(s.geometry.speed, Dimension::Speed)),
            s.geometry.riser_fraction};
}

std::string scenario_to_json(const Scenario& s, int indent) {
    json j;
    j["name"] = s.name;
    j["description"] = s.description;
    json p;
    p["kind"] = s.particle.kind == ParticleSpec::Kind::Charge ? "charge" : "dipole";
    p["charge"] = quantity_json(s.particle.charge);
    p["electric_dipole"] = quantity_json(s.particle.electric_dipole);
    p["magnetic_dipole"] = quantity_json(s.particle.magnetic_dipole);
    p["dipole_length"] = quantity_json(s.particle.dipole_length);
    j["particle"] = p;
    json f;
    if (s.field.flux) f["flux"] = quantity_json(*s.field.flux);
    if (s.field.amplitude) f["amplitude"] = quantity_json(*s.field.amplitude);
    f["wavelength"] = quantity_json(s.field.wavelength);
    f["propagation"] = vec_json(s.field.propagation);
    f["polarization"] = vec_json(s.field.polarization);
    j["field"] = f;
    const auto& g = s.geometry;
    j["geometry"] = {{"kind", kind_name(g.kind)},
                     {"separation", quantity_json(g.separation)},
                     {"longitudinal_length", quantity_json(g.longitudinal_length)},
                     {"speed", quantity_json(g.speed)},
                     {"riser_fraction", g.riser_fraction},
                     {"arm_1", waypoints_json(g.arm_1)},
                     {"arm_2", waypoints_json(g.arm_2)}};
    const auto& q = s.quadrature;
    j["quadrature"] = {{"panels_per_period", q.panels_per_period},
                       {"nodes_per_panel", q.nodes_per_panel},
                       {"relative_tolerance", q.relative_tolerance},
                       {"max_refinements", q.max_refinements}};
    j["outputs"] = s.outputs;
    j["seed"] = s.seed;
    j["oracle"] = {{"grid_points", s.oracle.grid_points},
                   {"monte_carlo_samples", s.oracle.monte_carlo_samples},
                   {"tolerance", s.oracle.tolerance}};
    j["fringe"] = {{"points", s.fringe.points},
                   {"phase_span", s.fringe.phase_span},
                   {"amplitude_1", s.fringe.amplitude_1},
                   {"amplitude_2", s.fringe.amplitude_2}};
    return j.dump(indent);
}

Scenario scenario_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("scenario: malformed JSON: ") + e.what());
    }
    check_keys(j, "scenario",
               {"name", "description", "particle", "field", "geometry", "quadrature", "outputs", "seed", "oracle",
                "fringe"});
    Scenario s;
    s.name = get_or<std::string>(j, "name", "", "scenario");
    s.description = get_or<std::string>(j, "description", "", "scenario");

    if (!j.contains("particle")) throw ConfigError("scenario: missing 'particle'");
    const auto& p = j.at("particle");
    check_keys(p, "particle", {"kind", "charge", "electric_dipole", "magnetic_dipole", "dipole_length"});
    const auto kind = get_or<std::string>(p, "kind", "", "particle");
    if (kind == "charge")
        s.particle.kind = ParticleSpec::Kind::Charge;
    else if (kind == "dipole")
        s.particle.kind = ParticleSpec::Kind::Dipole;
    else
        throw ConfigError("particle.kind: expected charge or dipole, got '" + kind + "'");
    s.particle.charge = quantity_or(p, "charge", s.particle.charge, "particle", Dimension::Charge);
    if (p.contains("electric_dipole"))
        s.particle.electric_dipole =
            vector_quantity_from(p.at("electric_dipole"), "particle.electric_dipole", Dimension::DipoleMoment);
    if (p.contains("magnetic_dipole"))
        s.particle.magnetic_dipole =
            vector_quantity_from(p.at("magnetic_dipole"), "particle.magnetic_dipole", Dimension::DipoleMoment);
    s.particle.dipole_length = quantity_or(p, "dipole_length", s.particle.dipole_length, "particle", Dimension::Length);

    if (!j.contains("field")) throw ConfigError("scenario: missing 'field'");
    const auto& f = j.at("field");
    check_keys(f, "field", {"flux", "amplitude", "wavelength", "propagation", "polarization"});
    if (f.contains("flux")) s.field.flux = quantity_from(f.at("flux"), "field.flux", Dimension::Flux);
    if (f.contains("amplitude"))
        s.field.amplitude = quantity_from(f.at("amplitude"), "field.amplitude", Dimension::Field);
    if (!f.contains("wavelength")) throw ConfigError("field: missing 'wavelength'");
    s.field.wavelength = quantity_from(f.at("wavelength"), "field.wavelength", Dimension::Length);
    s.field.propagation = vec_or(f, "propagation", s.field.propagation, "field");
    s.field.polarization = vec_or(f, "polarization", s.field.polarization, "field");

    if (!j.contains("geometry")) throw ConfigError("scenario: missing 'geometry'");
    const auto& g = j.at("geometry");
    check_keys(g, "geometry",
               {"kind", "separation", "longitudinal_length", "speed", "riser_fraction", "arm_1", "arm_2"});
    s.geometry.kind = geometry_kind_from(get_or<std::string>(g, "kind", "", "geometry"));
    s.geometry.separation = quantity_or(g, "separation", s.geometry.separation, "geometry", Dimension::Length);
    s.geometry.longitudinal_length =
        quantity_or(g, "longitudinal_length", s.geometry.longitudinal_length, "geometry", Dimension::Length);
    s.geometry.speed = quantity_or(g, "speed", s.geometry.speed, "geometry", Dimension::Speed);
    s.geometry.riser_fraction = get_or<double>(g, "riser_fraction", s.geometry.riser_fraction, "geometry");
    if (g.contains("arm_1")) s.geometry.arm_1 = waypoints_from(g.at("arm_1"), "geometry.arm_1");
    if (g.contains("arm_2")) s.geometry.arm_2 = waypoints_from(g.at("arm_2"), "geometry.arm_2");

    if (j.contains("quadrature")) {
        const auto& q = j.at("quadrature");
        check_keys(q, "quadrature", {"panels_per_period", "nodes_per_panel", "relative_tolerance", "max_refinements"});
        auto& qs = s.quadrature;
        qs.panels_per_period = get_or<int>(q, "panels_per_period", qs.panels_per_period, "quadrature");
        qs.nodes_per_panel = get_or<int>(q, "nodes_per_panel", qs.nodes_per_panel, "quadrature");
        qs.relative_tolerance = get_or<double>(q, "relative_tolerance", qs.relative_tolerance, "quadrature");
        qs.max_refinements = get_or<int>(q, "max_refinements", qs.max_refinements, "quadrature");
    }
    s.outputs = get_or<std::vector<std::string>>(j, "outputs", s.outputs, "scenario");
    s.seed = get_or<std::uint64_t>(j, "seed", s.seed, "scenario");
    if (j.contains("oracle")) {
        const auto& o = j.at("oracle");
        check_keys(o, "oracle", {"grid_points", "monte_carlo_samples", "tolerance"});
        s.oracle.grid_points = get_or<std::int64_t>(o, "grid_points", s.oracle.grid_points, "oracle");
        s.oracle.monte_carlo_samples =
            get_or<std::int64_t>(o, "monte_carlo_samples", s.oracle.monte_carlo_samples, "oracle");
        s.oracle.tolerance = get_or<double>(o, "tolerance", s.oracle.tolerance, "oracle");
    }
    if (j.contains("fringe")) {
        const auto& fr = j.at("fringe");
        check_keys(fr, "fringe", {"points", "phase_span", "amplitude_1", "amplitude_2"});
        s.fringe.points = get_or<int>(fr, "points", s.fringe.points, "fringe");
        s.fringe.phase_span = get_or<double>(fr, "phase_span", s.fringe.phase_span, "fringe");
        s.fringe.amplitude_1 = get_or<double>(fr, "amplitude_1", s.fringe.amplitude_1, "fringe");
        s.fringe.amplitude_2 = get_or<double>(fr, "amplitude_2", s.fringe.amplitude_2, "fringe");
    }
    s.validate();
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return scenario_from_json(text.str());
}

std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : presets()) out.push_back(name);
    return out;
}

Scenario preset(const std::string& name) {
    const auto it = presets().find(name);
    if (it == presets().end())
        throw ConfigError("unknown preset '" + name + "'; valid presets: " + join(preset_names()));
    return it->second;
}

Scenario load_scenario(const std::string& name_or_path) {
    if (presets().contains(name_or_path)) return preset(name_or_path);
    if (std::ifstream(name_or_path).good()) return load_scenario_file(name_or_path);
    throw ConfigError("'" + name_or_path + "' is neither a preset nor a readable file; valid presets: " +
                      join(preset_names()));
}

ScenarioReport run_scenario(const Scenario& s) {
    const std::string prefix = "scenario '" + s.name + "': ";
    try {
        return run_unchecked(s);
    } catch (const ConvergenceError& e) {
        throw ConvergenceError(prefix + e.what(), e.previous_estimate(), e.latest_estimate());
    } catch (const ValidationError& e) {
        throw ValidationError(e.invariant(), prefix + e.what());
    } catch (const FormViolationError& e) {
        rethrow_as(e, prefix + e.what());
    } catch (const InsufficientSpanError& e) {
        rethrow_as(e, prefix + e.what());
    } catch (const ConfigError& e) {
        rethrow_as(e, prefix + e.what());
    } catch (const SpecificationError& e) {
        rethrow_as(e, prefix + e.what());
    } catch (const DomainError& e) {
        rethrow_as(e, prefix + e.what());
    }
}

}  // namespace dephase
