#include "drpslte/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "drpslte/errors.hpp"
#include "drpslte/format.hpp"

namespace drpslte {

namespace {

enum class UnitFamily { plain, frequency, rate, duration, data, count };

struct UnitEntry {
    const char* suffix;
    double factor;
};

// Suffix tables, matched case-insensitively. Data units are decimal bits.
constexpr UnitEntry kFrequencyUnits[] = {{"hz", 1.0}, {"khz", 1e3}, {"mhz", 1e6}, {"ghz", 1e9}};
constexpr UnitEntry kRateUnits[] = {{"bps", 1.0}, {"kbps", 1e3}, {"mbps", 1e6}, {"gbps", 1e9}};
constexpr UnitEntry kDurationUnits[] = {{"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}};
constexpr UnitEntry kDataUnits[] = {
    {"b", 1.0}, {"bit", 1.0}, {"bits", 1.0}, {"kb", 1e3}, {"mb", 1e6}, {"gb", 1e9}};
constexpr UnitEntry kCountUnits[] = {{"k", 1e3}, {"m", 1e6}, {"g", 1e9}};

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r");
    auto end = s.find_last_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

double unit_factor(const std::string& suffix, UnitFamily family, const std::string& key) {
    if (suffix.empty()) return 1.0;
    const std::string want = lower(suffix);
    auto scan = [&](const auto& table) -> std::optional<double> {
        for (const auto& entry : table)
            if (want == entry.suffix) return entry.factor;
        return std::nullopt;
    };
    std::optional<double> factor;
    switch (family) {
        case UnitFamily::plain: break;
        case UnitFamily::frequency: factor = scan(kFrequencyUnits); break;
        case UnitFamily::rate: factor = scan(kRateUnits); break;
        case UnitFamily::duration: factor = scan(kDurationUnits); break;
        case UnitFamily::data: factor = scan(kDataUnits); break;
        case UnitFamily::count: factor = scan(kCountUnits); break;
    }
    if (!factor) throw ValidationError("bad unit '" + suffix + "' for key '" + key + "'");
    return *factor;
}

double parse_quantity(const std::string& raw, UnitFamily family, const std::string& key) {
    const std::string text = trim(raw);
    if (text.empty()) throw ValidationError("missing value for key '" + key + "'");
    const char* begin = text.c_str();
    char* end = nullptr;
    const double number = std::strtod(begin, &end);
    if (end == begin) throw ValidationError("invalid number for key '" + key + "'");
    const double factor = unit_factor(trim(std::string(end)), family, key);
    return number * factor;
}

int parse_int(const std::string& raw, const std::string& key) {
    const double v = parse_quantity(raw, UnitFamily::count, key);
    const double rounded = std::nearbyint(v);
    if (!(std::isfinite(v)) || v != rounded || std::abs(v) > 1e9)
        throw ValidationError("key '" + key + "' needs an integer value");
    return static_cast<int>(rounded);
}

std::vector<std::string> split_list(const std::string& raw) {
    std::vector<std::string> items;
    std::string current;
    std::istringstream is(raw);
    while (std::getline(is, current, ',')) items.push_back(current);
    return items;
}

std::vector<double> parse_list(const std::string& raw, UnitFamily family, const std::string& key) {
    std::vector<double> out;
    for (const auto& item : split_list(raw)) out.push_back(parse_quantity(item, family, key));
    if (out.empty()) throw ValidationError("key '" + key + "' needs at least one value");
    return out;
}

std::vector<int> parse_int_list(const std::string& raw, const std::string& key) {
    std::vector<int> out;
    for (const auto& item : split_list(raw)) out.push_back(parse_int(item, key));
    if (out.empty()) throw ValidationError("key '" + key + "' needs at least one value");
    return out;
}

void assign(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
    auto qty = [&](UnitFamily family) { return parse_quantity(value, family, key); };

    if (key == "scenario_id") {
        const std::string id = trim(value);
        if (id.empty() || id.find_first_not_of("abcdefghijklmnopqrstuvwxyz"
                                               "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
                                               "0123456789._-") != std::string::npos)
            throw ValidationError("scenario_id must be non-empty [A-Za-z0-9._-]");
        cfg.scenario_id = id;
    } else if (key == "f_ec") {
        cfg.edge.cpu_hz = qty(UnitFamily::frequency);
    } else if (key == "f_cc") {
        cfg.cloud.cpu_hz = qty(UnitFamily::frequency);
    } else if (key == "r_eff") {
        cfg.path.rate_bps = qty(UnitFamily::rate);
    } else if (key == "t_radio") {
        cfg.path.t_radio_s = qty(UnitFamily::duration);
    } else if (key == "t_radio_edge") {
        cfg.t_radio_edge_s = qty(UnitFamily::duration);
    } else if (key == "t_backhaul") {
        cfg.path.t_backhaul_s = qty(UnitFamily::duration);
    } else if (key == "t_core") {
        cfg.path.t_core_s = qty(UnitFamily::duration);
    } else if (key == "t_transport") {
        cfg.path.t_transport_s = qty(UnitFamily::duration);
    } else if (key == "e_d_bs") {
        cfg.path.bs_energy_per_bit = qty(UnitFamily::plain);
    } else if (key == "e_cpu_ec") {
        cfg.edge.energy_per_cycle = qty(UnitFamily::plain);
    } else if (key == "e_d_ec") {
        cfg.edge.energy_per_bit = qty(UnitFamily::plain);
    } else if (key == "e_cpu_c") {
        cfg.cloud.energy_per_cycle = qty(UnitFamily::plain);
    } else if (key == "e_d_c") {
        cfg.cloud.energy_per_bit = qty(UnitFamily::plain);
    } else if (key == "cycles") {
        cfg.cycles = qty(UnitFamily::count);
    } else if (key == "data") {
        cfg.data_bits = qty(UnitFamily::data);
    } else if (key == "sweep_points") {
        cfg.sweep_points = parse_int(value, key);
    } else if (key == "c_min") {
        cfg.c_min = qty(UnitFamily::count);
    } else if (key == "c_max") {
        cfg.c_max = qty(UnitFamily::count);
    } else if (key == "d_min") {
        cfg.d_min = qty(UnitFamily::data);
    } else if (key == "d_max") {
        cfg.d_max = qty(UnitFamily::data);
    } else if (key == "pairing") {
        const std::string v = lower(trim(value));
        if (v == "zipped")
            cfg.pairing = PairingMode::zipped;
        else if (v == "cartesian")
            cfg.pairing = PairingMode::cartesian;
        else
            throw ValidationError("key 'pairing' must be 'zipped' or 'cartesian'");
    } else if (key == "spacing") {
        const std::string v = lower(trim(value));
        if (v == "log")
            cfg.spacing = GridSpacing::log;
        else if (v == "linear")
            cfg.spacing = GridSpacing::linear;
        else
            throw ValidationError("key 'spacing' must be 'log' or 'linear'");
    } else if (key == "rates") {
        cfg.rates_bps = parse_list(value, UnitFamily::rate, key);
    } else if (key == "energy_caps") {
        cfg.energy_caps = parse_list(value, UnitFamily::count, key);
    } else if (key == "task_count") {
        cfg.task_count = parse_int(value, key);
    } else if (key == "cycles_per_bit") {
        cfg.cycles_per_bit = qty(UnitFamily::plain);
    } else if (key == "dispatch") {
        const std::string v = lower(trim(value));
        if (v == "round-robin")
            cfg.dispatch = DispatchPolicy::round_robin;
        else if (v == "least-loaded")
            cfg.dispatch = DispatchPolicy::least_loaded;
        else
            throw ValidationError("key 'dispatch' must be 'round-robin' or 'least-loaded'");
    } else if (key == "fleet_sizes") {
        cfg.fleet_sizes = parse_int_list(value, key);
    } else if (key == "fleet_totals") {
        cfg.fleet_totals_bits = parse_list(value, UnitFamily::data, key);
    } else if (key == "users") {
        cfg.users = parse_int(value, key);
    } else if (key == "output") {
        const std::string path = trim(value);
        if (path.empty()) throw ValidationError("key 'output' needs a path");
        cfg.output_path = path;
    } else {
        throw ValidationError("unknown key '" + key + "'");
    }
}

void check(bool ok, const std::string& message) {
    if (!ok) throw ValidationError(message);
}

bool finite_pos(double v) {
    return std::isfinite(v) && v > 0.0;
}

bool finite_nonneg(double v) {
    return std::isfinite(v) && v >= 0.0;
}

}  // namespace

NetworkPath ScenarioConfig::edge_path() const {
    NetworkPath p = path;
    if (t_radio_edge_s) p.t_radio_s = *t_radio_edge_s;
    return p;
}

SweepSpec ScenarioConfig::sweep_spec() const {
    SweepSpec spec;
    spec.scenario_id = scenario_id;
    spec.cycles = make_grid(c_min, c_max, sweep_points, spacing);
    spec.data_bits = make_grid(d_min, d_max, sweep_points, spacing);
    spec.pairing = pairing;
    spec.rates_bps = rates_bps;
    spec.edge = edge;
    spec.cloud = cloud;
    spec.path = path;
    spec.t_radio_edge_s = t_radio_edge_s;
    return spec;
}

FleetScenario ScenarioConfig::fleet_scenario() const {
    FleetScenario sc;
    sc.fleet_size = fleet_sizes.empty() ? 1 : fleet_sizes.front();
    sc.total_bits = fleet_totals_bits.empty() ? 1e6 : fleet_totals_bits.front();
    sc.task_count = task_count;
    sc.cycles_per_bit = cycles_per_bit;
    sc.link = edge_path();
    sc.edge = edge;
    sc.dispatch = dispatch;
    sc.users = users;
    return sc;
}

ScenarioConfig parse_scenario(std::istream& in) {
    ScenarioConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        const std::string text = trim(line);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw ValidationError("line " + std::to_string(lineno) +
                                  ": expected 'key = value', got '" + text + "'");
        const std::string key = trim(text.substr(0, eq));
        if (key.empty())
            throw ValidationError("line " + std::to_string(lineno) + ": missing key");
        assign(cfg, key, text.substr(eq + 1));
    }
    validate(cfg);
    return cfg;
}

ScenarioConfig parse_scenario(const std::string& text) {
    std::istringstream is(text);
    return parse_scenario(is);
}

ScenarioConfig parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read scenario file '" + path + "'");
    return parse_scenario(in);
}

void apply_setting(ScenarioConfig& config, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ValidationError("expected key=value, got '" + assignment + "'");
    const std::string key = trim(assignment.substr(0, eq));
    if (key.empty()) throw ValidationError("expected key=value, got '" + assignment + "'");
    assign(config, key, assignment.substr(eq + 1));
}

std::string emit(const ScenarioConfig& c) {
    std::ostringstream os;
    auto put = [&os](const char* key, const std::string& value) {
        os << key << " = " << value << '\n';
    };
    auto num = [&put](const char* key, double v) { put(key, format_double(v)); };
    auto integer = [&put](const char* key, int v) { put(key, format_int(v)); };
    auto list = [&put](const char* key, const std::vector<double>& vs) {
        std::string joined;
        for (double v : vs) {
            if (!joined.empty()) joined += ',';
            joined += format_double(v);
        }
        put(key, joined);
    };

    put("scenario_id", c.scenario_id);
    num("f_ec", c.edge.cpu_hz);
    num("f_cc", c.cloud.cpu_hz);
    num("r_eff", c.path.rate_bps);
    num("t_radio", c.path.t_radio_s);
    if (c.t_radio_edge_s) num("t_radio_edge", *c.t_radio_edge_s);
    num("t_backhaul", c.path.t_backhaul_s);
    num("t_core", c.path.t_core_s);
    num("t_transport", c.path.t_transport_s);
    num("e_d_bs", c.path.bs_energy_per_bit);
    num("e_cpu_ec", c.edge.energy_per_cycle);
    num("e_d_ec", c.edge.energy_per_bit);
    num("e_cpu_c", c.cloud.energy_per_cycle);
    num("e_d_c", c.cloud.energy_per_bit);
    num("cycles", c.cycles);
    num("data", c.data_bits);
    integer("sweep_points", c.sweep_points);
    num("c_min", c.c_min);
    num("c_max", c.c_max);
    num("d_min", c.d_min);
    num("d_max", c.d_max);
    put("pairing", c.pairing == PairingMode::zipped ? "zipped" : "cartesian");
    put("spacing", c.spacing == GridSpacing::log ? "log" : "linear");
    list("rates", c.rates_bps);
    list("energy_caps", c.energy_caps);
    integer("task_count", c.task_count);
    num("cycles_per_bit", c.cycles_per_bit);
    put("dispatch", to_string(c.dispatch));
    {
        std::string joined;
        for (int k : c.fleet_sizes) {
            if (!joined.empty()) joined += ',';
            joined += format_int(k);
        }
        put("fleet_sizes", joined);
    }
    list("fleet_totals", c.fleet_totals_bits);
    if (c.users) integer("users", *c.users);
    if (c.output_path) put("output", *c.output_path);
    return os.str();
}

void validate(const ScenarioConfig& c) {
    check(finite_pos(c.edge.cpu_hz), "f_ec must be finite and > 0");
    check(finite_pos(c.cloud.cpu_hz), "f_cc must be finite and > 0");
    check(finite_pos(c.path.rate_bps), "r_eff must be finite and > 0");
    check(finite_nonneg(c.path.t_radio_s), "t_radio must be finite and >= 0");
    check(!c.t_radio_edge_s || finite_nonneg(*c.t_radio_edge_s),
          "t_radio_edge must be finite and >= 0");
    check(finite_nonneg(c.path.t_backhaul_s), "t_backhaul must be finite and >= 0");
    check(finite_nonneg(c.path.t_core_s), "t_core must be finite and >= 0");
    check(finite_nonneg(c.path.t_transport_s), "t_transport must be finite and >= 0");
    check(finite_nonneg(c.path.bs_energy_per_bit), "e_d_bs must be finite and >= 0");
    check(finite_nonneg(c.edge.energy_per_cycle), "e_cpu_ec must be finite and >= 0");
    check(finite_nonneg(c.edge.energy_per_bit), "e_d_ec must be finite and >= 0");
    check(finite_nonneg(c.cloud.energy_per_cycle), "e_cpu_c must be finite and >= 0");
    check(finite_nonneg(c.cloud.energy_per_bit), "e_d_c must be finite and >= 0");
    check(finite_nonneg(c.cycles), "cycles must be finite and >= 0");
    check(finite_nonneg(c.data_bits), "data must be finite and >= 0");
    check(c.sweep_points >= 1, "sweep_points must be >= 1");
    check(finite_pos(c.c_min) || (c.spacing == GridSpacing::linear && finite_nonneg(c.c_min)),
          "c_min must be finite and > 0 (>= 0 with linear spacing)");
    check(finite_nonneg(c.c_max) && c.c_min <= c.c_max, "c_max must be finite and >= c_min");
    check(finite_pos(c.d_min) || (c.spacing == GridSpacing::linear && finite_nonneg(c.d_min)),
          "d_min must be finite and > 0 (>= 0 with linear spacing)");
    check(finite_nonneg(c.d_max) && c.d_min <= c.d_max, "d_max must be finite and >= d_min");
    check(!c.rates_bps.empty(), "rates must not be empty");
    for (double r : c.rates_bps) check(finite_pos(r), "rates entries must be finite and > 0");
    check(!c.energy_caps.empty(), "energy_caps must not be empty");
    for (double cap : c.energy_caps)
        check(finite_pos(cap), "energy_caps entries must be finite and > 0");
    check(c.task_count >= 1, "task_count must be >= 1");
    check(finite_pos(c.cycles_per_bit), "cycles_per_bit must be finite and > 0");
    check(!c.fleet_sizes.empty(), "fleet_sizes must not be empty");
    for (int k : c.fleet_sizes) check(k >= 1, "fleet_sizes entries must be >= 1");
    check(!c.fleet_totals_bits.empty(), "fleet_totals must not be empty");
    for (double t : c.fleet_totals_bits)
        check(finite_pos(t), "fleet_totals entries must be finite and > 0");
    check(!c.users || *c.users >= 0, "users must be >= 0");
}

}  // namespace drpslte
