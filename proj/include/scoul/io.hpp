#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "scoul/energy_series.hpp"
#include "scoul/laurent_table.hpp"
#include "scoul/potentials.hpp"
#include "scoul/quantum_state.hpp"
#include "scoul/rational.hpp"

namespace scoul::io {

using json = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error("config error: " + what) {}
};

// Rationals travel as strings ("p/q" or integer); a JSON integer is accepted,
// a JSON float never is.
inline Rational rational_from_json(const json& j, const std::string& field) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ConfigError(field + ": " + e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ConfigError(field + ": expected a rational string like \"-1/2\" or an integer");
}

inline json rational_entry(const std::string& index_key, int index, const Rational& value,
                           int digits) {
    json e;
    e[index_key] = index;
    e["rational"] = to_string(value);
    e["decimal"] = decimal_string(value, digits);
    return e;
}

inline json potential_to_json(const ScreenedPotentialSpec& spec) {
    json j;
    j["kind"] = kind_name(spec.kind);
    if (spec.kind == PotentialKind::custom) {
        json coeffs = json::array();
        for (const auto& c : *spec.custom_coeffs) coeffs.push_back(to_string(c));
        j["coeffs"] = coeffs;
    } else {
        j["g"] = to_string(spec.g);
        j["lambda"] = to_string(spec.lambda);
    }
    return j;
}

inline ScreenedPotentialSpec potential_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ConfigError("potential: expected an object with a 'kind' field");
    ScreenedPotentialSpec spec;
    try {
        spec.kind = kind_from_name(j.at("kind").get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("potential.kind: ") + e.what());
    }
    if (spec.kind == PotentialKind::custom) {
        if (!j.contains("coeffs") || !j.at("coeffs").is_array())
            throw ConfigError("potential.coeffs: custom potential needs a coefficient array");
        std::vector<Rational> coeffs;
        int i = 0;
        for (const auto& c : j.at("coeffs"))
            coeffs.push_back(rational_from_json(c, "potential.coeffs[" + std::to_string(i++) + "]"));
        spec.custom_coeffs = std::move(coeffs);
    } else {
        if (j.contains("g")) spec.g = rational_from_json(j.at("g"), "potential.g");
        if (j.contains("lambda")) spec.lambda = rational_from_json(j.at("lambda"), "potential.lambda");
    }
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("potential: ") + e.what());
    }
    return spec;
}

inline json energy_series_to_json(const EnergySeries& series, int digits) {
    json j;
    j["n"] = series.n;
    j["l"] = series.l;
    json arr = json::array();
    for (int k = 0; k <= series.order(); ++k)
        arr.push_back(rational_entry("k", k, series.at(k), digits));
    j["energies"] = arr;
    return j;
}

inline EnergySeries energy_series_from_json(const json& j) {
    EnergySeries series;
    series.n = j.at("n").get<int>();
    series.l = j.at("l").get<int>();
    for (const auto& e : j.at("energies")) {
        int k = e.at("k").get<int>();
        if (k != static_cast<int>(series.values.size()))
            throw ConfigError("energies: non-contiguous order index " + std::to_string(k));
        series.values.push_back(rational_from_json(e.at("rational"), "energies.rational"));
    }
    return series;
}

inline json laurent_table_to_json(const LaurentTable& table) {
    json rows = json::array();
    for (int k = 0; k <= table.order(); ++k) {
        json row = json::array();
        for (int i = 0; i <= table.order(); ++i) row.push_back(to_string(table.at(k, i)));
        rows.push_back(row);
    }
    return rows;
}

inline LaurentTable laurent_table_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ConfigError("laurent: expected a non-empty array");
    LaurentTable table(static_cast<int>(j.size()) - 1);
    for (int k = 0; k <= table.order(); ++k)
        for (int i = 0; i <= table.order(); ++i)
            table.at(k, i) = rational_from_json(j.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(i)),
                                                "laurent[" + std::to_string(k) + "]");
    return table;
}

// Batch job description; built from flags, a JSON config file, or both.
struct JobConfig {
    ScreenedPotentialSpec potential;
    Rational mass = 1;
    std::vector<std::pair<int, int>> states;      // (n, l)
    int order = 6;
    std::vector<std::pair<int, int>> pade_orders; // (L, M)
    bool validate = false;
    double tol = 1e-7;
    int count = -1;          // series subcommand: coefficient count
    bool emit_table = false;
    int grid_steps = 150000;
};

inline JobConfig config_from_json(const json& j) {
    JobConfig cfg;
    if (!j.is_object()) throw ConfigError("top level: expected a JSON object");
    if (j.contains("potential")) cfg.potential = potential_from_json(j.at("potential"));
    if (j.contains("mass")) cfg.mass = rational_from_json(j.at("mass"), "mass");
    if (j.contains("order")) {
        if (!j.at("order").is_number_integer()) throw ConfigError("order: expected an integer");
        cfg.order = j.at("order").get<int>();
    }
    if (j.contains("states")) {
        if (!j.at("states").is_array()) throw ConfigError("states: expected an array of [n, l] pairs");
        for (const auto& s : j.at("states")) {
            if (!s.is_array() || s.size() != 2)
                throw ConfigError("states: each entry must be an [n, l] pair");
            cfg.states.emplace_back(s.at(0).get<int>(), s.at(1).get<int>());
        }
    }
    if (j.contains("pade")) {
        if (!j.at("pade").is_array()) throw ConfigError("pade: expected an array of [L, M] pairs");
        for (const auto& p : j.at("pade")) {
            if (!p.is_array() || p.size() != 2)
                throw ConfigError("pade: each entry must be an [L, M] pair");
            cfg.pade_orders.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
        }
    }
    if (j.contains("validate")) {
        if (!j.at("validate").is_boolean()) throw ConfigError("validate: expected a boolean");
        cfg.validate = j.at("validate").get<bool>();
    }
    if (j.contains("tol")) {
        if (!j.at("tol").is_number()) throw ConfigError("tol: expected a number");
        cfg.tol = j.at("tol").get<double>();
    }
    return cfg;
}

}  // namespace scoul::io
