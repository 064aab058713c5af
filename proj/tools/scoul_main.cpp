// Batch CLI: series, energies, sum, validate.  Machine-readable output only;
// rationals serialize as strings, decimals are a convenience column.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scoul/io.hpp"
#include "scoul/numerov.hpp"
#include "scoul/series_expansion.hpp"
#include "scoul/summation.hpp"

namespace {

using scoul::Rational;
using scoul::io::ConfigError;
using scoul::io::JobConfig;
using scoul::io::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitComputation = 2;
constexpr int kExitValidation = 3;

struct CommonFlags {
    std::string config_path;
    std::string output = "json";
    int decimal_digits = 12;
    std::string kind;
    std::string g;
    std::string lambda;
    std::string mass;
    std::vector<std::string> states;
    std::vector<std::string> coeffs;
    int order = -1;
    std::vector<std::string> pade;
    double tol = -1;
    int count = -1;
    bool table = false;
    int steps = -1;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_path, "JSON job config file");
    cmd->add_option("--output", f.output, "Output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--decimal-digits", f.decimal_digits, "Digits in the decimal column")
        ->check(CLI::Range(0, 200));
    cmd->add_option("--kind", f.kind, "Potential kind: coulomb|yukawa|hulthen|exp-cosine|custom");
    cmd->add_option("--g", f.g, "Coupling strength (rational string)");
    cmd->add_option("--lambda", f.lambda, "Screening parameter (rational string)");
    cmd->add_option("--mass", f.mass, "Particle mass (rational string)");
    cmd->add_option("--state", f.states, "Quantum state as n,l (repeatable)");
    cmd->add_option("--coeffs", f.coeffs, "Custom potential coefficients (rational strings)");
    cmd->add_option("--order", f.order, "Expansion order K");
    cmd->add_option("--tol", f.tol, "Validation tolerance");
}

std::pair<int, int> parse_int_pair(const std::string& s, const std::string& what) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ConfigError(what + ": expected 'a,b', got '" + s + "'");
    try {
        return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ConfigError(what + ": bad integer in '" + s + "'");
    }
}

JobConfig build_config(const CommonFlags& f) {
    JobConfig cfg;
    if (!f.config_path.empty()) {
        std::ifstream in(f.config_path);
        if (!in) throw ConfigError("cannot open config file '" + f.config_path + "'");
        json j;
        try {
            in >> j;
        } catch (const json::parse_error& e) {
            throw ConfigError("config file parse failure: " + std::string(e.what()));
        }
        cfg = scoul::io::config_from_json(j);
    }
    if (!f.kind.empty()) {
        try {
            cfg.potential.kind = scoul::kind_from_name(f.kind);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    try {
        if (!f.g.empty()) cfg.potential.g = scoul::parse_rational(f.g);
        if (!f.lambda.empty()) cfg.potential.lambda = scoul::parse_rational(f.lambda);
        if (!f.coeffs.empty()) {
            std::vector<Rational> c;
            for (const auto& s : f.coeffs) c.push_back(scoul::parse_rational(s));
            cfg.potential.custom_coeffs = std::move(c);
        }
        if (!f.mass.empty()) cfg.mass = scoul::parse_rational(f.mass);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    for (const auto& s : f.states) cfg.states.push_back(parse_int_pair(s, "--state"));
    for (const auto& s : f.pade) cfg.pade_orders.push_back(parse_int_pair(s, "--pade"));
    if (f.order >= 0) cfg.order = f.order;
    if (f.tol > 0) cfg.tol = f.tol;
    if (f.count >= 0) cfg.count = f.count;
    if (f.steps > 0) cfg.grid_steps = f.steps;
    cfg.emit_table = f.table;
    try {
        cfg.potential.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (cfg.states.empty()) cfg.states.emplace_back(0, 0);
    return cfg;
}

scoul::PotentialSeries series_for(const JobConfig& cfg, int coefficient_count) {
    return scoul::taylor_coefficients(cfg.potential, std::max(coefficient_count, 1), cfg.mass);
}

void emit(const json& j, const std::string& format, const JobConfig& cfg) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // CSV: fixed columns k, numerator, denominator, decimal, one header per block
    (void)cfg;
    std::ostringstream out;
    auto write_block = [&out](const json& entries) {
        out << "k,numerator,denominator,decimal\n";
        for (const auto& e : entries) {
            Rational r = scoul::parse_rational(e.at("rational").get<std::string>());
            out << e.at("k").get<int>() << "," << scoul::num(r) << "," << scoul::den(r) << ","
                << e.at("decimal").get<std::string>() << "\n";
        }
    };
    if (j.contains("coefficients")) write_block(j.at("coefficients"));
    if (j.contains("states"))
        for (const auto& s : j.at("states"))
            if (s.contains("energies")) write_block(s.at("energies"));
    std::cout << out.str();
}

json job_header(const char* command, const JobConfig& cfg) {
    json j;
    j["command"] = command;
    j["potential"] = scoul::io::potential_to_json(cfg.potential);
    j["mass"] = scoul::to_string(cfg.mass);
    return j;
}

int cmd_series(const JobConfig& cfg, const std::string& format, int digits) {
    int count = cfg.count >= 0 ? cfg.count : std::max(cfg.order, 1);
    auto pot = series_for(cfg, count);
    json j = job_header("series", cfg);
    json arr = json::array();
    for (int i = 0; i <= pot.max_index(); ++i)
        arr.push_back(scoul::io::rational_entry("k", i, pot.v(i), digits));
    j["coefficients"] = arr;
    emit(j, format, cfg);
    return kExitOk;
}

int cmd_energies(const JobConfig& cfg, const std::string& format, int digits) {
    json j = job_header("energies", cfg);
    j["order"] = cfg.order;
    auto pot = series_for(cfg, cfg.order);
    json states = json::array();
    for (auto [n, l] : cfg.states) {
        scoul::QuantumState state(n, l);
        auto res = scoul::expand(pot, state, cfg.order);
        json s = scoul::io::energy_series_to_json(res.energies, digits);
        if (cfg.emit_table) s["laurent"] = scoul::io::laurent_table_to_json(res.table);
        states.push_back(std::move(s));
    }
    j["states"] = states;
    emit(j, format, cfg);
    return kExitOk;
}

int cmd_sum(const JobConfig& cfg, const std::string& format, int digits) {
    json j = job_header("sum", cfg);
    j["order"] = cfg.order;
    auto pot = series_for(cfg, cfg.order);
    json states = json::array();
    for (auto [n, l] : cfg.states) {
        scoul::QuantumState state(n, l);
        auto res = scoul::expand(pot, state, cfg.order);
        json s;
        s["n"] = n;
        s["l"] = l;
        json sums = json::array();
        auto ps = scoul::partial_sums(res.energies);
        for (int k = 0; k < static_cast<int>(ps.size()); ++k)
            sums.push_back(scoul::io::rational_entry("k", k, ps[static_cast<std::size_t>(k)], digits));
        s["partial_sums"] = sums;
        json pades = json::array();
        for (auto [L, M] : cfg.pade_orders) {
            json p;
            p["L"] = L;
            p["M"] = M;
            try {
                auto approx = scoul::pade(res.energies, L, M);
                Rational value = approx.resummed();
                p["rational"] = scoul::to_string(value);
                p["decimal"] = scoul::decimal_string(value, digits);
            } catch (const std::exception& e) {
                p["error"] = e.what();
            }
            pades.push_back(std::move(p));
        }
        s["pade"] = pades;
        if (res.energies.order() >= 3) {
            auto d = scoul::diagnostics(res.energies);
            json diag;
            diag["divergence_flag"] = d.divergence_flag;
            diag["smallest_term_index"] = d.smallest_term_index;
            json ratios = json::array();
            for (int k = 0; k < static_cast<int>(d.ratios.size()); ++k) {
                if (!d.ratios[static_cast<std::size_t>(k)]) continue;
                ratios.push_back(scoul::io::rational_entry("k", k, *d.ratios[static_cast<std::size_t>(k)], digits));
            }
            diag["ratios"] = ratios;
            json skipped = json::array();
            for (int k : d.skipped_zero_indices) skipped.push_back(k);
            diag["skipped_zero_indices"] = skipped;
            s["diagnostics"] = diag;
        }
        states.push_back(std::move(s));
    }
    j["states"] = states;
    emit(j, format, cfg);
    return kExitOk;
}

int cmd_validate(const JobConfig& cfg, const std::string& format, int digits) {
    json j = job_header("validate", cfg);
    j["order"] = cfg.order;
    j["tol"] = cfg.tol;
    bool exceeded = false;
    bool hard_error = false;
    json states = json::array();
    const bool closed_form = scoul::has_closed_form(cfg.potential);
    std::optional<scoul::PotentialSeries> pot;
    if (closed_form || cfg.potential.custom_coeffs) pot = series_for(cfg, cfg.order);
    for (auto [n, l] : cfg.states) {
        scoul::QuantumState state(n, l);
        json s;
        s["n"] = n;
        s["l"] = l;
        auto res = scoul::expand(*pot, state, cfg.order);
        Rational estimate;
        if (!cfg.pade_orders.empty()) {
            auto [L, M] = cfg.pade_orders.front();
            estimate = scoul::pade(res.energies, L, M).resummed();
            s["estimate_kind"] = "pade[" + std::to_string(L) + "/" + std::to_string(M) + "]";
        } else {
            estimate = res.energies.sum(res.energies.order());
            s["estimate_kind"] = "partial_sum";
        }
        s["series_estimate"] = scoul::to_string(estimate);
        s["series_estimate_decimal"] = scoul::decimal_string(estimate, digits);
        if (!closed_form) {
            s["status"] = "validation unavailable";
            states.push_back(std::move(s));
            continue;
        }
        try {
            auto grid = scoul::RadialGrid::coulombic(scoul::to_double(cfg.mass),
                                                     scoul::to_double(cfg.potential.g),
                                                     state.principal_multiplicity(), cfg.grid_steps);
            auto eig = scoul::solve(cfg.potential, scoul::to_double(cfg.mass), state, grid, 1e-10);
            double est = scoul::to_double(estimate);
            double abs_dev = std::fabs(est - eig.energy);
            double rel_dev = abs_dev / std::fabs(eig.energy);
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.15e", eig.energy);
            s["oracle"] = std::string(buf);
            std::snprintf(buf, sizeof buf, "%.6e", abs_dev);
            s["abs_deviation"] = std::string(buf);
            std::snprintf(buf, sizeof buf, "%.6e", rel_dev);
            s["rel_deviation"] = std::string(buf);
            if (rel_dev > cfg.tol) {
                s["status"] = "tolerance exceeded";
                exceeded = true;
            } else {
                s["status"] = "ok";
            }
        } catch (const std::exception& e) {
            s["status"] = std::string("oracle error: ") + e.what();
            hard_error = true;
        }
        states.push_back(std::move(s));
    }
    j["states"] = states;
    emit(j, format, cfg);
    if (hard_error) return kExitComputation;
    return exceeded ? kExitValidation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semiclassical perturbation expansions for screened Coulomb bound states"};
    app.require_subcommand(1);

    CommonFlags fs, fe, fm, fv;
    auto* series = app.add_subcommand("series", "Emit potential Taylor coefficients");
    add_common(series, fs);
    series->add_option("--count", fs.count, "Highest coefficient index I (emits V_0..V_I)");

    auto* energies = app.add_subcommand("energies", "Compute energy corrections E_0..E_K");
    add_common(energies, fe);
    energies->add_flag("--table", fe.table, "Also emit the Laurent coefficient grid");

    auto* sum = app.add_subcommand("sum", "Partial sums, Pade estimates, diagnostics");
    add_common(sum, fm);
    sum->add_option("--pade", fm.pade, "Pade degrees as L,M (repeatable)");

    auto* validate = app.add_subcommand("validate", "Compare series estimates with the eigensolver");
    add_common(validate, fv);
    validate->add_option("--pade", fv.pade, "Pade degrees as L,M (first pair is the estimate)");
    validate->add_option("--steps", fv.steps, "Radial grid step count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (series->parsed()) {
            auto cfg = build_config(fs);
            return cmd_series(cfg, fs.output, fs.decimal_digits);
        }
        if (energies->parsed()) {
            auto cfg = build_config(fe);
            return cmd_energies(cfg, fe.output, fe.decimal_digits);
        }
        if (sum->parsed()) {
            auto cfg = build_config(fm);
            return cmd_sum(cfg, fm.output, fm.decimal_digits);
        }
        auto cfg = build_config(fv);
        return cmd_validate(cfg, fv.output, fv.decimal_digits);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}
