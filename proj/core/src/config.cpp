#include "rsopt/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rsopt/csv.hpp"

namespace rsopt {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1" || v == "on") return true;
    if (v == "false" || v == "0" || v == "off") return false;
    throw std::invalid_argument("config: bad boolean for " + key + ": " + v);
}

} // namespace

std::vector<std::string> PipelineConfig::validate() const {
    std::vector<std::string> bad;
    if (doe_n < 2) bad.push_back("doe.n must be >= 2");
    if (doe_train <= 0 || doe_train >= doe_n) bad.push_back("doe.train must be in (0, doe.n)");
    if (sobol_n_base < 64) bad.push_back("sobol.n_base must be >= 64");
    if (sobol_top_k < 0) bad.push_back("sobol.top_k must be >= 0");
    if (formulations.empty()) bad.push_back("formulations must be non-empty");
    if (optimizer_population < 4 || optimizer_population % 2 != 0) {
        bad.push_back("optimizer.population must be even and >= 4");
    }
    if (optimizer_generations < 1) bad.push_back("optimizer.generations must be >= 1");
    if (inner_pso_particles < 2) bad.push_back("inner_pso.particles must be >= 2");
    if (inner_pso_iterations < 1) bad.push_back("inner_pso.iterations must be >= 1");
    if (n_expectation < 1) bad.push_back("robust.n_expectation must be >= 1");
    if (n_posterior < 1) bad.push_back("robust.n_posterior must be >= 1");
    if (zone_tol < 0) bad.push_back("zones.tol must be >= 0");
    return bad;
}

PipelineConfig parse_config_text(const std::string& text) {
    PipelineConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "problem") {
                cfg.problem = value;
            } else if (key == "out") {
                cfg.out_dir = value;
            } else if (key == "seed") {
                cfg.seed = std::stoull(value);
            } else if (key == "doe.n") {
                cfg.doe_n = std::stoi(value);
            } else if (key == "doe.train") {
                cfg.doe_train = std::stoi(value);
            } else if (key == "doe.iterations") {
                cfg.doe_iterations = std::stol(value);
            } else if (key == "doe.jitter") {
                cfg.doe_jitter = parse_bool(value, key);
            } else if (key.rfind("surrogate.kernel.", 0) == 0) {
                cfg.kernels[key.substr(17)] = value;
            } else if (key == "sobol.n_base") {
                cfg.sobol_n_base = std::stoi(value);
            } else if (key == "sobol.top_k") {
                cfg.sobol_top_k = std::stoi(value);
            } else if (key == "formulations") {
                cfg.formulations.clear();
                for (const auto& tok : split_ws(value)) {
                    cfg.formulations.push_back(formulation_from_name(tok));
                }
            } else if (key == "optimizer.population") {
                cfg.optimizer_population = std::stoi(value);
            } else if (key == "optimizer.generations") {
                cfg.optimizer_generations = std::stoi(value);
            } else if (key == "inner_pso.particles") {
                cfg.inner_pso_particles = std::stoi(value);
            } else if (key == "inner_pso.iterations") {
                cfg.inner_pso_iterations = std::stoi(value);
            } else if (key == "robust.n_expectation") {
                cfg.n_expectation = std::stoi(value);
            } else if (key == "robust.n_posterior") {
                cfg.n_posterior = std::stoi(value);
            } else if (key == "robust.qmc") {
                if (value == "lhs") {
                    cfg.qmc_scheme = QmcScheme::lhs;
                } else if (value == "sobol") {
                    cfg.qmc_scheme = QmcScheme::sobol;
                } else {
                    throw std::invalid_argument("robust.qmc must be lhs or sobol");
                }
            } else if (key == "robust.outer_extended") {
                cfg.outer_extended = parse_bool(value, key);
            } else if (key == "zones") {
                cfg.zone_targets.clear();
                for (const auto& tok : split_ws(value)) cfg.zone_targets.push_back(std::stod(tok));
            } else if (key == "zones.tol") {
                cfg.zone_tol = std::stod(value);
            } else if (key == "zones.objective") {
                cfg.zone_objective = std::stoi(value);
            } else if (key == "variable") {
                const auto f = split_ws(value);
                if (f.size() != 5) {
                    throw std::invalid_argument(
                        "variable needs: name lower upper tolerance uncertain");
                }
                cfg.variable_overrides.push_back(
                    {f[0], std::stod(f[1]), std::stod(f[2]), std::stod(f[3]),
                     parse_bool(f[4], "variable." + f[0])});
            } else if (key == "force_uncertain") {
                cfg.force_uncertain = split_ws(value);
            } else {
                throw std::invalid_argument("unknown config key: " + key);
            }
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception& e) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + " (" + key +
                                        "): " + e.what());
        }
    }
    const auto bad = cfg.validate();
    if (!bad.empty()) {
        std::string msg = "invalid config:";
        for (const auto& s : bad) msg += "\n  " + s;
        throw std::invalid_argument(msg);
    }
    return cfg;
}

PipelineConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string config_to_text(const PipelineConfig& cfg) {
    std::ostringstream out;
    out << "problem = " << cfg.problem << '\n';
    out << "out = " << cfg.out_dir << '\n';
    out << "seed = " << cfg.seed << '\n';
    out << "doe.n = " << cfg.doe_n << '\n';
    out << "doe.train = " << cfg.doe_train << '\n';
    out << "doe.iterations = " << cfg.doe_iterations << '\n';
    out << "doe.jitter = " << (cfg.doe_jitter ? "true" : "false") << '\n';
    for (const auto& [name, kernel] : cfg.kernels) {
        out << "surrogate.kernel." << name << " = " << kernel << '\n';
    }
    out << "sobol.n_base = " << cfg.sobol_n_base << '\n';
    out << "sobol.top_k = " << cfg.sobol_top_k << '\n';
    out << "formulations =";
    for (const auto& f : cfg.formulations) out << ' ' << formulation_name(f);
    out << '\n';
    out << "optimizer.population = " << cfg.optimizer_population << '\n';
    out << "optimizer.generations = " << cfg.optimizer_generations << '\n';
    out << "inner_pso.particles = " << cfg.inner_pso_particles << '\n';
    out << "inner_pso.iterations = " << cfg.inner_pso_iterations << '\n';
    out << "robust.n_expectation = " << cfg.n_expectation << '\n';
    out << "robust.n_posterior = " << cfg.n_posterior << '\n';
    out << "robust.qmc = " << (cfg.qmc_scheme == QmcScheme::lhs ? "lhs" : "sobol") << '\n';
    out << "robust.outer_extended = " << (cfg.outer_extended ? "true" : "false") << '\n';
    out << "zones =";
    for (double z : cfg.zone_targets) out << ' ' << format_double(z);
    out << '\n';
    out << "zones.tol = " << format_double(cfg.zone_tol) << '\n';
    out << "zones.objective = " << cfg.zone_objective << '\n';
    for (const auto& v : cfg.variable_overrides) {
        out << "variable = " << v.name << ' ' << format_double(v.lower) << ' '
            << format_double(v.upper) << ' ' << format_double(v.tolerance) << ' '
            << (v.uncertain ? "true" : "false") << '\n';
    }
    if (!cfg.force_uncertain.empty()) {
        out << "force_uncertain =";
        for (const auto& n : cfg.force_uncertain) out << ' ' << n;
        out << '\n';
    }
    return out.str();
}

} // namespace rsopt
