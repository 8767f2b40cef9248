#ifndef RSOPT_CONFIG_HPP
#define RSOPT_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rsopt/design_space.hpp"
#include "rsopt/robust.hpp"
#include "rsopt/sampling.hpp"

namespace rsopt {

/// Pipeline configuration. Parsed from a flat `key = value` text file
/// (# comments, dotted keys); unknown keys are errors so a typo'd budget
/// cannot silently fall back to a default.
struct PipelineConfig {
    std::string problem = "motor_synthetic";
    std::string out_dir = "out";
    std::uint64_t seed = 1;

    int doe_n = 234;
    int doe_train = 175;
    long doe_iterations = -1; // -1: the 10*n*d default
    bool doe_jitter = false;

    /// objective name -> kernel name; unset objectives use the problem's
    /// preferred kernel.
    std::map<std::string, std::string> kernels;

    int sobol_n_base = 4096;
    int sobol_top_k = 5;

    std::vector<Formulation> formulations = {
        Formulation::deterministic, Formulation::expectation, Formulation::worst_case};

    int optimizer_population = 150;
    int optimizer_generations = 300;
    int inner_pso_particles = 40;
    int inner_pso_iterations = 60;

    int n_expectation = 128;
    int n_posterior = 512;
    QmcScheme qmc_scheme = QmcScheme::lhs;
    bool outer_extended = false; // search X(U) instead of the nominal box

    std::vector<double> zone_targets = {430, 435, 440, 445, 450};
    double zone_tol = 0.1;
    int zone_objective = 0;

    /// Optional design-space override (replaces the problem's space).
    std::vector<Variable> variable_overrides;
    /// Force these variables uncertain regardless of the Sobol screening.
    std::vector<std::string> force_uncertain;

    std::vector<std::string> validate() const; // empty == ok
};

PipelineConfig parse_config_file(const std::string& path);
PipelineConfig parse_config_text(const std::string& text);

/// Round-trip used for the manifest's config echo.
std::string config_to_text(const PipelineConfig& config);

} // namespace rsopt

#endif
