#ifndef RSOPT_MOO_HPP
#define RSOPT_MOO_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rsopt/design_space.hpp"
#include "rsopt/sensitivity.hpp" // ScalarFn

namespace rsopt {

using VectorFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Minimization convention throughout: a dominates b iff a <= b componentwise
/// and a < b somewhere.
bool dominates(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

struct Individual {
    Eigen::VectorXd x;
    Eigen::VectorXd objectives;
    int rank = 0;
    double crowding = 0.0;
};

/// Non-dominated set with provenance.
struct ParetoArchive {
    std::vector<Individual> members;
    std::string formulation; // deterministic | expectation | worst_case
    std::vector<std::string> objective_names;

    /// Inserts if non-dominated; evicts members the new point dominates.
    /// Exact duplicates (same objectives and design) are dropped.
    void insert(const Eigen::VectorXd& x, const Eigen::VectorXd& objectives);
};

/// Fronts of indices: front 0 is the non-dominated set, front k the
/// non-dominated set after removing fronts < k.
std::vector<std::vector<int>> non_dominated_sort(const std::vector<Eigen::VectorXd>& objectives);

/// NSGA-II crowding distance of one front; boundary points get +infinity,
/// zero-range objectives contribute nothing.
std::vector<double> crowding_distance(const std::vector<Eigen::VectorXd>& front);

/// Indices of front 0 (brute-force independent of non_dominated_sort's
/// bookkeeping); idempotent.
std::vector<int> pareto_filter(const std::vector<Eigen::VectorXd>& objectives);

struct Nsga2Options {
    int population = 150; // even, >= 4
    int generations = 300;
    double crossover_probability = 0.9;
    double eta_crossover = 15.0;
    double eta_mutation = 20.0;
    double mutation_probability = -1.0; // < 0 selects 1/d
    std::uint64_t seed = 1;
    /// Called after every generation with the running archive.
    std::function<void(int generation, const ParetoArchive&)> observer;
};

/// NSGA-II with simulated binary crossover and polynomial mutation. Returns
/// the archive of all evaluated non-dominated points (not just the final
/// population). Total evaluations: population * (generations + 1).
ParetoArchive nsga2(const VectorFn& problem, const Box& box, const Nsga2Options& options);

struct PsoOptions {
    int particles = 150;
    int iterations = 300;
    double inertia = 0.729; // constriction coefficients
    double cognitive = 1.494;
    double social = 1.494;
    std::uint64_t seed = 1;
};

struct PsoResult {
    Eigen::VectorXd x_best;
    double f_best = 0.0;
    std::vector<double> trace; // best-so-far after init and each iteration
};

/// Global-best PSO, minimization, positions clamped to the box with velocity
/// zeroed on the clamped dimension.
PsoResult pso(const ScalarFn& objective, const Box& box, const PsoOptions& options);

/// 2-D hypervolume of the non-dominated subset w.r.t. reference point
/// (minimization; points not dominating the reference are ignored).
double hypervolume_2d(const std::vector<Eigen::VectorXd>& objectives,
                      const Eigen::Vector2d& reference);

} // namespace rsopt

#endif
