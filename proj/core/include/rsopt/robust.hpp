#ifndef RSOPT_ROBUST_HPP
#define RSOPT_ROBUST_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "rsopt/design_space.hpp"
#include "rsopt/moo.hpp"

namespace rsopt {

enum class Formulation { deterministic, expectation, worst_case };

std::string formulation_name(Formulation f);
Formulation formulation_from_name(const std::string& name);

/// min / quartiles / max / mean / population std of one scalar sample.
/// Quantiles use linear interpolation of order statistics (the (n-1)p rule).
struct SampleStats {
    double min = 0.0, q1 = 0.0, q2 = 0.0, q3 = 0.0, max = 0.0;
    double mean = 0.0, stddev = 0.0;
};

SampleStats boxplot_stats(std::vector<double> sample);

/// Per-design posterior summary: one SampleStats per objective plus the
/// PSO worst case per objective (minimization convention: the inner maximum).
struct RobustStats {
    Eigen::VectorXd x;
    std::vector<SampleStats> per_objective;
    Eigen::VectorXd worst_case;
    int sample_size = 0;
};

struct RobustOptions {
    int n_expectation = 128; // QMC cloud size per expectation evaluation
    int n_posterior = 512;   // posterior cloud size
    PsoOptions inner_pso{/*particles=*/40, /*iterations=*/60};
    std::uint64_t seed = 1;
};

/// Wraps a deterministic multi-objective black box into one of the three
/// formulations. The base function must be defined on the extended space
/// (x + u can leave the nominal box). Expectation mode reuses one shared
/// perturbation sample for every candidate x (common random numbers), so the
/// wrapped objective is a deterministic function of x for a fixed seed.
class UncertainObjective {
public:
    UncertainObjective(VectorFn base, const DesignSpace& space, Formulation mode,
                       const RobustOptions& options = {});

    Eigen::VectorXd operator()(const Eigen::VectorXd& x) const;

    Eigen::VectorXd expectation(const Eigen::VectorXd& x) const;
    /// Independent inner PSO maximization per objective over Omega.
    Eigen::VectorXd worst_case(const Eigen::VectorXd& x) const;

    Formulation mode() const { return mode_; }
    const Eigen::MatrixXd& perturbations() const { return offsets_; }

private:
    VectorFn base_;
    Formulation mode_;
    Box omega_;
    RobustOptions options_;
    Eigen::MatrixXd offsets_; // n_expectation x d, points of Omega
};

/// Deterministic seed for the inner maximization at design x, objective j.
std::uint64_t inner_seed(std::uint64_t run_seed, const Eigen::VectorXd& x, int objective);

/// Re-evaluates already-optimized designs under sampled tolerances: an
/// n-sample cloud f(x + u_k) summarized per objective, plus the PSO worst
/// case. One shared perturbation sample serves all designs.
std::vector<RobustStats> posterior_perturbation(const std::vector<Eigen::VectorXd>& designs,
                                                const VectorFn& f, const DesignSpace& space,
                                                int n, std::uint64_t seed,
                                                const PsoOptions& inner_pso = {40, 60});

/// Member indices whose named objective lies in [target - tol, target + tol].
std::vector<int> zone_select(const ParetoArchive& archive, int objective_index,
                             double target, double tol);

/// Paired zone comparison between two posterior-evaluated fronts. Designs are
/// matched per zone by the mean of `objective_index` (closest to the target).
struct ZonePair {
    double target = 0.0;
    bool matched_a = false, matched_b = false;
    RobustStats a, b;
    // b minus a, per objective, for the headline statistics
    std::vector<double> delta_mean, delta_std, delta_q3, delta_worst_case;
};

/// Which posterior statistic of the matching objective defines a zone:
/// the posterior mean (expectation-style figures) or the worst case.
enum class ZoneStatistic { mean, worst_case };

std::vector<ZonePair> compare_fronts(const std::vector<RobustStats>& front_a,
                                     const std::vector<RobustStats>& front_b,
                                     int objective_index,
                                     const std::vector<double>& zone_targets,
                                     double zone_tol,
                                     ZoneStatistic match_on = ZoneStatistic::mean);

} // namespace rsopt

#endif
