#include "rsopt/robust.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>

#include "rsopt/rng.hpp"
#include "rsopt/sampling.hpp"

namespace rsopt {

std::string formulation_name(Formulation f) {
    switch (f) {
        case Formulation::deterministic: return "deterministic";
        case Formulation::expectation: return "expectation";
        case Formulation::worst_case: return "worst_case";
    }
    return "?";
}

Formulation formulation_from_name(const std::string& name) {
    if (name == "deterministic") return Formulation::deterministic;
    if (name == "expectation") return Formulation::expectation;
    if (name == "worst_case") return Formulation::worst_case;
    throw std::invalid_argument("unknown formulation: " + name);
}

SampleStats boxplot_stats(std::vector<double> sample) {
    if (sample.empty()) throw std::invalid_argument("boxplot_stats: empty sample");
    std::sort(sample.begin(), sample.end());
    const std::size_t n = sample.size();

    auto quantile = [&](double p) {
        const double pos = p * static_cast<double>(n - 1);
        const std::size_t lo = static_cast<std::size_t>(pos);
        const std::size_t hi = std::min(lo + 1, n - 1);
        const double frac = pos - static_cast<double>(lo);
        return sample[lo] + frac * (sample[hi] - sample[lo]);
    };

    SampleStats s;
    s.min = sample.front();
    s.max = sample.back();
    s.q1 = quantile(0.25);
    s.q2 = quantile(0.5);
    s.q3 = quantile(0.75);
    double mean = 0.0;
    for (double v : sample) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : sample) var += (v - mean) * (v - mean);
    s.mean = mean;
    s.stddev = std::sqrt(var / static_cast<double>(n)); // population convention
    return s;
}

std::uint64_t inner_seed(std::uint64_t run_seed, const Eigen::VectorXd& x, int objective) {
    // FNV-1a over the design's byte representation.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        std::uint64_t bits;
        std::memcpy(&bits, &x[j], sizeof(bits));
        for (int b = 0; b < 8; ++b) {
            h ^= (bits >> (8 * b)) & 0xffULL;
            h *= 0x100000001b3ULL;
        }
    }
    return derive_seed(run_seed, h ^ static_cast<std::uint64_t>(objective));
}

UncertainObjective::UncertainObjective(VectorFn base, const DesignSpace& space,
                                       Formulation mode, const RobustOptions& options)
    : base_(std::move(base)), mode_(mode), omega_(space.perturbation_box()),
      options_(options) {
    if (mode_ == Formulation::expectation) {
        offsets_ = qmc_box(options_.n_expectation, omega_, derive_seed(options_.seed, 0xE)).points;
    }
}

Eigen::VectorXd UncertainObjective::operator()(const Eigen::VectorXd& x) const {
    switch (mode_) {
        case Formulation::deterministic: return base_(x);
        case Formulation::expectation: return expectation(x);
        case Formulation::worst_case: return worst_case(x);
    }
    throw std::logic_error("unreachable");
}

Eigen::VectorXd UncertainObjective::expectation(const Eigen::VectorXd& x) const {
    // Degenerate Omega: every cloud point equals x, so skip the averaging
    // (summing identical values and dividing is not exact in floating point).
    if (offsets_.size() == 0 || offsets_.cwiseAbs().maxCoeff() == 0.0) return base_(x);
    Eigen::VectorXd acc;
    for (Eigen::Index k = 0; k < offsets_.rows(); ++k) {
        const Eigen::VectorXd v = base_(x + offsets_.row(k).transpose());
        if (acc.size() == 0) {
            acc = v;
        } else {
            acc += v;
        }
    }
    return acc / static_cast<double>(offsets_.rows());
}

Eigen::VectorXd UncertainObjective::worst_case(const Eigen::VectorXd& x) const {
    const Eigen::VectorXd at_center = base_(x);
    const Eigen::Index m = at_center.size();
    Eigen::VectorXd out(m);
    bool omega_degenerate = true;
    for (Eigen::Index j = 0; j < omega_.size(); ++j) {
        if (omega_.width(j) > 0.0) omega_degenerate = false;
    }
    if (omega_degenerate) return at_center;

    for (Eigen::Index j = 0; j < m; ++j) {
        PsoOptions opts = options_.inner_pso;
        opts.seed = inner_seed(options_.seed, x, static_cast<int>(j));
        const auto res = pso(
            [&](const Eigen::VectorXd& u) { return -base_(x + u)[j]; }, omega_, opts);
        out[j] = -res.f_best;
    }
    return out;
}

std::vector<RobustStats> posterior_perturbation(const std::vector<Eigen::VectorXd>& designs,
                                                const VectorFn& f, const DesignSpace& space,
                                                int n, std::uint64_t seed,
                                                const PsoOptions& inner_pso) {
    if (n < 1) throw std::invalid_argument("posterior_perturbation: n must be >= 1");
    const Box omega = space.perturbation_box();
    const Eigen::MatrixXd offsets = qmc_box(n, omega, derive_seed(seed, 0xF0)).points;
    bool omega_degenerate = true;
    for (Eigen::Index j = 0; j < omega.size(); ++j) {
        if (omega.width(j) > 0.0) omega_degenerate = false;
    }

    std::vector<RobustStats> out(designs.size());
    std::exception_ptr failure;
    // Designs are independent (each inner maximization derives its own seed
    // from the design), so the batch parallelizes without changing results.
#pragma omp parallel for schedule(dynamic)
    for (std::size_t di = 0; di < designs.size(); ++di) {
      try {
        const Eigen::VectorXd& x = designs[di];
        RobustStats rs;
        rs.x = x;
        rs.sample_size = n;

        std::vector<std::vector<double>> clouds;
        for (int k = 0; k < n; ++k) {
            const Eigen::VectorXd v = f(x + offsets.row(k).transpose());
            if (clouds.empty()) clouds.resize(static_cast<std::size_t>(v.size()));
            for (Eigen::Index j = 0; j < v.size(); ++j) {
                clouds[static_cast<std::size_t>(j)].push_back(v[j]);
            }
        }
        const Eigen::Index m = static_cast<Eigen::Index>(clouds.size());
        rs.worst_case.resize(m);
        for (Eigen::Index j = 0; j < m; ++j) {
            rs.per_objective.push_back(boxplot_stats(clouds[static_cast<std::size_t>(j)]));
            if (omega_degenerate) {
                rs.worst_case[j] = rs.per_objective.back().max;
            } else {
                PsoOptions opts = inner_pso;
                opts.seed = inner_seed(seed, x, static_cast<int>(j));
                const auto res =
                    pso([&](const Eigen::VectorXd& u) { return -f(x + u)[j]; }, omega, opts);
                rs.worst_case[j] = -res.f_best;
            }
        }
        out[di] = std::move(rs);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<int> zone_select(const ParetoArchive& archive, int objective_index,
                             double target, double tol) {
    std::vector<int> out;
    for (std::size_t i = 0; i < archive.members.size(); ++i) {
        const double v = archive.members[i].objectives[objective_index];
        if (v >= target - tol && v <= target + tol) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<ZonePair> compare_fronts(const std::vector<RobustStats>& front_a,
                                     const std::vector<RobustStats>& front_b,
                                     int objective_index,
                                     const std::vector<double>& zone_targets,
                                     double zone_tol, ZoneStatistic match_on) {
    auto statistic = [&](const RobustStats& rs) {
        return match_on == ZoneStatistic::mean
                   ? rs.per_objective[static_cast<std::size_t>(objective_index)].mean
                   : rs.worst_case[objective_index];
    };
    auto closest = [&](const std::vector<RobustStats>& front, double target,
                       bool& matched) -> RobustStats {
        matched = false;
        double best = std::numeric_limits<double>::infinity();
        RobustStats pick;
        for (const auto& rs : front) {
            const double dist = std::abs(statistic(rs) - target);
            if (dist <= zone_tol && dist < best) {
                best = dist;
                pick = rs;
                matched = true;
            }
        }
        return pick;
    };

    std::vector<ZonePair> out;
    for (double target : zone_targets) {
        ZonePair zp;
        zp.target = target;
        zp.a = closest(front_a, target, zp.matched_a);
        zp.b = closest(front_b, target, zp.matched_b);
        if (zp.matched_a && zp.matched_b) {
            const std::size_t m = zp.a.per_objective.size();
            for (std::size_t j = 0; j < m; ++j) {
                zp.delta_mean.push_back(zp.b.per_objective[j].mean - zp.a.per_objective[j].mean);
                zp.delta_std.push_back(zp.b.per_objective[j].stddev - zp.a.per_objective[j].stddev);
                zp.delta_q3.push_back(zp.b.per_objective[j].q3 - zp.a.per_objective[j].q3);
                zp.delta_worst_case.push_back(zp.b.worst_case[static_cast<Eigen::Index>(j)] -
                                              zp.a.worst_case[static_cast<Eigen::Index>(j)]);
            }
        }
        out.push_back(std::move(zp));
    }
    return out;
}

} // namespace rsopt
