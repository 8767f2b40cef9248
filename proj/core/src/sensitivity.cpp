#include "rsopt/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rsopt/rng.hpp"
#include "rsopt/sampling.hpp"

namespace rsopt {

SobolResult sobol_indices(const ScalarFn& f, const Box& box, int n_base,
                          std::uint64_t seed) {
    if (n_base < 64) throw std::invalid_argument("sobol_indices: n_base must be >= 64");
    const int d = static_cast<int>(box.size());
    const int n = n_base;

    const Eigen::MatrixXd A = qmc_box(n, box, derive_seed(seed, 0xA)).points;
    const Eigen::MatrixXd B = qmc_box(n, box, derive_seed(seed, 0xB)).points;

    Eigen::VectorXd fA(n), fB(n);
    for (int i = 0; i < n; ++i) {
        fA[i] = f(A.row(i).transpose());
        fB[i] = f(B.row(i).transpose());
    }

    // Variance over the pooled A and B evaluations.
    const double mean = (fA.sum() + fB.sum()) / (2.0 * n);
    const double variance =
        ((fA.array() - mean).square().sum() + (fB.array() - mean).square().sum()) /
        (2.0 * n);
    if (variance <= 1e-300 * std::max(1.0, mean * mean)) {
        throw std::invalid_argument("sobol_indices: function is constant on the box");
    }

    SobolResult res;
    res.raw_first_order.resize(d);
    res.raw_total.resize(d);
    res.n_base = n_base;
    res.seed = seed;

    Eigen::VectorXd x(d);
    for (int k = 0; k < d; ++k) {
        double acc_first = 0.0, acc_total = 0.0;
        for (int i = 0; i < n; ++i) {
            x = A.row(i).transpose();
            x[k] = B(i, k);
            const double fab = f(x);
            acc_first += (fB[i] - fab) * (fB[i] - fab); // Jansen first order
            acc_total += (fA[i] - fab) * (fA[i] - fab); // Jansen total
        }
        res.raw_first_order[k] = (variance - acc_first / (2.0 * n)) / variance;
        res.raw_total[k] = (acc_total / (2.0 * n)) / variance;
    }
    res.first_order = res.raw_first_order.cwiseMax(0.0).cwiseMin(1.0);
    res.total = res.raw_total.cwiseMax(0.0).cwiseMin(1.0);
    return res;
}

namespace {

Eigen::VectorXd max_total_over_objectives(const std::vector<SobolResult>& results,
                                          Eigen::Index d) {
    if (results.empty()) throw std::invalid_argument("select_uncertain: no results");
    Eigen::VectorXd score = Eigen::VectorXd::Constant(d, -1.0);
    for (const auto& r : results) {
        if (r.dim() != d) {
            throw std::invalid_argument("select_uncertain: result dimension mismatch");
        }
        score = score.cwiseMax(r.total);
    }
    return score;
}

} // namespace

DesignSpace select_uncertain(const std::vector<SobolResult>& results,
                             const DesignSpace& space, int k) {
    if (k < 0 || k > space.size()) {
        throw std::invalid_argument("select_uncertain: k out of range");
    }
    const Eigen::VectorXd score = max_total_over_objectives(results, space.size());
    std::vector<Eigen::Index> order(static_cast<std::size_t>(space.size()));
    std::iota(order.begin(), order.end(), 0);
    // Stable by variable order on ties.
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return score[a] > score[b]; });

    std::vector<bool> flags(static_cast<std::size_t>(space.size()), false);
    int marked = 0;
    for (Eigen::Index idx : order) {
        if (marked >= k) break;
        if (space[idx].tolerance == 0.0) continue;
        flags[static_cast<std::size_t>(idx)] = true;
        ++marked;
    }
    return space.with_uncertain(flags);
}

DesignSpace select_uncertain_threshold(const std::vector<SobolResult>& results,
                                       const DesignSpace& space, double threshold) {
    const Eigen::VectorXd score = max_total_over_objectives(results, space.size());
    std::vector<bool> flags(static_cast<std::size_t>(space.size()), false);
    for (Eigen::Index j = 0; j < space.size(); ++j) {
        flags[static_cast<std::size_t>(j)] =
            score[j] > threshold && space[j].tolerance > 0.0;
    }
    return space.with_uncertain(flags);
}

} // namespace rsopt
