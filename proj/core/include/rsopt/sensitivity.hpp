#ifndef RSOPT_SENSITIVITY_HPP
#define RSOPT_SENSITIVITY_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "rsopt/design_space.hpp"

namespace rsopt {

using ScalarFn = std::function<double(const Eigen::VectorXd&)>;

/// First-order and total Sobol indices per input dimension. `first_order` /
/// `total` are clamped to [0,1] for reporting and ranking; the raw estimates
/// (which may dip slightly negative) are kept alongside.
struct SobolResult {
    Eigen::VectorXd first_order;
    Eigen::VectorXd total;
    Eigen::VectorXd raw_first_order;
    Eigen::VectorXd raw_total;
    int n_base = 0;
    std::uint64_t seed = 0;

    Eigen::Index dim() const { return total.size(); }
};

/// Saltelli pick-freeze estimator with the Jansen formulas; inputs are
/// independent uniform on `box`. Base samples A and B are two independently
/// seeded LHS designs; total evaluation count is n_base * (d + 2).
/// Throws if the function is (numerically) constant on the box.
SobolResult sobol_indices(const ScalarFn& f, const Box& box, int n_base,
                          std::uint64_t seed);

/// Marks uncertain the variables whose max-over-objectives total index ranks
/// in the top k; ties broken by variable order. Variables with zero declared
/// tolerance are never marked.
DesignSpace select_uncertain(const std::vector<SobolResult>& results,
                             const DesignSpace& space, int k);

/// Threshold variant: marks every tolerance-positive variable whose
/// max-over-objectives total index exceeds `threshold`.
DesignSpace select_uncertain_threshold(const std::vector<SobolResult>& results,
                                       const DesignSpace& space, double threshold);

} // namespace rsopt

#endif
