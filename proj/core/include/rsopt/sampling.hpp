#ifndef RSOPT_SAMPLING_HPP
#define RSOPT_SAMPLING_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rsopt/design_space.hpp"

namespace rsopt {

enum class SampleKind { maximin_lhs, plain_lhs, qmc, grid, explicit_points };

/// A set of design points with optional attached objective values.
struct SampleMatrix {
    Eigen::MatrixXd points;           // n x d
    Eigen::MatrixXd values;           // n x m, or 0x0 when unevaluated
    std::uint64_t seed = 0;
    SampleKind kind = SampleKind::explicit_points;

    Eigen::Index rows() const { return points.rows(); }
    Eigen::Index dim() const { return points.cols(); }
    bool has_values() const { return values.size() > 0; }
};

/// Maximin Latin hypercube in [0,1]^d: random LHS followed by coordinate
/// exchange hill climbing on the minimum pairwise distance. Points sit at
/// stratum centers (k+0.5)/n unless `jitter` is set. `iterations < 0` selects
/// the default budget of 10*n*d exchanges; for n above the exchange cutoff
/// (distance bookkeeping is O(n^2)) the exchange phase is skipped and a plain
/// seeded LHS is returned.
SampleMatrix maximin_lhs(int n, int d, std::uint64_t seed, long iterations = -1,
                         bool jitter = false);

SampleMatrix plain_lhs(int n, int d, std::uint64_t seed, bool jitter = false);

/// Disjoint deterministic row partition into (train, test).
std::pair<SampleMatrix, SampleMatrix> train_test_split(const SampleMatrix& doe,
                                                       int n_train, std::uint64_t seed);

enum class QmcScheme { lhs, sobol };

/// Quasi-Monte Carlo sample of `box`: a maximin LHS (or Sobol sequence)
/// rescaled into the box. Zero-width dimensions receive the constant value.
SampleMatrix qmc_box(int n, const Box& box, std::uint64_t seed,
                     QmcScheme scheme = QmcScheme::lhs);

/// First n points of a Sobol low-discrepancy sequence in [0,1]^d (d <= 16).
Eigen::MatrixXd sobol_sequence(int n, int d);

double min_pairwise_distance(const Eigen::MatrixXd& points);

/// CSV round-trip: header of column names, one row per point, %.17g values.
void write_sample_csv(const std::string& path, const SampleMatrix& sample,
                      const std::vector<std::string>& point_names,
                      const std::vector<std::string>& value_names = {});
SampleMatrix read_sample_csv(const std::string& path, int n_point_columns);

} // namespace rsopt

#endif
