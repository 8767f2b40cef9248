#include "rsopt/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rsopt/csv.hpp"
#include "rsopt/rng.hpp"

namespace rsopt {

namespace {

// Exchange bookkeeping is O(n^2) in memory and time; past this size the
// improvement phase is skipped (space filling matters for DOEs of a few
// hundred points, not for QMC bases of many thousands).
constexpr int kExchangeCutoff = 1024;

Eigen::MatrixXd lhs_points(int n, int d, Rng& rng, bool jitter) {
    Eigen::MatrixXd pts(n, d);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int k = 0; k < d; ++k) {
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        for (int i = 0; i < n; ++i) {
            double offset = jitter ? rng.uniform() : 0.5;
            pts(i, k) = (perm[static_cast<std::size_t>(i)] + offset) / n;
        }
    }
    return pts;
}

} // namespace

double min_pairwise_distance(const Eigen::MatrixXd& points) {
    const Eigen::Index n = points.rows();
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            best = std::min(best, (points.row(i) - points.row(j)).squaredNorm());
        }
    }
    return std::sqrt(best);
}

SampleMatrix plain_lhs(int n, int d, std::uint64_t seed, bool jitter) {
    if (n < 2) throw std::invalid_argument("plain_lhs: n must be >= 2");
    if (d < 1) throw std::invalid_argument("plain_lhs: d must be >= 1");
    Rng rng(derive_seed(seed, 0x1a5));
    SampleMatrix out;
    out.points = lhs_points(n, d, rng, jitter);
    out.seed = seed;
    out.kind = SampleKind::plain_lhs;
    return out;
}

SampleMatrix maximin_lhs(int n, int d, std::uint64_t seed, long iterations, bool jitter) {
    if (n < 2) throw std::invalid_argument("maximin_lhs: n must be >= 2");
    if (d < 1) throw std::invalid_argument("maximin_lhs: d must be >= 1");
    Rng rng(derive_seed(seed, 0x1a5));
    Eigen::MatrixXd pts = lhs_points(n, d, rng, jitter);
    if (iterations < 0) iterations = 10L * n * d;

    if (n <= kExchangeCutoff && iterations > 0) {
        // Squared-distance matrix plus per-row minima; a coordinate exchange
        // between two rows only touches two rows of the matrix.
        Eigen::MatrixXd dist2(n, n);
        for (int i = 0; i < n; ++i) {
            dist2(i, i) = std::numeric_limits<double>::infinity();
            for (int j = i + 1; j < n; ++j) {
                double v = (pts.row(i) - pts.row(j)).squaredNorm();
                dist2(i, j) = dist2(j, i) = v;
            }
        }
        Eigen::VectorXd rowmin(n);
        for (int i = 0; i < n; ++i) rowmin[i] = dist2.row(i).minCoeff();
        double global_min = rowmin.minCoeff();

        Eigen::VectorXd old_i(n), old_j(n);
        for (long it = 0; it < iterations; ++it) {
            const int k = static_cast<int>(rng.index(static_cast<std::size_t>(d)));
            const int i = static_cast<int>(rng.index(static_cast<std::size_t>(n)));
            int j = static_cast<int>(rng.index(static_cast<std::size_t>(n - 1)));
            if (j >= i) ++j;
            const double a = pts(i, k), b = pts(j, k);
            if (a == b) continue;

            old_i = dist2.row(i).transpose();
            old_j = dist2.row(j).transpose();
            for (int t = 0; t < n; ++t) {
                if (t == i || t == j) continue;
                const double c = pts(t, k);
                dist2(i, t) = dist2(t, i) = dist2(i, t) - (a - c) * (a - c) + (b - c) * (b - c);
                dist2(j, t) = dist2(t, j) = dist2(j, t) - (b - c) * (b - c) + (a - c) * (a - c);
            }
            double candidate = std::numeric_limits<double>::infinity();
            for (int t = 0; t < n; ++t) {
                double rm;
                if (t == i || t == j) {
                    rm = dist2.row(t).minCoeff();
                } else {
                    rm = std::min(rowmin[t], std::min(dist2(t, i), dist2(t, j)));
                    if (old_i[t] <= rowmin[t] || old_j[t] <= rowmin[t]) {
                        rm = dist2.row(t).minCoeff(); // old minimum may have involved i or j
                    }
                }
                candidate = std::min(candidate, rm);
            }
            if (candidate >= global_min) {
                pts(i, k) = b;
                pts(j, k) = a;
                for (int t = 0; t < n; ++t) {
                    if (t == i || t == j) {
                        rowmin[t] = dist2.row(t).minCoeff();
                    } else if (old_i[t] <= rowmin[t] || old_j[t] <= rowmin[t]) {
                        rowmin[t] = dist2.row(t).minCoeff();
                    } else {
                        rowmin[t] = std::min(rowmin[t], std::min(dist2(t, i), dist2(t, j)));
                    }
                }
                global_min = candidate;
            } else {
                dist2.row(i) = old_i.transpose();
                dist2.col(i) = old_i;
                dist2.row(j) = old_j.transpose();
                dist2.col(j) = old_j;
            }
        }
    }

    SampleMatrix out;
    out.points = std::move(pts);
    out.seed = seed;
    out.kind = SampleKind::maximin_lhs;
    return out;
}

std::pair<SampleMatrix, SampleMatrix> train_test_split(const SampleMatrix& doe,
                                                       int n_train, std::uint64_t seed) {
    const int n = static_cast<int>(doe.rows());
    if (n_train <= 0 || n_train >= n) {
        throw std::invalid_argument("train_test_split: n_train must be in (0, n)");
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    Rng rng(derive_seed(seed, 0x5b1));
    rng.shuffle(order);

    auto take = [&](int from, int count) {
        SampleMatrix part;
        part.points.resize(count, doe.dim());
        if (doe.has_values()) part.values.resize(count, doe.values.cols());
        for (int r = 0; r < count; ++r) {
            int src = order[static_cast<std::size_t>(from + r)];
            part.points.row(r) = doe.points.row(src);
            if (doe.has_values()) part.values.row(r) = doe.values.row(src);
        }
        part.seed = seed;
        part.kind = SampleKind::explicit_points;
        return part;
    };
    return {take(0, n_train), take(n_train, n - n_train)};
}

Eigen::MatrixXd sobol_sequence(int n, int d) {
    if (d < 1 || d > 16) throw std::invalid_argument("sobol_sequence: d must be in [1,16]");
    if (n < 1) throw std::invalid_argument("sobol_sequence: n must be >= 1");
    // Primitive polynomial degrees, coefficients and initial direction
    // numbers for dimensions 2..16 (Joe & Kuo table, first entries).
    static const int deg[15] = {1, 2, 3, 3, 4, 4, 5, 5, 5, 5, 5, 5, 6, 6, 6};
    static const int pol[15] = {0, 1, 1, 2, 1, 4, 2, 4, 7, 11, 13, 14, 1, 13, 16};
    static const int ini[15][6] = {
        {1, 0, 0, 0, 0, 0},   {1, 3, 0, 0, 0, 0},   {1, 3, 1, 0, 0, 0},
        {1, 1, 1, 0, 0, 0},   {1, 1, 3, 3, 0, 0},   {1, 3, 5, 13, 0, 0},
        {1, 1, 5, 5, 17, 0},  {1, 1, 5, 5, 5, 0},   {1, 1, 7, 11, 19, 0},
        {1, 1, 5, 1, 1, 0},   {1, 1, 1, 3, 11, 0},  {1, 3, 5, 5, 31, 0},
        {1, 3, 3, 9, 7, 49},  {1, 1, 1, 15, 21, 21}, {1, 3, 1, 13, 27, 49}};

    const int bits = 32;
    Eigen::MatrixXd out(n, d);
    std::vector<std::uint32_t> v(static_cast<std::size_t>(bits));
    for (int k = 0; k < d; ++k) {
        if (k == 0) {
            for (int b = 0; b < bits; ++b) v[b] = 1u << (31 - b);
        } else {
            const int s = deg[k - 1];
            const int a = pol[k - 1];
            for (int b = 0; b < s && b < bits; ++b) {
                v[b] = static_cast<std::uint32_t>(ini[k - 1][b]) << (31 - b);
            }
            for (int b = s; b < bits; ++b) {
                v[b] = v[b - s] ^ (v[b - s] >> s);
                for (int t = 1; t < s; ++t) {
                    if ((a >> (s - 1 - t)) & 1) v[b] ^= v[b - t];
                }
            }
        }
        // Gray-code walk; index starts at 1 so the all-zeros point is skipped.
        std::uint32_t x = 0;
        for (int i = 0; i < n; ++i) {
            std::uint32_t idx = static_cast<std::uint32_t>(i) + 1;
            int c = 0;
            while (!(idx & 1)) {
                idx >>= 1;
                ++c;
            }
            x ^= v[c];
            out(i, k) = static_cast<double>(x) * 0x1.0p-32;
        }
    }
    return out;
}

SampleMatrix qmc_box(int n, const Box& box, std::uint64_t seed, QmcScheme scheme) {
    if (n < 1) throw std::invalid_argument("qmc_box: n must be >= 1");
    const int d = static_cast<int>(box.size());
    if (d < 1) throw std::invalid_argument("qmc_box: empty box");

    Eigen::MatrixXd unit;
    if (scheme == QmcScheme::sobol) {
        unit = sobol_sequence(n, d);
    } else if (n == 1) {
        unit = Eigen::MatrixXd::Constant(1, d, 0.5);
    } else {
        unit = maximin_lhs(n, d, seed).points;
    }

    SampleMatrix out;
    out.points.resize(n, d);
    for (int j = 0; j < d; ++j) {
        const double w = box.width(j);
        for (int i = 0; i < n; ++i) {
            out.points(i, j) = w == 0.0 ? box.low[j] : box.low[j] + w * unit(i, j);
        }
    }
    out.seed = seed;
    out.kind = SampleKind::qmc;
    return out;
}

void write_sample_csv(const std::string& path, const SampleMatrix& sample,
                      const std::vector<std::string>& point_names,
                      const std::vector<std::string>& value_names) {
    if (static_cast<Eigen::Index>(point_names.size()) != sample.dim()) {
        throw std::invalid_argument("write_sample_csv: point name count mismatch");
    }
    if (sample.has_values() &&
        static_cast<Eigen::Index>(value_names.size()) != sample.values.cols()) {
        throw std::invalid_argument("write_sample_csv: value name count mismatch");
    }
    CsvWriter csv(path);
    std::vector<std::string> header = point_names;
    header.insert(header.end(), value_names.begin(), value_names.end());
    csv.row(header);
    for (Eigen::Index i = 0; i < sample.rows(); ++i) {
        std::vector<double> row;
        for (Eigen::Index j = 0; j < sample.dim(); ++j) row.push_back(sample.points(i, j));
        if (sample.has_values()) {
            for (Eigen::Index j = 0; j < sample.values.cols(); ++j) {
                row.push_back(sample.values(i, j));
            }
        }
        csv.row(row);
    }
}

SampleMatrix read_sample_csv(const std::string& path, int n_point_columns) {
    CsvTable table = read_csv(path);
    const int total = static_cast<int>(table.header.size());
    if (n_point_columns < 1 || n_point_columns > total) {
        throw std::invalid_argument("read_sample_csv: bad point column count");
    }
    const int n = static_cast<int>(table.rows.size());
    SampleMatrix out;
    out.points.resize(n, n_point_columns);
    if (total > n_point_columns) out.values.resize(n, total - n_point_columns);
    for (int i = 0; i < n; ++i) {
        const auto& r = table.rows[static_cast<std::size_t>(i)];
        for (int j = 0; j < total; ++j) {
            double v = std::stod(r[static_cast<std::size_t>(j)]);
            if (j < n_point_columns) {
                out.points(i, j) = v;
            } else {
                out.values(i, j - n_point_columns) = v;
            }
        }
    }
    out.kind = SampleKind::explicit_points;
    return out;
}

} // namespace rsopt
