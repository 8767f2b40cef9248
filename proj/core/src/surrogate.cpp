#include "rsopt/surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "rsopt/rng.hpp"
#include "rsopt/sampling.hpp"

namespace rsopt {

namespace {

constexpr double kSqrt5 = 2.2360679774997896;

double correlation(KernelKind kind, const Eigen::VectorXd& inv_theta,
                   const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    const Eigen::Index d = a.size();
    if (kind == KernelKind::abs_exponential) {
        double s = 0.0;
        for (Eigen::Index j = 0; j < d; ++j) s += std::abs(a[j] - b[j]) * inv_theta[j];
        return std::exp(-s);
    }
    double s = 0.0, poly = 1.0;
    for (Eigen::Index j = 0; j < d; ++j) {
        const double r = std::abs(a[j] - b[j]) * inv_theta[j];
        const double t = kSqrt5 * r;
        poly *= 1.0 + t + (5.0 / 3.0) * r * r;
        s += t;
    }
    return poly * std::exp(-s);
}

/// Correlations of one point against every training row at once (vectorized;
/// this is the optimizer-facing hot path).
Eigen::VectorXd correlation_vector(KernelKind kind, const Eigen::VectorXd& inv_theta,
                                   const Eigen::MatrixXd& X, const Eigen::VectorXd& x) {
    const Eigen::ArrayXXd scaled =
        (X.rowwise() - x.transpose()).array().abs().rowwise() *
        inv_theta.transpose().array();
    if (kind == KernelKind::abs_exponential) {
        return (-scaled.rowwise().sum()).exp().matrix();
    }
    const Eigen::ArrayXXd t = kSqrt5 * scaled;
    const Eigen::ArrayXd poly = (1.0 + t + (5.0 / 3.0) * scaled.square()).rowwise().prod();
    return (poly * (-t.rowwise().sum()).exp()).matrix();
}

Eigen::MatrixXd correlation_matrix(KernelKind kind, const Eigen::VectorXd& inv_theta,
                                   const Eigen::MatrixXd& X) {
    const Eigen::Index n = X.rows();
    Eigen::MatrixXd R(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        R.col(i) = correlation_vector(kind, inv_theta, X, X.row(i).transpose());
        R(i, i) = 1.0;
    }
    return R;
}

Eigen::MatrixXd trend_basis(const Eigen::MatrixXd& X) {
    Eigen::MatrixXd F(X.rows(), X.cols() + 1);
    F.col(0).setOnes();
    F.rightCols(X.cols()) = X;
    return F;
}

struct ProfileFit {
    bool ok = false;
    double neg_log_likelihood = std::numeric_limits<double>::infinity();
    Eigen::VectorXd beta;
    double sigma2 = 0.0;
};

/// Concentrated likelihood: beta by GLS, sigma^2 analytically; returns
/// n*log(sigma^2) + log|R + nugget I| (to be minimized).
ProfileFit profile_likelihood(KernelKind kind, const Eigen::VectorXd& log_theta,
                              const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                              const Eigen::MatrixXd& F, double nugget) {
    ProfileFit out;
    const Eigen::Index n = X.rows();
    const Eigen::VectorXd inv_theta = (-log_theta).array().exp();
    Eigen::MatrixXd K = correlation_matrix(kind, inv_theta, X);
    K.diagonal().array() += nugget;
    Eigen::LLT<Eigen::MatrixXd> chol(K);
    if (chol.info() != Eigen::Success) return out;

    const Eigen::MatrixXd kinv_f = chol.solve(F);
    const Eigen::VectorXd kinv_y = chol.solve(y);
    Eigen::LDLT<Eigen::MatrixXd> ftkf((F.transpose() * kinv_f).eval());
    out.beta = ftkf.solve(F.transpose() * kinv_y);
    const Eigen::VectorXd resid = y - F * out.beta;
    const double quad = resid.dot(chol.solve(resid));
    out.sigma2 = std::max(quad / static_cast<double>(n), 1e-300);

    double log_det = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        log_det += 2.0 * std::log(chol.matrixL()(i, i));
    }
    out.neg_log_likelihood = static_cast<double>(n) * std::log(out.sigma2) + log_det;
    out.ok = std::isfinite(out.neg_log_likelihood);
    return out;
}

/// Bound-clamped Nelder-Mead minimization.
Eigen::VectorXd nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                            const Eigen::VectorXd& start, double lo, double hi,
                            int max_iterations) {
    const Eigen::Index d = start.size();
    auto clamp = [&](Eigen::VectorXd v) {
        return v.cwiseMax(lo).cwiseMin(hi).eval();
    };
    std::vector<Eigen::VectorXd> simplex;
    std::vector<double> fx;
    simplex.push_back(clamp(start));
    for (Eigen::Index j = 0; j < d; ++j) {
        Eigen::VectorXd v = start;
        v[j] += 0.5;
        simplex.push_back(clamp(v));
    }
    for (auto& v : simplex) fx.push_back(f(v));

    for (int it = 0; it < max_iterations; ++it) {
        std::vector<std::size_t> order(simplex.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
        std::vector<Eigen::VectorXd> s2;
        std::vector<double> f2;
        for (auto i : order) {
            s2.push_back(simplex[i]);
            f2.push_back(fx[i]);
        }
        simplex = std::move(s2);
        fx = std::move(f2);
        if (fx.back() - fx.front() < 1e-10) break;

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
        for (std::size_t i = 0; i + 1 < simplex.size(); ++i) centroid += simplex[i];
        centroid /= static_cast<double>(d);

        const Eigen::VectorXd worst = simplex.back();
        Eigen::VectorXd xr = clamp(centroid + (centroid - worst));
        double fr = f(xr);
        if (fr < fx.front()) {
            Eigen::VectorXd xe = clamp(centroid + 2.0 * (centroid - worst));
            double fe = f(xe);
            if (fe < fr) {
                simplex.back() = xe;
                fx.back() = fe;
            } else {
                simplex.back() = xr;
                fx.back() = fr;
            }
        } else if (fr < fx[fx.size() - 2]) {
            simplex.back() = xr;
            fx.back() = fr;
        } else {
            Eigen::VectorXd xc = clamp(centroid + 0.5 * (worst - centroid));
            double fc = f(xc);
            if (fc < fx.back()) {
                simplex.back() = xc;
                fx.back() = fc;
            } else {
                for (std::size_t i = 1; i < simplex.size(); ++i) {
                    simplex[i] = clamp(simplex.front() + 0.5 * (simplex[i] - simplex.front()));
                    fx[i] = f(simplex[i]);
                }
            }
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < fx.size(); ++i) {
        if (fx[i] < fx[best]) best = i;
    }
    return simplex[best];
}

} // namespace

std::string kernel_name(KernelKind kind) {
    return kind == KernelKind::matern52 ? "matern52" : "abs_exponential";
}

KernelKind kernel_from_name(const std::string& name) {
    if (name == "matern52") return KernelKind::matern52;
    if (name == "abs_exponential") return KernelKind::abs_exponential;
    throw std::invalid_argument("unknown kernel: " + name);
}

double kernel_value(const KernelSpec& spec, const Eigen::VectorXd& a,
                    const Eigen::VectorXd& b) {
    if (a.size() != b.size() || a.size() != spec.length_scales.size()) {
        throw std::invalid_argument("kernel_value: dimension mismatch");
    }
    const Eigen::VectorXd inv_theta = spec.length_scales.cwiseInverse();
    return spec.variance * correlation(spec.kind, inv_theta, a, b);
}

KrigingModel KrigingModel::fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                               KernelKind kind, const FitOptions& options) {
    const Eigen::Index n = X.rows(), d = X.cols();
    if (y.size() != n) throw std::invalid_argument("fit: X/y row mismatch");
    if (n < d + 2) throw std::invalid_argument("fit: need n >= d + 2 for a linear trend");
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if ((X.row(i) - X.row(j)).cwiseAbs().maxCoeff() == 0.0) {
                throw std::invalid_argument("fit: duplicate training rows " +
                                            std::to_string(i) + " and " + std::to_string(j));
            }
        }
    }

    KrigingModel m;
    m.X_ = X;
    m.y_mean_ = y.mean();
    const double var = (y.array() - m.y_mean_).square().mean();
    m.y_std_ = var > 0.0 ? std::sqrt(var) : 1.0;
    m.y_std_v_ = (y.array() - m.y_mean_) / m.y_std_;
    m.nugget_ = options.nugget;
    m.kernel_.kind = kind;

    const Eigen::MatrixXd F = trend_basis(X);
    const double lo = std::log(options.theta_min), hi = std::log(options.theta_max);
    auto objective = [&](const Eigen::VectorXd& log_theta) {
        return profile_likelihood(kind, log_theta, X, m.y_std_v_, F, options.nugget)
            .neg_log_likelihood;
    };

    // Start points: theta = 1 plus a maximin LHS in log-theta space.
    std::vector<Eigen::VectorXd> starts;
    starts.push_back(Eigen::VectorXd::Zero(d));
    if (options.restarts > 1) {
        const Eigen::MatrixXd unit =
            maximin_lhs(options.restarts - 1 < 2 ? 2 : options.restarts - 1,
                        static_cast<int>(d), options.seed)
                .points;
        for (int r = 0; r < options.restarts - 1; ++r) {
            Eigen::VectorXd s =
                (lo + (hi - lo) * unit.row(r).transpose().array()).matrix();
            starts.push_back(std::move(s));
        }
    }

    double best_nll = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_log_theta = Eigen::VectorXd::Zero(d);
    for (const auto& s : starts) {
        const Eigen::VectorXd t = nelder_mead(
            objective, s, lo, hi, options.local_iterations * static_cast<int>(d));
        const double v = objective(t);
        if (v < best_nll) {
            best_nll = v;
            best_log_theta = t;
        }
    }
    if (!std::isfinite(best_nll)) {
        throw std::runtime_error("fit: covariance factorization failed at every restart");
    }

    ProfileFit pf =
        profile_likelihood(kind, best_log_theta, X, m.y_std_v_, F, options.nugget);
    m.kernel_.length_scales = best_log_theta.array().exp();
    m.kernel_.variance = pf.sigma2;
    m.beta_ = pf.beta;
    m.log_likelihood_ = -0.5 * pf.neg_log_likelihood;

    // Nugget escalation on factorization failure, x10 up to nugget_max.
    double nugget = options.nugget;
    for (;;) {
        m.nugget_ = nugget;
        try {
            m.factorize();
            break;
        } catch (const std::runtime_error&) {
            nugget *= 10.0;
            if (nugget > options.nugget_max) throw;
        }
    }
    return m;
}

void KrigingModel::factorize() {
    inv_theta_ = kernel_.length_scales.cwiseInverse();
    Eigen::MatrixXd K = correlation_matrix(kernel_.kind, inv_theta_, X_);
    K.diagonal().array() += nugget_;
    chol_.compute(K);
    if (chol_.info() != Eigen::Success) {
        throw std::runtime_error("KrigingModel: correlation matrix not positive definite");
    }
    const Eigen::MatrixXd F = trend_basis(X_);
    kinv_f_ = chol_.solve(F);
    ftkf_.compute((F.transpose() * kinv_f_).eval());
    alpha_ = chol_.solve((y_std_v_ - F * beta_).eval());
}

namespace {

/// The nugget is treated as part of the process covariance at zero distance,
/// so a query that coincides with a training row (correlation exactly 1)
/// reproduces the training value exactly instead of y_i - nugget * alpha_i.
void absorb_nugget_at_exact_match(Eigen::VectorXd& r, double nugget) {
    for (Eigen::Index i = 0; i < r.size(); ++i) {
        if (r[i] == 1.0) r[i] += nugget;
    }
}

} // namespace

double KrigingModel::predict_mean(const Eigen::VectorXd& x) const {
    if (x.size() != dim()) throw std::invalid_argument("predict: dimension mismatch");
    Eigen::VectorXd r = correlation_vector(kernel_.kind, inv_theta_, X_, x);
    absorb_nugget_at_exact_match(r, nugget_);
    const double acc = beta_[0] + beta_.tail(dim()).dot(x) + alpha_.dot(r);
    return acc * y_std_ + y_mean_;
}

Prediction KrigingModel::predict(const Eigen::VectorXd& x) const {
    if (x.size() != dim()) throw std::invalid_argument("predict: dimension mismatch");
    Eigen::VectorXd r = correlation_vector(kernel_.kind, inv_theta_, X_, x);
    absorb_nugget_at_exact_match(r, nugget_);
    Eigen::VectorXd f(dim() + 1);
    f[0] = 1.0;
    f.tail(dim()) = x;

    Prediction p;
    p.mean = (f.dot(beta_) + r.dot(alpha_)) * y_std_ + y_mean_;
    const Eigen::VectorXd w = chol_.solve(r);
    const Eigen::VectorXd u = kinv_f_.transpose() * r - f;
    double rel = 1.0 - r.dot(w) + u.dot(ftkf_.solve(u));
    p.variance = std::max(0.0, kernel_.variance * rel) * y_std_ * y_std_;
    return p;
}

void KrigingModel::save(const std::string& path) const {
    nlohmann::json j;
    j["kind"] = kernel_name(kernel_.kind);
    j["length_scales"] = std::vector<double>(
        kernel_.length_scales.data(), kernel_.length_scales.data() + kernel_.length_scales.size());
    j["variance"] = kernel_.variance;
    j["nugget"] = nugget_;
    j["beta"] = std::vector<double>(beta_.data(), beta_.data() + beta_.size());
    j["y_mean"] = y_mean_;
    j["y_std"] = y_std_;
    j["log_likelihood"] = log_likelihood_;
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(X_.rows()));
    for (Eigen::Index i = 0; i < X_.rows(); ++i) {
        rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(X_.cols()));
        for (Eigen::Index c = 0; c < X_.cols(); ++c) {
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = X_(i, c);
        }
    }
    j["X"] = rows;
    j["y_standardized"] = std::vector<double>(y_std_v_.data(), y_std_v_.data() + y_std_v_.size());

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(1) << '\n';
}

KrigingModel KrigingModel::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    nlohmann::json j;
    in >> j;

    KrigingModel m;
    m.kernel_.kind = kernel_from_name(j.at("kind").get<std::string>());
    const auto ls = j.at("length_scales").get<std::vector<double>>();
    m.kernel_.length_scales =
        Eigen::Map<const Eigen::VectorXd>(ls.data(), static_cast<Eigen::Index>(ls.size()));
    m.kernel_.variance = j.at("variance").get<double>();
    m.nugget_ = j.at("nugget").get<double>();
    const auto beta = j.at("beta").get<std::vector<double>>();
    m.beta_ = Eigen::Map<const Eigen::VectorXd>(beta.data(), static_cast<Eigen::Index>(beta.size()));
    m.y_mean_ = j.at("y_mean").get<double>();
    m.y_std_ = j.at("y_std").get<double>();
    m.log_likelihood_ = j.at("log_likelihood").get<double>();
    const auto rows = j.at("X").get<std::vector<std::vector<double>>>();
    const auto yv = j.at("y_standardized").get<std::vector<double>>();
    m.X_.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(ls.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t c = 0; c < ls.size(); ++c) {
            m.X_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = rows[i][c];
        }
    }
    m.y_std_v_ = Eigen::Map<const Eigen::VectorXd>(yv.data(), static_cast<Eigen::Index>(yv.size()));
    m.factorize();
    return m;
}

double nrmse(const Eigen::VectorXd& y_real, const Eigen::VectorXd& y_pred) {
    if (y_real.size() != y_pred.size() || y_real.size() == 0) {
        throw std::invalid_argument("nrmse: length mismatch or empty input");
    }
    const double denom = y_real.norm();
    if (denom == 0.0) throw std::invalid_argument("nrmse: ||y_real|| is zero");
    return (y_real - y_pred).norm() / denom * 100.0;
}

} // namespace rsopt
