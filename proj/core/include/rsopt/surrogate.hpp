#ifndef RSOPT_SURROGATE_HPP
#define RSOPT_SURROGATE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>

namespace rsopt {

enum class KernelKind { matern52, abs_exponential };

std::string kernel_name(KernelKind kind);
KernelKind kernel_from_name(const std::string& name);

/// Tensorized (anisotropic product) kernel: one length-scale per dimension.
struct KernelSpec {
    KernelKind kind = KernelKind::matern52;
    Eigen::VectorXd length_scales; // all > 0
    double variance = 1.0;         // > 0
};

/// Covariance between two points.
double kernel_value(const KernelSpec& spec, const Eigen::VectorXd& a,
                    const Eigen::VectorXd& b);

struct Prediction {
    double mean = 0.0;
    double variance = 0.0; // clamped at 0 against round-off
};

struct FitOptions {
    int restarts = 8;            // multi-start count for the likelihood search
    int local_iterations = 60;   // Nelder-Mead iterations per restart (x dim)
    double nugget = 1e-8;        // on the standardized problem; escalated x10
    double nugget_max = 1e-4;    // up to here on factorization failure
    double theta_min = 1e-2;     // length-scale bounds in normalized coords
    double theta_max = 1e2;
    std::uint64_t seed = 0x5eed;
};

/// Universal Kriging with exactly linear trend (intercept + one slope per
/// dimension). Inputs are expected in normalized [0,1]-ish coordinates;
/// outputs are standardized internally. Immutable once fitted.
class KrigingModel {
public:
    /// Maximizes the profile log marginal likelihood over log length-scales
    /// (variance and trend profiled out analytically) by multi-start
    /// Nelder-Mead. Requires n >= d + 2 and no duplicate rows.
    static KrigingModel fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                            KernelKind kind, const FitOptions& options = {});

    Prediction predict(const Eigen::VectorXd& x) const;
    /// Mean only; the hot path for optimizers.
    double predict_mean(const Eigen::VectorXd& x) const;

    Eigen::Index dim() const { return X_.cols(); }
    Eigen::Index n_train() const { return X_.rows(); }
    const KernelSpec& kernel() const { return kernel_; }
    double nugget() const { return nugget_; }
    const Eigen::VectorXd& trend_coefficients() const { return beta_; }
    double output_mean() const { return y_mean_; }
    double output_std() const { return y_std_; }
    double log_likelihood() const { return log_likelihood_; }

    /// Self-describing JSON artifact; load() reproduces predictions to 1e-12.
    void save(const std::string& path) const;
    static KrigingModel load(const std::string& path);

private:
    KrigingModel() = default;
    void factorize(); // builds chol_, alpha_, trend solve caches

    Eigen::MatrixXd X_;        // n x d, normalized coordinates
    Eigen::VectorXd y_std_v_;  // standardized training values
    KernelSpec kernel_;
    double nugget_ = 1e-8;
    Eigen::VectorXd beta_;     // d+1 trend coefficients (standardized space)
    double y_mean_ = 0.0, y_std_ = 1.0;
    double log_likelihood_ = 0.0;

    // caches
    Eigen::VectorXd inv_theta_;        // 1 / length_scales
    Eigen::LLT<Eigen::MatrixXd> chol_; // of correlation + nugget*I
    Eigen::VectorXd alpha_;            // K^{-1} (y - F beta)
    Eigen::MatrixXd kinv_f_;           // K^{-1} F
    Eigen::LDLT<Eigen::MatrixXd> ftkf_; // of F^T K^{-1} F
};

/// Eq.-style percentage error: ||y_real - y_pred|| / ||y_real|| * 100.
double nrmse(const Eigen::VectorXd& y_real, const Eigen::VectorXd& y_pred);

} // namespace rsopt

#endif
