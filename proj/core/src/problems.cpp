#include "rsopt/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace rsopt {

double ishigami(const Eigen::VectorXd& x) {
    if (x.size() != 3) throw std::invalid_argument("ishigami: need 3 inputs");
    constexpr double a = 7.0, b = 0.1;
    return std::sin(x[0]) + a * std::sin(x[1]) * std::sin(x[1]) +
           b * std::pow(x[2], 4) * std::sin(x[0]);
}

Eigen::VectorXd zdt1(const Eigen::VectorXd& x) {
    if (x.size() < 2) throw std::invalid_argument("zdt1: need d >= 2");
    const double f1 = x[0];
    const double g = 1.0 + 9.0 * x.tail(x.size() - 1).mean();
    Eigen::VectorXd f(2);
    f[0] = f1;
    f[1] = g * (1.0 - std::sqrt(f1 / g));
    return f;
}

double robust_1d_fn(double x) {
    // Narrow deep valley at 0.25 (deterministic optimum), wide shallow valley
    // at 0.75 (robust optimum under a +-0.1 uniform tolerance).
    const double narrow = (x - 0.25) / 0.03;
    const double wide = (x - 0.75) / 0.20;
    return -1.2 * std::exp(-narrow * narrow) - 1.0 * std::exp(-wide * wide);
}

namespace {

// Synthetic motor-like pair over the 12-variable design space. torque_like is
// smooth and dominated by the first five variables; ripple_like shares the
// same trend direction (the objectives conflict) plus sharp valleys narrower
// than the tolerance band, so deterministic and robust fronts separate. The
// closed form carries no electromagnetic meaning.
constexpr double kTorqueBase = 437.5;
constexpr double kTorqueScale = 14.0;
constexpr double kRippleBase = 8.2;
constexpr double kRippleTrend = 1.9;
constexpr double kRidgeWeight = 0.35;

const double kWeights[12] = {1.0, 0.9, 0.85, 0.8, 0.75,
                             0.08, 0.08, 0.08, 0.08, 0.08, 0.08, 0.08};
const double kWeightSum = 4.86;

double smooth_axis(double z) {
    const double t = 2.0 * z - 1.0;
    return t + 0.15 * std::sin(M_PI * t);
}

double ridge_axis(double z) {
    const double narrow = (z - 0.30) / 0.025;
    const double wide = (z - 0.70) / 0.15;
    return -1.4 * std::exp(-narrow * narrow) - 1.0 * std::exp(-wide * wide) +
           0.18 * std::abs(std::sin(8.0 * M_PI * z));
}

} // namespace

DesignSpace motor_design_space() {
    return DesignSpace({
        {"Slot_angle", 2.47, 3.27, 0.10, false},
        {"Beta_L1_P1", 27.03, 29.66, 0.33, false},
        {"Beta_L1_P2", 37.03, 39.66, 0.33, false},
        {"Beta_L2_P1", 31.03, 33.66, 0.33, false},
        {"Beta_L2_P2", 47.03, 49.66, 0.33, false},
        {"Beta_L3_P1", 33.70, 37.00, 0.33, false},
        {"Beta_L3_P2", 59.70, 63.00, 0.33, false},
        {"Airgap", 0.55, 0.65, 0.03, false},
        {"Bridge_L1", 2.60, 2.98, 0.05, false},
        {"Bridge_L2", 0.90, 1.18, 0.05, false},
        {"Bridge_L3", 0.50, 0.62, 0.03, false},
        {"Bridge_tang", 0.40, 0.60, 0.05, false},
    });
}

Eigen::VectorXd motor_synthetic_fn(const Eigen::VectorXd& native) {
    static const DesignSpace space = motor_design_space();
    if (native.size() != 12) throw std::invalid_argument("motor_synthetic: need 12 inputs");
    for (Eigen::Index j = 0; j < 12; ++j) {
        // Defined on the full tolerance-extended box, whatever subset of the
        // variables a given run flags as uncertain.
        if (native[j] < space[j].lower - space[j].tolerance - 1e-9 ||
            native[j] > space[j].upper + space[j].tolerance + 1e-9) {
            throw std::out_of_range("motor_synthetic: point outside the extended design space");
        }
    }
    Eigen::VectorXd z(12);
    for (Eigen::Index j = 0; j < 12; ++j) {
        z[j] = (native[j] - space[j].lower) / (space[j].upper - space[j].lower);
    }
    double h = 0.0;
    for (int j = 0; j < 12; ++j) h += kWeights[j] * smooth_axis(z[j]);
    h /= kWeightSum;

    double ridges = 0.0;
    for (int j = 0; j < 5; ++j) ridges += kRidgeWeight * ridge_axis(z[j]);

    Eigen::VectorXd f(2);
    f[0] = kTorqueBase + kTorqueScale * h;          // torque_like, N.m-scaled
    f[1] = kRippleBase + kRippleTrend * h + ridges; // ripple_like, %-scaled
    return f;
}

const std::vector<std::string>& problem_names() {
    static const std::vector<std::string> names = {
        "ishigami", "zdt1", "robust_1d", "quadratic2d", "motor_synthetic"};
    return names;
}

Problem make_problem(const std::string& name) {
    Problem p;
    p.name = name;
    if (name == "ishigami") {
        p.dim = 3;
        p.n_objectives = 1;
        p.space = DesignSpace({{"x1", -M_PI, M_PI, 0.0, false},
                               {"x2", -M_PI, M_PI, 0.0, false},
                               {"x3", -M_PI, M_PI, 0.0, false}});
        p.objective_names = {"y"};
        p.sense = Eigen::VectorXd::Ones(1);
        p.kernels = {KernelKind::matern52};
        p.eval = [](const Eigen::VectorXd& x) {
            Eigen::VectorXd f(1);
            f[0] = ishigami(x);
            return f;
        };
    } else if (name == "zdt1") {
        const int d = 8;
        p.dim = d;
        p.n_objectives = 2;
        std::vector<Variable> vars;
        for (int j = 0; j < d; ++j) {
            vars.push_back({"x" + std::to_string(j + 1), 0.0, 1.0, 0.0, false});
        }
        p.space = DesignSpace(std::move(vars));
        p.objective_names = {"f1", "f2"};
        p.sense = Eigen::VectorXd::Ones(2);
        p.kernels = {KernelKind::matern52, KernelKind::matern52};
        p.eval = [](const Eigen::VectorXd& x) { return zdt1(x); };
    } else if (name == "robust_1d") {
        p.dim = 1;
        p.n_objectives = 1;
        p.space = DesignSpace({{"x", 0.0, 1.0, 0.1, true}});
        p.objective_names = {"f"};
        p.sense = Eigen::VectorXd::Ones(1);
        p.kernels = {KernelKind::matern52};
        p.eval = [](const Eigen::VectorXd& x) {
            Eigen::VectorXd f(1);
            f[0] = robust_1d_fn(x[0]);
            return f;
        };
    } else if (name == "quadratic2d") {
        p.dim = 2;
        p.n_objectives = 1;
        p.space = DesignSpace({{"x1", -1.0, 1.0, 0.3, true}, {"x2", -1.0, 1.0, 0.3, true}});
        p.objective_names = {"f"};
        p.sense = Eigen::VectorXd::Ones(1);
        p.kernels = {KernelKind::matern52};
        p.eval = [](const Eigen::VectorXd& x) {
            Eigen::VectorXd f(1);
            f[0] = x.squaredNorm();
            return f;
        };
    } else if (name == "motor_synthetic") {
        p.dim = 12;
        p.n_objectives = 2;
        p.space = motor_design_space();
        p.objective_names = {"torque_like", "ripple_like"};
        p.sense = Eigen::VectorXd(2);
        p.sense << -1.0, 1.0; // maximize torque, minimize ripple
        p.kernels = {KernelKind::matern52, KernelKind::abs_exponential};
        p.eval = [](const Eigen::VectorXd& x) { return motor_synthetic_fn(x); };
    } else {
        throw std::invalid_argument("unknown problem: " + name);
    }
    return p;
}

} // namespace rsopt
