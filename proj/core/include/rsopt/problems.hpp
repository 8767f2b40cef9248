#ifndef RSOPT_PROBLEMS_HPP
#define RSOPT_PROBLEMS_HPP

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "rsopt/design_space.hpp"
#include "rsopt/surrogate.hpp"

namespace rsopt {

/// Analytic benchmark black box standing in for the expensive simulator.
/// Evaluation is pure and defined everywhere on the extended design space.
struct Problem {
    std::string name;
    int dim = 0;
    int n_objectives = 1;
    DesignSpace space; // nominal bounds + declared tolerances, native units
    std::vector<std::string> objective_names;
    Eigen::VectorXd sense; // +1 minimize, -1 maximize (reporting stays natural)
    std::vector<KernelKind> kernels; // preferred surrogate kernel per objective
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> eval;

    /// Objectives in minimization form: sense[j] * f_j.
    Eigen::VectorXd eval_min(const Eigen::VectorXd& x) const {
        return sense.cwiseProduct(eval(x));
    }
};

double ishigami(const Eigen::VectorXd& x); // a=7, b=0.1
Eigen::VectorXd zdt1(const Eigen::VectorXd& x);
double robust_1d_fn(double x);
Eigen::VectorXd motor_synthetic_fn(const Eigen::VectorXd& native);

/// Table of the 12 motor design variables (bounds and tolerances, native
/// units), all initially flagged certain.
DesignSpace motor_design_space();

const std::vector<std::string>& problem_names();
Problem make_problem(const std::string& name);

} // namespace rsopt

#endif
