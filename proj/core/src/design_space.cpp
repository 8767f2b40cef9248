#include "rsopt/design_space.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace rsopt {

Box::Box(Eigen::VectorXd lo, Eigen::VectorXd hi) : low(std::move(lo)), high(std::move(hi)) {
    if (low.size() != high.size()) {
        throw std::invalid_argument("Box: low/high dimension mismatch");
    }
    for (Eigen::Index j = 0; j < low.size(); ++j) {
        if (low[j] > high[j]) {
            throw std::invalid_argument("Box: low > high in dimension " + std::to_string(j));
        }
    }
}

bool Box::contains(const Eigen::VectorXd& x, double eps) const {
    if (x.size() != low.size()) return false;
    for (Eigen::Index j = 0; j < low.size(); ++j) {
        if (x[j] < low[j] - eps || x[j] > high[j] + eps) return false;
    }
    return true;
}

Eigen::Index DesignSpace::find(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].name == name) return static_cast<Eigen::Index>(i);
    }
    return -1;
}

std::vector<std::string> DesignSpace::validate() const {
    std::vector<std::string> violations;
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (!seen.insert(v.name).second) {
            violations.push_back(v.name + ": duplicate variable name");
        }
        if (!(v.lower < v.upper)) {
            violations.push_back(v.name + ": lower < upper violated");
        }
        if (v.tolerance < 0.0) {
            violations.push_back(v.name + ": negative tolerance");
        }
        if (v.uncertain && v.tolerance == 0.0) {
            violations.push_back(v.name + ": zero tolerance on uncertain variable");
        }
        if (!v.uncertain && v.tolerance != 0.0) {
            // Allowed: the tolerance is declared in the space definition and
            // only activated once the sensitivity screening flags the
            // variable. Not a violation.
        }
        if (v.lower < v.upper && v.tolerance >= (v.upper - v.lower) / 2.0) {
            violations.push_back(v.name + ": tolerance >= half the feasible interval");
        }
    }
    return violations;
}

void DesignSpace::require_valid() const {
    auto violations = validate();
    if (violations.empty()) return;
    std::ostringstream oss;
    oss << "invalid design space:";
    for (const auto& s : violations) oss << "\n  " << s;
    throw std::invalid_argument(oss.str());
}

Box DesignSpace::nominal_box() const {
    Eigen::VectorXd lo(size()), hi(size());
    for (Eigen::Index j = 0; j < size(); ++j) {
        lo[j] = vars_[j].lower;
        hi[j] = vars_[j].upper;
    }
    return Box(std::move(lo), std::move(hi));
}

Box DesignSpace::perturbation_box() const {
    require_valid();
    Eigen::VectorXd lo(size()), hi(size());
    for (Eigen::Index j = 0; j < size(); ++j) {
        double u = vars_[j].uncertain ? vars_[j].tolerance : 0.0;
        lo[j] = -u;
        hi[j] = u;
    }
    return Box(std::move(lo), std::move(hi));
}

Box DesignSpace::extended_space() const {
    require_valid();
    Eigen::VectorXd lo(size()), hi(size());
    for (Eigen::Index j = 0; j < size(); ++j) {
        double u = vars_[j].uncertain ? vars_[j].tolerance : 0.0;
        lo[j] = vars_[j].lower - u;
        hi[j] = vars_[j].upper + u;
    }
    return Box(std::move(lo), std::move(hi));
}

Eigen::VectorXd DesignSpace::normalize(const Eigen::VectorXd& native) const {
    if (native.size() != size()) {
        throw std::invalid_argument("normalize: dimension mismatch");
    }
    Box ext = extended_space();
    if (!ext.contains(native, 1e-12)) {
        throw std::out_of_range("normalize: point outside the extended design space");
    }
    Eigen::VectorXd z(size());
    for (Eigen::Index j = 0; j < size(); ++j) {
        z[j] = (native[j] - vars_[j].lower) / (vars_[j].upper - vars_[j].lower);
    }
    return z;
}

Eigen::VectorXd DesignSpace::denormalize(const Eigen::VectorXd& unit) const {
    if (unit.size() != size()) {
        throw std::invalid_argument("denormalize: dimension mismatch");
    }
    Eigen::VectorXd x(size());
    for (Eigen::Index j = 0; j < size(); ++j) {
        x[j] = vars_[j].lower + unit[j] * (vars_[j].upper - vars_[j].lower);
    }
    return x;
}

Eigen::VectorXd DesignSpace::normalized_tolerances() const {
    Eigen::VectorXd t(size());
    for (Eigen::Index j = 0; j < size(); ++j) {
        t[j] = vars_[j].tolerance / (vars_[j].upper - vars_[j].lower);
    }
    return t;
}

DesignSpace DesignSpace::with_uncertain(const std::vector<bool>& flags) const {
    if (flags.size() != vars_.size()) {
        throw std::invalid_argument("with_uncertain: flag count mismatch");
    }
    std::vector<Variable> vars = vars_;
    for (std::size_t i = 0; i < vars.size(); ++i) vars[i].uncertain = flags[i];
    return DesignSpace(std::move(vars));
}

std::vector<std::string> DesignSpace::names() const {
    std::vector<std::string> out;
    out.reserve(vars_.size());
    for (const auto& v : vars_) out.push_back(v.name);
    return out;
}

} // namespace rsopt
