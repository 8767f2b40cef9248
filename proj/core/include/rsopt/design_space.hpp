#ifndef RSOPT_DESIGN_SPACE_HPP
#define RSOPT_DESIGN_SPACE_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace rsopt {

/// One optimization variable in native units (degrees, mm, ...).
/// `tolerance` is the half-width of the manufacturing tolerance band.
struct Variable {
    std::string name;
    double lower = 0.0;
    double upper = 1.0;
    double tolerance = 0.0;
    bool uncertain = false;
};

/// Axis-aligned box, same dimension and ordering as the owning DesignSpace.
struct Box {
    Eigen::VectorXd low;
    Eigen::VectorXd high;

    Box() = default;
    Box(Eigen::VectorXd lo, Eigen::VectorXd hi);

    Eigen::Index size() const { return low.size(); }
    double width(Eigen::Index j) const { return high[j] - low[j]; }
    Eigen::VectorXd center() const { return 0.5 * (low + high); }
    bool contains(const Eigen::VectorXd& x, double eps = 0.0) const;
};

/// Ordered set of variables; immutable after construction.
class DesignSpace {
public:
    DesignSpace() = default;
    explicit DesignSpace(std::vector<Variable> vars) : vars_(std::move(vars)) {}

    Eigen::Index size() const { return static_cast<Eigen::Index>(vars_.size()); }
    const std::vector<Variable>& variables() const { return vars_; }
    const Variable& operator[](Eigen::Index j) const { return vars_[static_cast<std::size_t>(j)]; }
    Eigen::Index find(const std::string& name) const; // -1 if absent

    /// Every invariant violation, with the offending variable named.
    /// Empty result means the space is valid.
    std::vector<std::string> validate() const;
    void require_valid() const; // throws std::invalid_argument with all violations

    Box nominal_box() const;

    /// Omega: [-u_j, u_j] per dimension, [0,0] for certain variables.
    Box perturbation_box() const;

    /// X(U): [lower_j - u_j, upper_j + u_j] per dimension.
    Box extended_space() const;

    /// Affine map to [0,1]^d using the *nominal* bounds. Points of the
    /// extended box map slightly outside [0,1]; that is accepted everywhere
    /// downstream. Throws if the point leaves the extended box.
    Eigen::VectorXd normalize(const Eigen::VectorXd& native) const;
    Eigen::VectorXd denormalize(const Eigen::VectorXd& unit) const;

    /// Tolerances expressed in normalized units (tolerance_j / span_j).
    Eigen::VectorXd normalized_tolerances() const;

    /// Copy with uncertain flags replaced.
    DesignSpace with_uncertain(const std::vector<bool>& flags) const;

    std::vector<std::string> names() const;

private:
    std::vector<Variable> vars_;
};

} // namespace rsopt

#endif
