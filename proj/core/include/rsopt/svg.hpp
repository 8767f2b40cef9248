#ifndef RSOPT_SVG_HPP
#define RSOPT_SVG_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "rsopt/moo.hpp"
#include "rsopt/robust.hpp"
#include "rsopt/sensitivity.hpp"

namespace rsopt {

/// A named scatter series (e.g. a posterior re-evaluation overlay).
struct SvgSeries {
    std::string label;
    std::string color;
    std::vector<Eigen::Vector2d> points; // (x objective, y objective)
};

/// Pareto front comparison figure: one scatter series per archive, extra
/// overlay series, shaded vertical bands at the zone targets. Archives must
/// agree on objective names (these label the axes). Throws on mismatch.
std::string emit_front_svg(const std::vector<ParetoArchive>& archives,
                           const std::vector<SvgSeries>& overlays,
                           const std::vector<double>& zone_targets, double zone_tol);

/// Paired boxplots per zone: q1-q3 box, median line, min/max whiskers, mean
/// marker, std annotation (2 decimals). `objective_index` selects which
/// objective's stats are drawn.
std::string emit_boxplot_svg(const std::vector<ZonePair>& zones, int objective_index,
                             const std::string& label_a, const std::string& label_b,
                             const std::string& objective_name);

/// Bar chart of the top-6 variables by total Sobol index.
std::string emit_sobol_svg(const SobolResult& result,
                           const std::vector<std::string>& variable_names,
                           const std::string& objective_name);

} // namespace rsopt

#endif
