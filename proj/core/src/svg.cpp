#include "rsopt/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rsopt {

namespace {

constexpr double kWidth = 720, kHeight = 480;
constexpr double kMarginL = 70, kMarginR = 20, kMarginT = 30, kMarginB = 55;

const char* kSeriesColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Scale {
    double lo = 0, hi = 1, px0 = 0, px1 = 1;
    double operator()(double v) const { return px0 + (v - lo) / (hi - lo) * (px1 - px0); }
};

Scale make_scale(double lo, double hi, double px0, double px1) {
    if (!(hi > lo)) {
        const double pad = std::max(1e-9, std::abs(lo) * 1e-3 + 1e-3);
        lo -= pad;
        hi += pad;
    }
    const double pad = 0.05 * (hi - lo);
    return Scale{lo - pad, hi + pad, px0, px1};
}

void axes(std::ostringstream& svg, const Scale& sx, const Scale& sy,
          const std::string& x_label, const std::string& y_label) {
    svg << "<rect x='" << num(kMarginL) << "' y='" << num(kMarginT) << "' width='"
        << num(kWidth - kMarginL - kMarginR) << "' height='" << num(kHeight - kMarginT - kMarginB)
        << "' fill='none' stroke='black'/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double fx = sx.lo + (sx.hi - sx.lo) * i / 5.0;
        const double fy = sy.lo + (sy.hi - sy.lo) * i / 5.0;
        svg << "<text x='" << num(sx(fx)) << "' y='" << num(kHeight - kMarginB + 18)
            << "' font-size='11' text-anchor='middle'>" << num(fx) << "</text>\n";
        svg << "<text x='" << num(kMarginL - 8) << "' y='" << num(sy(fy) + 4)
            << "' font-size='11' text-anchor='end'>" << num(fy) << "</text>\n";
    }
    svg << "<text x='" << num((kMarginL + kWidth - kMarginR) / 2) << "' y='"
        << num(kHeight - 12) << "' font-size='13' text-anchor='middle'>" << x_label
        << "</text>\n";
    svg << "<text x='16' y='" << num((kMarginT + kHeight - kMarginB) / 2)
        << "' font-size='13' text-anchor='middle' transform='rotate(-90 16 "
        << num((kMarginT + kHeight - kMarginB) / 2) << ")'>" << y_label << "</text>\n";
}

std::string header() {
    return "<?xml version='1.0' encoding='UTF-8'?>\n<svg xmlns='http://www.w3.org/2000/svg' "
           "width='" + num(kWidth) + "' height='" + num(kHeight) + "' viewBox='0 0 " +
           num(kWidth) + " " + num(kHeight) + "'>\n";
}

} // namespace

std::string emit_front_svg(const std::vector<ParetoArchive>& archives,
                           const std::vector<SvgSeries>& overlays,
                           const std::vector<double>& zone_targets, double zone_tol) {
    if (archives.empty()) throw std::invalid_argument("emit_front_svg: no archives");
    const auto& names = archives.front().objective_names;
    if (names.size() < 2) throw std::invalid_argument("emit_front_svg: need 2 objectives");
    for (const auto& a : archives) {
        if (a.objective_names != names) {
            throw std::invalid_argument("emit_front_svg: mismatched objective names");
        }
    }

    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
    double ylo = xlo, yhi = -xlo;
    auto extend = [&](double x, double y) {
        xlo = std::min(xlo, x);
        xhi = std::max(xhi, x);
        ylo = std::min(ylo, y);
        yhi = std::max(yhi, y);
    };
    for (const auto& a : archives) {
        for (const auto& m : a.members) extend(m.objectives[0], m.objectives[1]);
    }
    for (const auto& s : overlays) {
        for (const auto& p : s.points) extend(p[0], p[1]);
    }

    const Scale sx = make_scale(xlo, xhi, kMarginL, kWidth - kMarginR);
    const Scale sy = make_scale(ylo, yhi, kHeight - kMarginB, kMarginT);

    std::ostringstream svg;
    svg << header();
    for (double t : zone_targets) {
        const double x0 = sx(t - zone_tol), x1 = sx(t + zone_tol);
        svg << "<rect x='" << num(x0) << "' y='" << num(kMarginT) << "' width='"
            << num(std::max(x1 - x0, 1.0)) << "' height='" << num(kHeight - kMarginT - kMarginB)
            << "' fill='#b0b0b0' fill-opacity='0.5'/>\n";
    }
    axes(svg, sx, sy, names[0], names[1]);

    int color = 0;
    double legend_y = kMarginT + 14;
    auto legend = [&](const std::string& label, const std::string& c) {
        svg << "<circle cx='" << num(kWidth - kMarginR - 180) << "' cy='" << num(legend_y - 4)
            << "' r='4' fill='" << c << "'/>\n<text x='" << num(kWidth - kMarginR - 170)
            << "' y='" << num(legend_y) << "' font-size='12'>" << label << "</text>\n";
        legend_y += 16;
    };
    for (const auto& a : archives) {
        const std::string c = kSeriesColors[color % 5];
        ++color;
        for (const auto& m : a.members) {
            svg << "<circle cx='" << num(sx(m.objectives[0])) << "' cy='"
                << num(sy(m.objectives[1])) << "' r='3' fill='" << c << "'/>\n";
        }
        legend(a.formulation.empty() ? "archive" : a.formulation, c);
    }
    for (const auto& s : overlays) {
        const std::string c = s.color.empty() ? kSeriesColors[color++ % 5] : s.color;
        for (const auto& p : s.points) {
            svg << "<circle cx='" << num(sx(p[0])) << "' cy='" << num(sy(p[1]))
                << "' r='3' fill='none' stroke='" << c << "'/>\n";
        }
        legend(s.label, c);
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string emit_boxplot_svg(const std::vector<ZonePair>& zones, int objective_index,
                             const std::string& label_a, const std::string& label_b,
                             const std::string& objective_name) {
    if (zones.empty()) throw std::invalid_argument("emit_boxplot_svg: no zones");
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    int n_matched = 0;
    for (const auto& z : zones) {
        if (!(z.matched_a && z.matched_b)) continue;
        ++n_matched;
        for (const RobustStats* rs : {&z.a, &z.b}) {
            const auto& s = rs->per_objective[static_cast<std::size_t>(objective_index)];
            lo = std::min(lo, s.min);
            hi = std::max(hi, s.max);
        }
    }
    if (n_matched == 0) throw std::invalid_argument("emit_boxplot_svg: no matched zones");

    const Scale sy = make_scale(lo, hi, kHeight - kMarginB, kMarginT);
    const double slot = (kWidth - kMarginL - kMarginR) / (2.0 * n_matched);
    const double box_w = std::min(40.0, slot * 0.6);

    std::ostringstream svg;
    svg << header();
    const Scale sx{0, 1, kMarginL, kWidth - kMarginR};
    axes(svg, sx, sy, "zones", objective_name);

    int slot_idx = 0;
    char zone_letter = 'A';
    for (const auto& z : zones) {
        if (!(z.matched_a && z.matched_b)) {
            ++zone_letter;
            continue;
        }
        for (int side = 0; side < 2; ++side) {
            const RobustStats& rs = side == 0 ? z.a : z.b;
            const auto& s = rs.per_objective[static_cast<std::size_t>(objective_index)];
            const std::string c = side == 0 ? "#1f77b4" : "#d62728";
            const double cx = kMarginL + slot * (slot_idx + 0.5);
            // whiskers
            svg << "<line x1='" << num(cx) << "' y1='" << num(sy(s.min)) << "' x2='" << num(cx)
                << "' y2='" << num(sy(s.q1)) << "' stroke='" << c << "'/>\n";
            svg << "<line x1='" << num(cx) << "' y1='" << num(sy(s.q3)) << "' x2='" << num(cx)
                << "' y2='" << num(sy(s.max)) << "' stroke='" << c << "'/>\n";
            // box
            svg << "<rect x='" << num(cx - box_w / 2) << "' y='" << num(sy(s.q3)) << "' width='"
                << num(box_w) << "' height='" << num(std::abs(sy(s.q1) - sy(s.q3)))
                << "' fill='none' stroke='" << c << "'/>\n";
            // median, mean
            svg << "<line x1='" << num(cx - box_w / 2) << "' y1='" << num(sy(s.q2)) << "' x2='"
                << num(cx + box_w / 2) << "' y2='" << num(sy(s.q2)) << "' stroke='" << c
                << "' stroke-width='2'/>\n";
            svg << "<circle cx='" << num(cx) << "' cy='" << num(sy(s.mean)) << "' r='3' fill='"
                << c << "'/>\n";
            char std_txt[48];
            std::snprintf(std_txt, sizeof(std_txt), "STD %.2f", s.stddev);
            svg << "<text x='" << num(cx) << "' y='" << num(kHeight - kMarginB + 32)
                << "' font-size='10' text-anchor='middle' fill='" << c << "'>" << std_txt
                << "</text>\n";
            ++slot_idx;
        }
        svg << "<text x='" << num(kMarginL + slot * (slot_idx - 1.0)) << "' y='"
            << num(kMarginT + 14) << "' font-size='12' text-anchor='middle'>zone "
            << zone_letter << "</text>\n";
        ++zone_letter;
    }
    svg << "<text x='" << num(kMarginL) << "' y='" << num(kMarginT - 8)
        << "' font-size='12'>" << label_a << " (blue) vs " << label_b << " (red)</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::string emit_sobol_svg(const SobolResult& result,
                           const std::vector<std::string>& variable_names,
                           const std::string& objective_name) {
    const Eigen::Index d = result.dim();
    if (static_cast<Eigen::Index>(variable_names.size()) != d) {
        throw std::invalid_argument("emit_sobol_svg: name count mismatch");
    }
    std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return result.total[a] > result.total[b]; });
    const int shown = static_cast<int>(std::min<Eigen::Index>(6, d)); // most important inputs only

    const Scale sy = make_scale(0.0, std::max(result.total[order[0]], 1e-6),
                                kHeight - kMarginB, kMarginT);
    const double slot = (kWidth - kMarginL - kMarginR) / (2.0 * shown);

    std::ostringstream svg;
    svg << header();
    const Scale sx{0, 1, kMarginL, kWidth - kMarginR};
    axes(svg, sx, sy, "variable", "Sobol index");
    for (int i = 0; i < shown; ++i) {
        const Eigen::Index j = order[static_cast<std::size_t>(i)];
        const double x0 = kMarginL + slot * (2 * i + 0.25);
        svg << "<rect x='" << num(x0) << "' y='" << num(sy(result.first_order[j]))
            << "' width='" << num(slot * 0.7) << "' height='"
            << num(sy(0.0) - sy(result.first_order[j])) << "' fill='#1f77b4'/>\n";
        svg << "<rect x='" << num(x0 + slot * 0.75) << "' y='" << num(sy(result.total[j]))
            << "' width='" << num(slot * 0.7) << "' height='"
            << num(sy(0.0) - sy(result.total[j])) << "' fill='#d62728'/>\n";
        svg << "<text x='" << num(x0 + slot * 0.7) << "' y='" << num(kHeight - kMarginB + 32)
            << "' font-size='10' text-anchor='middle'>" << variable_names[static_cast<std::size_t>(j)]
            << "</text>\n";
    }
    svg << "<text x='" << num(kMarginL) << "' y='" << num(kMarginT - 8) << "' font-size='12'>"
        << objective_name << " (blue: first order, red: total)</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace rsopt
