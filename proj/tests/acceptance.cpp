// Acceptance suite: each numbered criterion is selectable by argv[1] and
// prints a single "criterion N: PASS|FAIL" line. All tolerances are pinned
// here, next to the checks they guard.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <rsopt/config.hpp>
#include <rsopt/moo.hpp>
#include <rsopt/pipeline.hpp>
#include <rsopt/problems.hpp>
#include <rsopt/rng.hpp>
#include <rsopt/robust.hpp>
#include <rsopt/sampling.hpp>
#include <rsopt/sensitivity.hpp>
#include <rsopt/surrogate.hpp>

using namespace rsopt;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Checker {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            notes.push_back(what);
        }
    }
};

Eigen::VectorXd vec1(double v) {
    Eigen::VectorXd x(1);
    x << v;
    return x;
}

// ---------------------------------------------------------------------------
// 1. Kriging interpolation on 20 random problems, 1D-5D, n=30.
void criterion_1(Checker& c) {
    Rng rng(0xACC1);
    for (int rep = 0; rep < 20; ++rep) {
        const int d = 1 + rep % 5;
        const int n = 30;
        const auto doe = maximin_lhs(n, d, 1000 + static_cast<std::uint64_t>(rep));
        // Random smooth target: mixture of sinusoids with random frequencies.
        Eigen::VectorXd w(d), phase(d);
        for (int j = 0; j < d; ++j) {
            w[j] = rng.uniform(0.5, 6.0);
            phase[j] = rng.uniform(0.0, 2.0 * kPi);
        }
        Eigen::VectorXd y(n);
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < d; ++j) acc += std::sin(w[j] * doe.points(i, j) + phase[j]);
            y[i] = acc;
        }
        FitOptions opts; // default nugget 1e-8
        const auto model = KrigingModel::fit(
            doe.points, y, rep % 2 ? KernelKind::abs_exponential : KernelKind::matern52, opts);
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            worst = std::max(worst,
                             std::abs(model.predict_mean(doe.points.row(i).transpose()) - y[i]));
        }
        c.require(worst <= 1e-6, "interpolation gap " + std::to_string(worst) + " at problem " +
                                     std::to_string(rep));
    }
}

// ---------------------------------------------------------------------------
// 2. NRMSE unit oracle: the three tabulated values, exact to 1e-12.
void criterion_2(Checker& c) {
    Eigen::VectorXd real(2), pred(2);
    real << 3.0, 4.0;
    c.require(std::abs(nrmse(real, real) - 0.0) <= 1e-12, "identical vectors must give 0%");
    pred << 0.0, 0.0;
    c.require(std::abs(nrmse(real, pred) - 100.0) <= 1e-12, "zero prediction must give 100%");
    pred << 3.0, 0.0;
    c.require(std::abs(nrmse(real, pred) - 80.0) <= 1e-12, "(3,0) vs (3,4) must give 80%");
}

// ---------------------------------------------------------------------------
// 3. Sobol oracle: Ishigami closed form, n_base=16384, 5 seeds, +/-0.05.
void criterion_3(Checker& c) {
    // Closed-form decomposition recomputed from the variance formulas.
    const double a = 7.0, b = 0.1;
    const double p4 = std::pow(kPi, 4);
    const double v1 = 0.5 * std::pow(1.0 + b * p4 / 5.0, 2);
    const double v2 = a * a / 8.0;
    const double v13 = b * b * p4 * p4 * (1.0 / 18.0 - 1.0 / 50.0);
    const double v = v1 + v2 + v13;
    const double s_true[3] = {v1 / v, v2 / v, 0.0};
    const double t_true[3] = {(v1 + v13) / v, v2 / v, v13 / v};

    Box box(Eigen::VectorXd::Constant(3, -kPi), Eigen::VectorXd::Constant(3, kPi));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto r = sobol_indices([](const Eigen::VectorXd& x) { return ishigami(x); }, box,
                                     16384, seed);
        for (int j = 0; j < 3; ++j) {
            c.require(std::abs(r.first_order[j] - s_true[j]) <= 0.05,
                      "S_" + std::to_string(j + 1) + " off at seed " + std::to_string(seed));
            c.require(std::abs(r.total[j] - t_true[j]) <= 0.05,
                      "S_T" + std::to_string(j + 1) + " off at seed " + std::to_string(seed));
        }
    }
}

// ---------------------------------------------------------------------------
// 4. NSGA-II oracle: ZDT1 d=8, pop 100, 200 generations, 3 seeds.
void criterion_4(Checker& c) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        std::vector<double> hv;
        Nsga2Options opts;
        opts.population = 100;
        opts.generations = 200;
        opts.seed = seed;
        opts.observer = [&hv](int, const ParetoArchive& archive) {
            std::vector<Eigen::VectorXd> objs;
            for (const auto& m : archive.members) objs.push_back(m.objectives);
            hv.push_back(hypervolume_2d(objs, Eigen::Vector2d(1.1, 1.1)));
        };
        const Box box(Eigen::VectorXd::Zero(8), Eigen::VectorXd::Ones(8));
        const auto archive = nsga2([](const Eigen::VectorXd& x) { return zdt1(x); }, box, opts);

        int close = 0;
        for (const auto& m : archive.members) {
            const double gap = std::abs(m.objectives[1] - (1.0 - std::sqrt(m.objectives[0])));
            if (gap <= 0.05) ++close;
        }
        const double frac = static_cast<double>(close) / static_cast<double>(archive.members.size());
        c.require(frac >= 0.90, "only " + std::to_string(100.0 * frac) +
                                    "% of the archive is near the true front (seed " +
                                    std::to_string(seed) + ")");
        for (std::size_t g = 1; g < hv.size(); ++g) {
            c.require(hv[g] >= hv[g - 1] - 1e-12, "hypervolume decreased at generation " +
                                                      std::to_string(g));
        }
    }
}

// ---------------------------------------------------------------------------
// 5. PSO oracle: 5-D sphere with the published budget.
void criterion_5(Checker& c) {
    PsoOptions opts;
    opts.particles = 150;
    opts.iterations = 300;
    opts.seed = 7;
    const Box box(Eigen::VectorXd::Constant(5, -1.0), Eigen::VectorXd::Constant(5, 1.0));
    const auto res = pso([](const Eigen::VectorXd& x) { return x.squaredNorm(); }, box, opts);
    c.require(res.f_best <= 1e-6, "sphere minimum " + std::to_string(res.f_best) + " > 1e-6");
    for (std::size_t i = 1; i < res.trace.size(); ++i) {
        c.require(res.trace[i] <= res.trace[i - 1] + 1e-15, "best-so-far trace not monotone");
    }
}

// ---------------------------------------------------------------------------
// 6. Worst case vs a 10^4-point grid on robust_1d and the 2-D quadratic.
void criterion_6(Checker& c) {
    Rng rng(0xACC6);
    {
        const DesignSpace space({{"x", 0.0, 1.0, 0.1, true}});
        const VectorFn f = [](const Eigen::VectorXd& x) { return vec1(robust_1d_fn(x[0])); };
        UncertainObjective w(f, space, Formulation::worst_case);
        for (int k = 0; k < 50; ++k) {
            const double x = rng.uniform(0.0, 1.0);
            double grid = -1e300;
            for (int i = 0; i <= 10000; ++i) {
                grid = std::max(grid, robust_1d_fn(x - 0.1 + 0.2 * i / 10000.0));
            }
            const double got = w(vec1(x))[0];
            c.require(std::abs(got - grid) <= 1e-4,
                      "robust_1d worst case off by " + std::to_string(std::abs(got - grid)));
        }
    }
    {
        const Problem quad = make_problem("quadratic2d");
        UncertainObjective w(quad.eval, quad.space, Formulation::worst_case);
        const Box omega = quad.space.perturbation_box();
        for (int k = 0; k < 50; ++k) {
            Eigen::VectorXd x(2);
            x << rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6);
            double grid = -1e300;
            const int side = 100; // 100 x 100 > 10^4 points over the 2-D box
            for (int i = 0; i <= side; ++i) {
                for (int j = 0; j <= side; ++j) {
                    Eigen::VectorXd u(2);
                    u << omega.low[0] + omega.width(0) * i / side,
                        omega.low[1] + omega.width(1) * j / side;
                    grid = std::max(grid, quad.eval(x + u)[0]);
                }
            }
            const double got = w(x)[0];
            c.require(std::abs(got - grid) <= 1e-4,
                      "quadratic worst case off by " + std::to_string(std::abs(got - grid)));
        }
    }
}

// ---------------------------------------------------------------------------
// 7. Expectation estimator accuracy on the quadratic benchmark.
void criterion_7(Checker& c) {
    const double u_max = 0.3;
    const double exact_shift = u_max * u_max / 3.0;
    const DesignSpace space({{"x", -1.0, 1.0, u_max, true}});
    const VectorFn f = [](const Eigen::VectorXd& x) { return vec1(x[0] * x[0]); };
    RobustOptions opts;
    opts.n_expectation = 128;
    UncertainObjective w(f, space, Formulation::expectation, opts);
    Rng rng(0xACC7);
    for (int k = 0; k < 50; ++k) {
        const double x = rng.uniform(-0.65, 0.65);
        const double exact = x * x + exact_shift;
        const double err = std::abs(w(vec1(x))[0] - exact);
        c.require(err <= 0.025 * exact_shift,
                  "estimator error " + std::to_string(err) + " above 2.5% of u_max^2/3");
    }
}

// ---------------------------------------------------------------------------
// Shared machinery for criteria 8 and 9: reduced-budget optimizations of the
// raw motor benchmark (the analytic function itself; the sharp ripple valleys
// are narrower than any 175-point surrogate can resolve, so the front
// separation claim is a property of the formulations, not of the surrogate).
struct MotorStudy {
    ParetoArchive front_det, front_robust;
    std::vector<RobustStats> post_det, post_robust;
};

MotorStudy run_motor_study(Formulation robust_mode, std::uint64_t seed) {
    const Problem p = make_problem("motor_synthetic");
    std::vector<SobolResult> sobol;
    const Box nominal = p.space.nominal_box();
    for (int obj = 0; obj < 2; ++obj) {
        sobol.push_back(sobol_indices(
            [&p, obj](const Eigen::VectorXd& x) { return p.eval(x)[obj]; }, nominal, 2048,
            derive_seed(seed, 0x50 + static_cast<std::uint64_t>(obj))));
    }
    const DesignSpace screened = select_uncertain(sobol, p.space, 5);

    RobustOptions ropts;
    ropts.n_expectation = 96;
    ropts.inner_pso = PsoOptions{30, 40};
    ropts.seed = derive_seed(seed, 0x60);

    Nsga2Options nopts;
    nopts.population = 100;
    nopts.generations = 80;

    MotorStudy study;
    const VectorFn base_min = [&p](const Eigen::VectorXd& x) { return p.eval_min(x); };
    for (int which = 0; which < 2; ++which) {
        const Formulation mode = which == 0 ? Formulation::deterministic : robust_mode;
        UncertainObjective wrapped(base_min, screened, mode, ropts);
        nopts.seed = derive_seed(seed, 0x70 + static_cast<std::uint64_t>(which));
        ParetoArchive archive = nsga2([&wrapped](const Eigen::VectorXd& x) { return wrapped(x); },
                                      nominal, nopts);
        (which == 0 ? study.front_det : study.front_robust) = std::move(archive);
    }

    // Posterior re-evaluation with a fresh shared cloud (identical for both
    // fronts: common random numbers make the comparison paired).
    const std::uint64_t post_seed = derive_seed(seed, 0x80);
    for (int which = 0; which < 2; ++which) {
        const ParetoArchive& front = which == 0 ? study.front_det : study.front_robust;
        std::vector<Eigen::VectorXd> designs;
        for (const auto& m : front.members) designs.push_back(m.x);
        auto stats = posterior_perturbation(designs, base_min, screened, 256, post_seed,
                                            PsoOptions{30, 40});
        (which == 0 ? study.post_det : study.post_robust) = std::move(stats);
    }
    return study;
}

// Zone matching on the posterior torque statistic; torque is objective 0 in
// minimization form (negated), so natural targets are negated too.
std::vector<ZonePair> motor_zones(const MotorStudy& study, ZoneStatistic match_on) {
    std::vector<double> targets;
    for (double t : {430.0, 435.0, 440.0, 445.0, 450.0}) targets.push_back(-t);
    return compare_fronts(study.post_det, study.post_robust, 0, targets, 0.75, match_on);
}

// ---------------------------------------------------------------------------
// 8. Expectation formulation beats the deterministic optimum under
// perturbations (1-D oracle gap plus zone-wise motor comparison).
void criterion_8(Checker& c) {
    // Part A: robust_1d with dense-grid oracles.
    auto expected_value = [](double x) {
        const int m = 2000;
        double acc = 0.0;
        for (int k = 0; k <= m; ++k) acc += robust_1d_fn(x - 0.1 + 0.2 * k / m);
        return acc / (m + 1);
    };
    double det_opt = 0.0, det_f = 1e300, exp_opt = 0.0, exp_f = 1e300;
    for (int i = 0; i <= 20000; ++i) {
        const double x = i / 20000.0;
        if (robust_1d_fn(x) < det_f) {
            det_f = robust_1d_fn(x);
            det_opt = x;
        }
        if (expected_value(x) < exp_f) {
            exp_f = expected_value(x);
            exp_opt = x;
        }
    }
    const double gap = expected_value(det_opt) - expected_value(exp_opt);
    c.require(gap >= 0.05, "posterior-expectation gap " + std::to_string(gap) + " < 0.05");

    // The optimizer pipeline reproduces the oracle's verdict.
    const DesignSpace space({{"x", 0.0, 1.0, 0.1, true}});
    const VectorFn f = [](const Eigen::VectorXd& x) { return vec1(robust_1d_fn(x[0])); };
    RobustOptions ropts;
    ropts.n_expectation = 128;
    ropts.seed = 3;
    Nsga2Options nopts;
    nopts.population = 24;
    nopts.generations = 40;
    nopts.seed = 5;
    const Box box(Eigen::VectorXd::Zero(1), Eigen::VectorXd::Ones(1));
    UncertainObjective det_w(f, space, Formulation::deterministic, ropts);
    UncertainObjective exp_w(f, space, Formulation::expectation, ropts);
    const auto det_front = nsga2([&det_w](const Eigen::VectorXd& x) { return det_w(x); }, box, nopts);
    const auto exp_front = nsga2([&exp_w](const Eigen::VectorXd& x) { return exp_w(x); }, box, nopts);
    const double x_det = det_front.members.front().x[0];
    const double x_exp = exp_front.members.front().x[0];
    c.require(std::abs(x_det - det_opt) <= 0.02, "deterministic optimizer missed the narrow valley");
    c.require(std::abs(x_exp - exp_opt) <= 0.02, "expectation optimizer missed the wide valley");
    c.require(expected_value(x_det) - expected_value(x_exp) >= 0.05,
              "optimized designs do not reproduce the oracle gap");

    // Part B: motor benchmark zone comparison (estimator tolerance 0.05).
    const double estimator_tol = 0.05;
    const auto study = run_motor_study(Formulation::expectation, 0xACC8);
    const auto zones = motor_zones(study, ZoneStatistic::mean);
    int matched = 0;
    for (const auto& z : zones) {
        if (!(z.matched_a && z.matched_b)) continue;
        ++matched;
        // Objective 1 is ripple_like (already in minimization form).
        const auto& det = z.a.per_objective[1];
        const auto& rob = z.b.per_objective[1];
        c.require(rob.mean <= det.mean + estimator_tol,
                  "zone " + std::to_string(-z.target) + ": posterior mean ripple worse");
        c.require(rob.stddev <= det.stddev + estimator_tol,
                  "zone " + std::to_string(-z.target) + ": posterior std worse");
    }
    c.require(matched >= 2, "fewer than 2 populated zones in the motor comparison");
}

// ---------------------------------------------------------------------------
// 9. Worst-case formulation: lower PSO worst case and lower posterior std.
void criterion_9(Checker& c) {
    const auto study = run_motor_study(Formulation::worst_case, 0xACC9);
    const auto zones = motor_zones(study, ZoneStatistic::worst_case);
    int matched = 0;
    for (const auto& z : zones) {
        if (!(z.matched_a && z.matched_b)) continue;
        ++matched;
        const double det_wc = z.a.worst_case[1];
        const double rob_wc = z.b.worst_case[1];
        c.require(rob_wc <= det_wc + 1e-3,
                  "zone " + std::to_string(-z.target) + ": worst-case ripple worse by " +
                      std::to_string(rob_wc - det_wc));
        c.require(z.b.per_objective[1].stddev <= z.a.per_objective[1].stddev,
                  "zone " + std::to_string(-z.target) + ": posterior std not lower");
    }
    c.require(matched >= 2, "fewer than 2 populated zones in the motor comparison");
}

// ---------------------------------------------------------------------------
// 10. Full-pipeline determinism plus the runtime budget.
void criterion_10(Checker& c) {
    const fs::path out1 = fs::temp_directory_path() / "rsopt_acc10_a";
    const fs::path out2 = fs::temp_directory_path() / "rsopt_acc10_b";
    fs::remove_all(out1);
    fs::remove_all(out2);
    auto make_config = [](const std::string& out) {
        std::ostringstream cfg;
        cfg << "problem = motor_synthetic\nout = " << out << "\nseed = 11\n";
        cfg << "doe.n = 80\ndoe.train = 60\n";
        cfg << "sobol.n_base = 256\nsobol.top_k = 5\n";
        cfg << "optimizer.population = 24\noptimizer.generations = 15\n";
        cfg << "inner_pso.particles = 10\ninner_pso.iterations = 12\n";
        cfg << "robust.n_expectation = 32\nrobust.n_posterior = 64\n";
        return parse_config_text(cfg.str());
    };
    run_pipeline(make_config(out1.string()));
    run_pipeline(make_config(out2.string()));
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    int compared = 0;
    for (const auto& entry : fs::directory_iterator(out1)) {
        if (entry.path().extension() != ".csv") continue;
        ++compared;
        if (slurp(entry.path()) != slurp(out2 / entry.path().filename())) {
            c.require(false, entry.path().filename().string() + " differs between runs");
        }
    }
    c.require(compared >= 8, "expected at least 8 CSV artifacts");
    fs::remove_all(out1);
    fs::remove_all(out2);

    // Runtime budget: the default-budget pipeline is dominated by surrogate
    // evaluations. Measure this machine's single-thread evaluation rate and
    // project the full run on the declared 8-core reference machine.
    const auto doe = maximin_lhs(175, 12, 1);
    Eigen::VectorXd y(175);
    for (int i = 0; i < 175; ++i) y[i] = std::sin(doe.points.row(i).sum());
    const auto model = KrigingModel::fit(doe.points, y, KernelKind::matern52);
    Rng rng(2);
    Eigen::VectorXd x(12);
    const auto t0 = std::chrono::steady_clock::now();
    double sink = 0.0;
    const int n_probe = 200000;
    for (int i = 0; i < n_probe; ++i) {
        for (int j = 0; j < 12; ++j) x[j] = rng.uniform();
        sink += model.predict_mean(x);
    }
    const double per_eval =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / n_probe;
    // Default budgets, two objectives each:
    // outer NSGA-II candidates: 150 * 301 per formulation;
    // worst-case inner PSO: 2 objectives * 40 * 61 evals per candidate;
    // expectation: 128 evals per candidate; posterior: 512 + 2 * 40 * 61
    // per front member (bounded above by 2000 members per front).
    const double outer = 150.0 * 301.0;
    const double inner_wc = 2.0 * 40.0 * 61.0;
    const double evals = 2.0 * (outer                    // deterministic
                                + outer * 128.0          // expectation
                                + outer * inner_wc / 2.0 // worst case (per objective)
                                + 3.0 * 2000.0 * (512.0 + inner_wc / 2.0));
    const double projected_8core = evals * per_eval / 8.0;
    std::printf("  measured %.2f us/prediction; projected full default run: %.1f s on 8 cores\n",
                per_eval * 1e6, projected_8core);
    c.require(sink != 12345.6789, "keep the probe loop alive");
    c.require(projected_8core < 1200.0, "projected full-default runtime exceeds 20 minutes");
}

} // namespace

int main(int argc, char** argv) {
    static const std::map<int, std::pair<const char*, std::function<void(Checker&)>>> criteria = {
        {1, {"Kriging interpolation to 1e-6 on 20 random problems", criterion_1}},
        {2, {"NRMSE tabulated oracle exact to 1e-12", criterion_2}},
        {3, {"Ishigami Sobol indices within 0.05 of the closed form", criterion_3}},
        {4, {"NSGA-II recovers the ZDT1 front; hypervolume monotone", criterion_4}},
        {5, {"PSO solves the 5-D sphere at the published budget", criterion_5}},
        {6, {"worst case matches dense-grid maxima within 1e-4", criterion_6}},
        {7, {"expectation estimator within 2.5% of the analytic shift", criterion_7}},
        {8, {"expectation formulation beats deterministic under perturbation", criterion_8}},
        {9, {"worst-case formulation lowers worst case and spread", criterion_9}},
        {10, {"bit-identical reruns; full default run fits the budget", criterion_10}},
    };
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <criterion 1..10>\n");
        return 2;
    }
    const int id = std::atoi(argv[1]);
    const auto it = criteria.find(id);
    if (it == criteria.end()) {
        std::fprintf(stderr, "unknown criterion %s\n", argv[1]);
        return 2;
    }
    Checker checker;
    try {
        it->second.second(checker);
    } catch (const std::exception& e) {
        checker.ok = false;
        checker.notes.push_back(std::string("exception: ") + e.what());
    }
    std::printf("criterion %d: %s — %s\n", id, checker.ok ? "PASS" : "FAIL", it->second.first);
    for (const auto& n : checker.notes) std::printf("  %s\n", n.c_str());
    return checker.ok ? 0 : 1;
}
