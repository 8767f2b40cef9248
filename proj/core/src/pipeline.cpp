#include "rsopt/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <map>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "rsopt/csv.hpp"
#include "rsopt/moo.hpp"
#include "rsopt/rng.hpp"
#include "rsopt/robust.hpp"
#include "rsopt/sampling.hpp"
#include "rsopt/sensitivity.hpp"
#include "rsopt/surrogate.hpp"
#include "rsopt/svg.hpp"

namespace rsopt {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Stage seed streams off the master seed; each stage (and each objective /
// formulation within a stage) draws from its own stream so that changing one
// stage's budget cannot shift another stage's randomness.
constexpr std::uint64_t kStreamDoe = 0xD0E;
constexpr std::uint64_t kStreamSplit = 0x511;
constexpr std::uint64_t kStreamFit = 0xF17'0000;
constexpr std::uint64_t kStreamSobol = 0x50B0'0000;
constexpr std::uint64_t kStreamOptimize = 0x0971'0000;
constexpr std::uint64_t kStreamPosterior = 0x9057'0000;

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

json read_json_or(const std::string& path, json fallback) {
    std::ifstream in(path);
    if (!in) return fallback;
    json j;
    in >> j;
    return j;
}

std::string model_artifact(const std::string& objective) { return "model_" + objective + ".json"; }

/// Posterior stats are computed in minimization form; reports use natural
/// values. For a maximized objective (sense -1) negation reverses the order
/// statistics: the minimum becomes the maximum, q1 becomes q3, and so on.
SampleStats to_natural(const SampleStats& s, double sense) {
    if (sense >= 0) return s;
    SampleStats n;
    n.min = -s.max;
    n.q1 = -s.q3;
    n.q2 = -s.q2;
    n.q3 = -s.q1;
    n.max = -s.min;
    n.mean = -s.mean;
    n.stddev = s.stddev;
    return n;
}

RobustStats stats_to_natural(const RobustStats& s, const Eigen::VectorXd& sense) {
    RobustStats n = s;
    for (std::size_t j = 0; j < s.per_objective.size(); ++j) {
        n.per_objective[j] = to_natural(s.per_objective[j], sense[static_cast<Eigen::Index>(j)]);
        n.worst_case[static_cast<Eigen::Index>(j)] =
            sense[static_cast<Eigen::Index>(j)] * s.worst_case[static_cast<Eigen::Index>(j)];
    }
    return n;
}

std::vector<std::string> posterior_header(const std::vector<std::string>& var_names,
                                          const std::vector<std::string>& objective_names) {
    std::vector<std::string> h = var_names;
    for (const auto& o : objective_names) {
        for (const char* stat : {"min", "q1", "median", "q3", "max", "mean", "std", "worst"}) {
            h.push_back(o + "_" + stat);
        }
    }
    return h;
}

} // namespace

Pipeline::Pipeline(PipelineConfig config) : config_(std::move(config)) {
    const auto bad = config_.validate();
    if (!bad.empty()) {
        std::string msg = "invalid config:";
        for (const auto& s : bad) msg += "\n  " + s;
        throw std::invalid_argument(msg);
    }
    problem_ = make_problem(config_.problem);
    native_space_ = config_.variable_overrides.empty()
                        ? problem_.space
                        : DesignSpace(config_.variable_overrides);
    native_space_.require_valid();
    if (native_space_.size() != problem_.dim) {
        throw std::invalid_argument("variable overrides must keep the problem dimension (" +
                                    std::to_string(problem_.dim) + ")");
    }
    fs::create_directories(config_.out_dir);
}

std::string Pipeline::artifact_path(const std::string& name) const {
    return (fs::path(config_.out_dir) / name).string();
}

DesignSpace Pipeline::unit_space(const DesignSpace& native) const {
    std::vector<Variable> vars;
    const Eigen::VectorXd tol = native.normalized_tolerances();
    for (Eigen::Index j = 0; j < native.size(); ++j) {
        vars.push_back({native[j].name, 0.0, 1.0, tol[j], native[j].uncertain});
    }
    return DesignSpace(std::move(vars));
}

void Pipeline::record_stage(const std::string& name, double seconds,
                            const std::vector<std::string>& artifacts) {
    const std::string path = artifact_path("manifest.json");
    json m = read_json_or(path, json::object());
    m["problem"] = config_.problem;
    m["seed"] = config_.seed;
    m["config"] = config_to_text(config_);
    m["stages"][name]["seconds"] = seconds;
    m["stages"][name]["artifacts"] = artifacts;
    write_text(path, m.dump(2) + "\n");
}

void Pipeline::write_manifest_entry(const std::string& key, const std::string& value) {
    const std::string path = artifact_path("manifest.json");
    json m = read_json_or(path, json::object());
    m[key] = value;
    write_text(path, m.dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// doe: maximin LHS over the nominal box, evaluated on the true function,
// then the deterministic train/test split.
void Pipeline::stage_doe() {
    const auto start = std::chrono::steady_clock::now();
    const int d = problem_.dim;

    SampleMatrix doe = maximin_lhs(config_.doe_n, d, derive_seed(config_.seed, kStreamDoe),
                                   config_.doe_iterations, config_.doe_jitter);
    // Store native coordinates and natural objective values.
    for (Eigen::Index i = 0; i < doe.rows(); ++i) {
        doe.points.row(i) = native_space_.denormalize(doe.points.row(i).transpose()).transpose();
    }
    doe.values.resize(doe.rows(), problem_.n_objectives);
    for (Eigen::Index i = 0; i < doe.rows(); ++i) {
        doe.values.row(i) = problem_.eval(doe.points.row(i).transpose()).transpose();
    }

    const auto [train, test] =
        train_test_split(doe, config_.doe_train, derive_seed(config_.seed, kStreamSplit));

    const auto vars = native_space_.names();
    write_sample_csv(artifact_path("doe.csv"), doe, vars, problem_.objective_names);
    write_sample_csv(artifact_path("train.csv"), train, vars, problem_.objective_names);
    write_sample_csv(artifact_path("test.csv"), test, vars, problem_.objective_names);

    record_stage("doe", elapsed_seconds(start), {"doe.csv", "train.csv", "test.csv"});
}

// ---------------------------------------------------------------------------
// fit: one Kriging model per objective on normalized coordinates, validated
// on the held-out test set.
void Pipeline::stage_fit() {
    const auto start = std::chrono::steady_clock::now();
    const int d = problem_.dim;
    const SampleMatrix train = read_sample_csv(artifact_path("train.csv"), d);
    const SampleMatrix test = read_sample_csv(artifact_path("test.csv"), d);
    if (!train.has_values() || !test.has_values()) {
        throw std::runtime_error("train/test artifacts carry no objective values; rerun doe");
    }

    Eigen::MatrixXd x_train(train.rows(), d), x_test(test.rows(), d);
    for (Eigen::Index i = 0; i < train.rows(); ++i) {
        x_train.row(i) = native_space_.normalize(train.points.row(i).transpose()).transpose();
    }
    for (Eigen::Index i = 0; i < test.rows(); ++i) {
        x_test.row(i) = native_space_.normalize(test.points.row(i).transpose()).transpose();
    }

    CsvWriter nrmse_csv(artifact_path("nrmse.csv"));
    nrmse_csv.row(std::vector<std::string>{"objective", "kernel", "nrmse_percent"});
    std::vector<std::string> artifacts = {"nrmse.csv"};
    json nrmse_report = json::object();
    for (int j = 0; j < problem_.n_objectives; ++j) {
        const std::string& name = problem_.objective_names[static_cast<std::size_t>(j)];
        KernelKind kind = problem_.kernels[static_cast<std::size_t>(j)];
        if (auto it = config_.kernels.find(name); it != config_.kernels.end()) {
            kind = kernel_from_name(it->second);
        }
        FitOptions opts;
        opts.seed = derive_seed(config_.seed, kStreamFit + static_cast<std::uint64_t>(j));
        const KrigingModel model = KrigingModel::fit(x_train, train.values.col(j), kind, opts);
        model.save(artifact_path(model_artifact(name)));
        artifacts.push_back(model_artifact(name));

        Eigen::VectorXd y_pred(test.rows());
        for (Eigen::Index i = 0; i < test.rows(); ++i) {
            y_pred[i] = model.predict_mean(x_test.row(i).transpose());
        }
        const double err = nrmse(test.values.col(j), y_pred);
        nrmse_csv.row(std::vector<std::string>{name, kernel_name(kind), format_double(err)});
        nrmse_report[name] = err;
    }

    const std::string path = artifact_path("manifest.json");
    json m = read_json_or(path, json::object());
    m["nrmse"] = nrmse_report;
    write_text(path, m.dump(2) + "\n");
    record_stage("fit", elapsed_seconds(start), artifacts);
}

// ---------------------------------------------------------------------------
// sensitivity: Sobol indices of each surrogate over the (normalized) nominal
// box, then the top-k screening that decides which tolerances matter.
void Pipeline::stage_sensitivity() {
    const auto start = std::chrono::steady_clock::now();
    const auto vars = native_space_.names();

    std::vector<SobolResult> results;
    std::vector<std::string> artifacts;
    const Box unit_box = unit_space(native_space_).nominal_box();
    for (int j = 0; j < problem_.n_objectives; ++j) {
        const std::string& name = problem_.objective_names[static_cast<std::size_t>(j)];
        const KrigingModel model = KrigingModel::load(artifact_path(model_artifact(name)));
        const ScalarFn f = [&model](const Eigen::VectorXd& u) { return model.predict_mean(u); };
        results.push_back(sobol_indices(
            f, unit_box, config_.sobol_n_base,
            derive_seed(config_.seed, kStreamSobol + static_cast<std::uint64_t>(j))));
        write_text(artifact_path("sobol_" + name + ".svg"),
                   emit_sobol_svg(results.back(), vars, name));
        artifacts.push_back("sobol_" + name + ".svg");
    }

    CsvWriter sobol_csv(artifact_path("sobol.csv"));
    std::vector<std::string> header = {"variable"};
    for (const auto& o : problem_.objective_names) {
        header.push_back("first_" + o);
        header.push_back("total_" + o);
    }
    sobol_csv.row(header);
    for (Eigen::Index v = 0; v < native_space_.size(); ++v) {
        std::vector<std::string> row = {vars[static_cast<std::size_t>(v)]};
        for (const auto& r : results) {
            row.push_back(format_double(r.first_order[v]));
            row.push_back(format_double(r.total[v]));
        }
        sobol_csv.row(row);
    }
    artifacts.insert(artifacts.begin(), "sobol.csv");

    DesignSpace screened = select_uncertain(results, native_space_, config_.sobol_top_k);
    if (!config_.force_uncertain.empty()) {
        std::vector<bool> flags;
        for (Eigen::Index v = 0; v < screened.size(); ++v) flags.push_back(screened[v].uncertain);
        for (const auto& name : config_.force_uncertain) {
            const Eigen::Index v = screened.find(name);
            if (v < 0) throw std::runtime_error("force_uncertain: unknown variable " + name);
            flags[static_cast<std::size_t>(v)] = true;
        }
        screened = screened.with_uncertain(flags);
    }

    json sj;
    sj["variables"] = json::array();
    for (Eigen::Index v = 0; v < screened.size(); ++v) {
        const Variable& var = screened[v];
        sj["variables"].push_back({{"name", var.name},
                                   {"lower", var.lower},
                                   {"upper", var.upper},
                                   {"tolerance", var.tolerance},
                                   {"uncertain", var.uncertain}});
    }
    write_text(artifact_path("space.json"), sj.dump(2) + "\n");
    artifacts.push_back("space.json");

    record_stage("sensitivity", elapsed_seconds(start), artifacts);
}

namespace {

DesignSpace load_space_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path + "; rerun sensitivity");
    json j;
    in >> j;
    std::vector<Variable> vars;
    for (const auto& v : j.at("variables")) {
        vars.push_back({v.at("name").get<std::string>(), v.at("lower").get<double>(),
                        v.at("upper").get<double>(), v.at("tolerance").get<double>(),
                        v.at("uncertain").get<bool>()});
    }
    return DesignSpace(std::move(vars));
}

} // namespace

// ---------------------------------------------------------------------------
// optimize: NSGA-II on the surrogates, one run per formulation. The search
// lives in normalized coordinates; archives are written in native units and
// natural objective values.
void Pipeline::stage_optimize() {
    const auto start = std::chrono::steady_clock::now();
    const DesignSpace screened = load_space_json(artifact_path("space.json"));
    const DesignSpace unit = unit_space(screened);

    std::vector<KrigingModel> models;
    for (const auto& name : problem_.objective_names) {
        models.push_back(KrigingModel::load(artifact_path(model_artifact(name))));
    }
    const Eigen::VectorXd sense = problem_.sense;
    const VectorFn surrogate_min = [&models, &sense](const Eigen::VectorXd& u) {
        Eigen::VectorXd f(static_cast<Eigen::Index>(models.size()));
        for (std::size_t j = 0; j < models.size(); ++j) {
            f[static_cast<Eigen::Index>(j)] =
                sense[static_cast<Eigen::Index>(j)] * models[j].predict_mean(u);
        }
        return f;
    };

    const Box search_box = config_.outer_extended ? unit.extended_space() : unit.nominal_box();
    std::vector<std::string> artifacts;
    for (const Formulation form : config_.formulations) {
        const std::uint64_t run_seed =
            derive_seed(config_.seed, kStreamOptimize + static_cast<std::uint64_t>(form));
        RobustOptions ropts;
        ropts.n_expectation = config_.n_expectation;
        ropts.n_posterior = config_.n_posterior;
        ropts.inner_pso = PsoOptions{config_.inner_pso_particles, config_.inner_pso_iterations};
        ropts.seed = run_seed;
        const UncertainObjective wrapped(surrogate_min, unit, form, ropts);

        Nsga2Options nopts;
        nopts.population = config_.optimizer_population;
        nopts.generations = config_.optimizer_generations;
        nopts.seed = run_seed;
        ParetoArchive archive =
            nsga2([&wrapped](const Eigen::VectorXd& u) { return wrapped(u); }, search_box, nopts);
        archive.formulation = formulation_name(form);
        archive.objective_names = problem_.objective_names;

        const std::string csv_name = "front_" + formulation_name(form) + ".csv";
        SampleMatrix out;
        out.points.resize(static_cast<Eigen::Index>(archive.members.size()), screened.size());
        out.values.resize(static_cast<Eigen::Index>(archive.members.size()),
                          problem_.n_objectives);
        for (std::size_t i = 0; i < archive.members.size(); ++i) {
            const auto& m = archive.members[i];
            out.points.row(static_cast<Eigen::Index>(i)) =
                screened.denormalize(m.x).transpose();
            out.values.row(static_cast<Eigen::Index>(i)) =
                sense.cwiseProduct(m.objectives).transpose();
        }
        write_sample_csv(artifact_path(csv_name), out, screened.names(),
                         problem_.objective_names);
        artifacts.push_back(csv_name);
    }

    record_stage("optimize", elapsed_seconds(start), artifacts);
}

// ---------------------------------------------------------------------------
// analyze: posterior tolerance re-evaluation of every front (shared
// perturbation cloud, fresh seed) plus the paired zone comparisons against
// the deterministic front.
void Pipeline::stage_analyze() {
    const auto start = std::chrono::steady_clock::now();
    const DesignSpace screened = load_space_json(artifact_path("space.json"));
    const DesignSpace unit = unit_space(screened);
    const auto vars = screened.names();

    std::vector<KrigingModel> models;
    for (const auto& name : problem_.objective_names) {
        models.push_back(KrigingModel::load(artifact_path(model_artifact(name))));
    }
    const Eigen::VectorXd sense = problem_.sense;
    const VectorFn surrogate_min = [&models, &sense](const Eigen::VectorXd& u) {
        Eigen::VectorXd f(static_cast<Eigen::Index>(models.size()));
        for (std::size_t j = 0; j < models.size(); ++j) {
            f[static_cast<Eigen::Index>(j)] =
                sense[static_cast<Eigen::Index>(j)] * models[j].predict_mean(u);
        }
        return f;
    };

    const PsoOptions inner{config_.inner_pso_particles, config_.inner_pso_iterations};
    std::vector<std::string> artifacts;
    std::map<Formulation, std::vector<RobustStats>> posteriors;
    for (const Formulation form : config_.formulations) {
        const std::string front_name = "front_" + formulation_name(form) + ".csv";
        const SampleMatrix front =
            read_sample_csv(artifact_path(front_name), static_cast<int>(screened.size()));

        std::vector<Eigen::VectorXd> designs;
        for (Eigen::Index i = 0; i < front.rows(); ++i) {
            designs.push_back(screened.normalize(front.points.row(i).transpose()));
        }
        const std::uint64_t seed =
            derive_seed(config_.seed, kStreamPosterior + static_cast<std::uint64_t>(form));
        std::vector<RobustStats> stats = posterior_perturbation(
            designs, surrogate_min, unit, config_.n_posterior, seed, inner);
        for (auto& s : stats) s = stats_to_natural(s, sense);

        const std::string csv_name = "posterior_" + formulation_name(form) + ".csv";
        CsvWriter csv(artifact_path(csv_name));
        csv.row(posterior_header(vars, problem_.objective_names));
        for (std::size_t i = 0; i < stats.size(); ++i) {
            std::vector<double> row;
            const Eigen::VectorXd native = front.points.row(static_cast<Eigen::Index>(i));
            for (Eigen::Index v = 0; v < native.size(); ++v) row.push_back(native[v]);
            for (int j = 0; j < problem_.n_objectives; ++j) {
                const SampleStats& s = stats[i].per_objective[static_cast<std::size_t>(j)];
                for (double v : {s.min, s.q1, s.q2, s.q3, s.max, s.mean, s.stddev,
                                 stats[i].worst_case[j]}) {
                    row.push_back(v);
                }
            }
            csv.row(row);
        }
        artifacts.push_back(csv_name);
        posteriors[form] = std::move(stats);
    }

    // Zone comparisons: each robust formulation against the deterministic
    // baseline, in natural values of the zone objective.
    if (posteriors.count(Formulation::deterministic)) {
        for (const Formulation form : config_.formulations) {
            if (form == Formulation::deterministic) continue;
            const auto zones = compare_fronts(
                posteriors[Formulation::deterministic], posteriors[form],
                config_.zone_objective, config_.zone_targets, config_.zone_tol,
                form == Formulation::worst_case ? ZoneStatistic::worst_case
                                                : ZoneStatistic::mean);
            const std::string csv_name = "zones_" + formulation_name(form) + ".csv";
            CsvWriter csv(artifact_path(csv_name));
            std::vector<std::string> header = {"target", "matched"};
            for (const auto& o : problem_.objective_names) {
                for (const char* stat : {"delta_mean_", "delta_std_", "delta_q3_",
                                         "delta_worst_"}) {
                    header.push_back(stat + o);
                }
            }
            csv.row(header);
            for (const auto& z : zones) {
                std::vector<std::string> row = {format_double(z.target),
                                                (z.matched_a && z.matched_b) ? "1" : "0"};
                for (int j = 0; j < problem_.n_objectives; ++j) {
                    const bool ok = z.matched_a && z.matched_b;
                    const auto sj = static_cast<std::size_t>(j);
                    row.push_back(ok ? format_double(z.delta_mean[sj]) : "");
                    row.push_back(ok ? format_double(z.delta_std[sj]) : "");
                    row.push_back(ok ? format_double(z.delta_q3[sj]) : "");
                    row.push_back(ok ? format_double(z.delta_worst_case[sj]) : "");
                }
                csv.row(row);
            }
            artifacts.push_back(csv_name);
        }
    }

    record_stage("analyze", elapsed_seconds(start), artifacts);
}

namespace {

std::vector<RobustStats> load_posterior_csv(const std::string& path, int d, int m) {
    const CsvTable table = read_csv(path);
    std::vector<RobustStats> out;
    for (const auto& row : table.rows) {
        if (static_cast<int>(row.size()) != d + 8 * m) {
            throw std::runtime_error("unexpected column count in " + path);
        }
        RobustStats s;
        s.x.resize(d);
        for (int v = 0; v < d; ++v) s.x[v] = std::stod(row[static_cast<std::size_t>(v)]);
        s.worst_case.resize(m);
        for (int j = 0; j < m; ++j) {
            const auto base = static_cast<std::size_t>(d + 8 * j);
            SampleStats ps;
            ps.min = std::stod(row[base + 0]);
            ps.q1 = std::stod(row[base + 1]);
            ps.q2 = std::stod(row[base + 2]);
            ps.q3 = std::stod(row[base + 3]);
            ps.max = std::stod(row[base + 4]);
            ps.mean = std::stod(row[base + 5]);
            ps.stddev = std::stod(row[base + 6]);
            s.per_objective.push_back(ps);
            s.worst_case[j] = std::stod(row[base + 7]);
        }
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// report: comparison figures from the persisted fronts and posteriors.
void Pipeline::stage_report() {
    const auto start = std::chrono::steady_clock::now();
    const DesignSpace screened = load_space_json(artifact_path("space.json"));
    const int d = static_cast<int>(screened.size());
    const int m = problem_.n_objectives;

    std::vector<ParetoArchive> archives;
    for (const Formulation form : config_.formulations) {
        const SampleMatrix front =
            read_sample_csv(artifact_path("front_" + formulation_name(form) + ".csv"), d);
        ParetoArchive a;
        a.formulation = formulation_name(form);
        a.objective_names = problem_.objective_names;
        for (Eigen::Index i = 0; i < front.rows(); ++i) {
            Individual ind;
            ind.x = front.points.row(i).transpose();
            ind.objectives = front.values.row(i).transpose();
            a.members.push_back(std::move(ind));
        }
        archives.push_back(std::move(a));
    }
    std::vector<std::string> artifacts;
    if (m >= 2) { // the scatter needs two axes; single-objective runs skip it
        write_text(artifact_path("fronts.svg"),
                   emit_front_svg(archives, {}, config_.zone_targets, config_.zone_tol));
        artifacts.push_back("fronts.svg");
    }

    const bool have_det =
        std::count(config_.formulations.begin(), config_.formulations.end(),
                   Formulation::deterministic) > 0;
    if (have_det) {
        const auto det = load_posterior_csv(
            artifact_path("posterior_" + formulation_name(Formulation::deterministic) + ".csv"),
            d, m);
        for (const Formulation form : config_.formulations) {
            if (form == Formulation::deterministic) continue;
            const auto other = load_posterior_csv(
                artifact_path("posterior_" + formulation_name(form) + ".csv"), d, m);
            const auto zones = compare_fronts(
                det, other, config_.zone_objective, config_.zone_targets, config_.zone_tol,
                form == Formulation::worst_case ? ZoneStatistic::worst_case
                                                : ZoneStatistic::mean);
            bool any = false;
            for (const auto& z : zones) any = any || (z.matched_a && z.matched_b);
            if (!any) continue;
            const std::string svg_name = "boxplots_" + formulation_name(form) + ".svg";
            write_text(artifact_path(svg_name),
                       emit_boxplot_svg(
                           zones, config_.zone_objective,
                           formulation_name(Formulation::deterministic), formulation_name(form),
                           problem_.objective_names[static_cast<std::size_t>(
                               config_.zone_objective)]));
            artifacts.push_back(svg_name);
        }
    }

    record_stage("report", elapsed_seconds(start), artifacts);
}

const std::vector<std::string>& Pipeline::stage_names() {
    static const std::vector<std::string> names = {"doe",      "fit",     "sensitivity",
                                                   "optimize", "analyze", "report"};
    return names;
}

void Pipeline::run_from(const std::string& first_stage) {
    const auto& names = stage_names();
    auto it = std::find(names.begin(), names.end(), first_stage);
    if (it == names.end()) {
        throw std::invalid_argument("unknown stage: " + first_stage);
    }
    for (; it != names.end(); ++it) {
        try {
            if (*it == "doe") stage_doe();
            else if (*it == "fit") stage_fit();
            else if (*it == "sensitivity") stage_sensitivity();
            else if (*it == "optimize") stage_optimize();
            else if (*it == "analyze") stage_analyze();
            else stage_report();
        } catch (const std::exception& e) {
            throw std::runtime_error("stage " + *it + " failed: " + e.what());
        }
    }
}

void Pipeline::run() { run_from("doe"); }

void run_pipeline(const PipelineConfig& config) { Pipeline(config).run(); }

} // namespace rsopt
