#include <CLI11.hpp>
#include <iostream>

#include "rsopt/config.hpp"
#include "rsopt/pipeline.hpp"
#include "rsopt/problems.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool out_set = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "pipeline config file (key = value lines)");
    cmd->add_option("--out", args.out_dir, "output directory (overrides the config)")
        ->each([&args](const std::string&) { args.out_set = true; });
    cmd->add_option("--seed", args.seed, "master seed (overrides the config)")
        ->each([&args](const std::string&) { args.seed_set = true; });
}

rsopt::PipelineConfig load_config(const CommonArgs& args) {
    rsopt::PipelineConfig cfg;
    if (!args.config_path.empty()) cfg = rsopt::parse_config_file(args.config_path);
    if (args.out_set) cfg.out_dir = args.out_dir;
    if (args.seed_set) cfg.seed = args.seed;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Surrogate-assisted robust multi-objective design optimization"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string resume_stage;

    CLI::App* run = app.add_subcommand("run", "run every stage in order");
    add_common(run, args);
    run->add_option("--stage", resume_stage,
                    "resume from this stage (doe|fit|sensitivity|optimize|analyze|report)");

    // One subcommand per stage, for stepwise runs over a shared output dir.
    std::vector<std::pair<CLI::App*, std::string>> stage_cmds;
    for (const auto& name : rsopt::Pipeline::stage_names()) {
        CLI::App* cmd = app.add_subcommand(name, "run only the " + name + " stage");
        add_common(cmd, args);
        stage_cmds.emplace_back(cmd, name);
    }

    CLI::App* problems = app.add_subcommand("problems", "list the benchmark problems");

    CLI11_PARSE(app, argc, argv);

    try {
        if (problems->parsed()) {
            for (const auto& name : rsopt::problem_names()) {
                const rsopt::Problem p = rsopt::make_problem(name);
                std::cout << name << "  (d=" << p.dim << ", objectives=" << p.n_objectives
                          << ")\n";
            }
            return 0;
        }

        rsopt::PipelineConfig cfg;
        try {
            cfg = load_config(args);
        } catch (const std::exception& e) {
            std::cerr << "config error: " << e.what() << '\n';
            return 1;
        }

        rsopt::Pipeline pipeline = [&cfg]() {
            try {
                return rsopt::Pipeline(cfg);
            } catch (const std::invalid_argument& e) {
                std::cerr << "config error: " << e.what() << '\n';
                std::exit(1);
            }
        }();

        if (run->parsed()) {
            if (resume_stage.empty()) {
                pipeline.run();
            } else {
                pipeline.run_from(resume_stage);
            }
            std::cout << "done: " << pipeline.artifact_path("manifest.json") << '\n';
            return 0;
        }
        for (const auto& [cmd, name] : stage_cmds) {
            if (!cmd->parsed()) continue;
            try {
                if (name == "doe") pipeline.stage_doe();
                else if (name == "fit") pipeline.stage_fit();
                else if (name == "sensitivity") pipeline.stage_sensitivity();
                else if (name == "optimize") pipeline.stage_optimize();
                else if (name == "analyze") pipeline.stage_analyze();
                else pipeline.stage_report();
            } catch (const std::exception& e) {
                std::cerr << "stage " << name << " failed: " << e.what() << '\n';
                return 2;
            }
            std::cout << "stage " << name << " done\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    return 0;
}
