#ifndef RSOPT_PIPELINE_HPP
#define RSOPT_PIPELINE_HPP

#include <map>
#include <string>
#include <vector>

#include "rsopt/config.hpp"
#include "rsopt/problems.hpp"

namespace rsopt {

/// The full workflow: DOE -> split -> surrogate fits -> NRMSE -> Sobol
/// screening -> optimizations -> posterior analysis -> figures. Stages are
/// also callable one by one (each resumes from the previous stage's
/// artifacts on disk).
class Pipeline {
public:
    explicit Pipeline(PipelineConfig config);

    void stage_doe();
    void stage_fit();
    void stage_sensitivity();
    void stage_optimize();
    void stage_analyze();
    void stage_report();

    /// Runs every stage in order and writes the manifest. Throws
    /// std::runtime_error naming the failing stage; artifacts written by
    /// completed stages persist.
    void run();

    static const std::vector<std::string>& stage_names();
    /// Runs `first_stage` and everything after it.
    void run_from(const std::string& first_stage);

    const PipelineConfig& config() const { return config_; }
    const Problem& problem() const { return problem_; }
    std::string artifact_path(const std::string& name) const;

private:
    /// The problem's design space (with config overrides) mapped to
    /// normalized [0,1] coordinates; all optimization runs there.
    DesignSpace unit_space(const DesignSpace& native) const;
    void record_stage(const std::string& name, double seconds,
                      const std::vector<std::string>& artifacts);
    void write_manifest_entry(const std::string& key, const std::string& value);

    PipelineConfig config_;
    Problem problem_;
    DesignSpace native_space_; // problem space with config variable overrides
};

/// Convenience wrapper: parse nothing, just run everything.
void run_pipeline(const PipelineConfig& config);

} // namespace rsopt

#endif
