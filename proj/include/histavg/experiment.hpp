#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "histavg/adversaries.hpp"
#include "histavg/learners.hpp"

namespace histavg {

struct ExperimentConfig {
    std::string algo = "ftarl";          // ftarl | ftpl | lsa
    std::string adversary = "stoc-het";  // stoc-id | stoc-het | cyc | lower-bound | csv
    int n = 2;
    int T = 10000;
    int H = 100;
    int L = 50;
    int runs = 100;
    int block = 0;          // 0: ceil(sqrt(T*H))
    double epsilon = 0.0;   // 0: scheduled
    double delta = -1.0;    // <0: scheduled M*H/T
    int theta = 0;          // >0: use the horizon-agnostic schedule and bound
    double M = 1.0;
    std::uint64_t seed = 42;
    bool raw_sign = false;
    std::string out_dir;
    std::string cost_file;  // adversary == csv
    std::string svg_path;   // empty: no plot
    int threads = 0;        // 0: HISTAVG_THREADS env, else hardware

    void validate() const;  // throws std::invalid_argument
    int effective_block() const;
    double effective_epsilon() const;  // for the configured algo
    double effective_delta() const;
};

struct AggregateReport {
    int runs = 0;
    std::vector<double> mean_regret;    // per round, averaged over runs
    std::vector<double> stderr_regret;  // sample standard error per round
    double final_mean_regret = 0.0;
    double final_stderr = 0.0;
    double bound_value = 0.0;
    bool bound_satisfied = false;
    double wall_seconds = 0.0;
};

// Per-run regret curves for S independent episodes with derived seeds.
// Regret at round t is the cumulative loss minus min_i G^t_i.
struct RunResult {
    std::vector<double> loss;      // per round
    std::vector<double> cum_loss;  // prefix sums
    std::vector<double> regret;    // prefix regret
};

std::unique_ptr<Learner> make_learner(const ExperimentConfig& cfg);
CostSequence make_costs(const ExperimentConfig& cfg, std::uint64_t adversary_seed);

// Runs one episode for run index `run` and fills `out`.
void run_single(const ExperimentConfig& cfg, int run, RunResult& out);

// Full experiment: schedules runs over a worker pool, reduces in run order,
// writes <out>/runs.csv and <out>/aggregate.csv (and an SVG when requested),
// prints a summary to stdout.
AggregateReport run_experiment(const ExperimentConfig& cfg);

// Recomputes the aggregate from the written per-run CSV and compares against
// the aggregate CSV. Returns the maximum absolute mismatch.
double crosscheck_aggregate_files(const std::string& out_dir);

struct VerifyOptions {
    std::string suite;  // empty: all suites
    std::uint64_t seed = 42;
};

// Batch-runs every verifier suite; prints one line per check with timing and
// returns the number of failed suites. Suites: lemma21, thm31, thm32,
// remark41, identities, claim-a, leader-gap, claim41.
int verify_all(const VerifyOptions& opts);

// Names of the verify suites, in execution order.
std::vector<std::string> verify_suite_names();

}  // namespace histavg
