#include "histavg/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "histavg/bounds.hpp"
#include "histavg/episode.hpp"
#include "histavg/io.hpp"
#include "histavg/rng.hpp"
#include "histavg/schedules.hpp"

namespace histavg {

namespace {

bool known_algo(const std::string& a) { return a == "ftarl" || a == "ftpl" || a == "lsa"; }
bool known_adversary(const std::string& a) {
    return a == "stoc-id" || a == "stoc-het" || a == "cyc" || a == "lower-bound" || a == "csv";
}

int hardware_threads() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace

void ExperimentConfig::validate() const {
    if (!known_algo(algo)) throw std::invalid_argument("unknown algo: " + algo);
    if (!known_adversary(adversary)) throw std::invalid_argument("unknown adversary: " + adversary);
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (T < 1) throw std::invalid_argument("T must be >= 1");
    if (H < 1) throw std::invalid_argument("H must be >= 1");
    if (L < 1) throw std::invalid_argument("L must be >= 1");
    if (runs < 1) throw std::invalid_argument("runs must be >= 1");
    if (M <= 0.0) throw std::invalid_argument("M must be positive");
    if (block < 0) throw std::invalid_argument("block must be >= 0");
    if (theta < 0) throw std::invalid_argument("theta must be >= 0");
    if (theta > 0 && theta < H) throw std::invalid_argument("theta must upper-bound H");
    if (adversary == "lower-bound") {
        if (n != 2) throw std::invalid_argument("lower-bound adversary is two-dimensional; set --n 2");
        if (H % 4 != 0 || static_cast<double>(H) > 0.8 * static_cast<double>(T))
            throw std::invalid_argument("lower-bound adversary needs H a multiple of 4 with H <= 0.8 T");
    }
    if (adversary == "csv" && cost_file.empty())
        throw std::invalid_argument("adversary csv needs --cost-file");
    if (epsilon < 0.0) throw std::invalid_argument("epsilon must be positive when given");
    if (epsilon == 0.0 && theta == 0 && T <= H)
        throw std::invalid_argument("scheduled epsilon needs T > H (or provide --epsilon / --theta)");
}

int ExperimentConfig::effective_block() const {
    if (block > 0) return block;
    return static_cast<int>(std::ceil(std::sqrt(static_cast<double>(T) * static_cast<double>(H))));
}

double ExperimentConfig::effective_epsilon() const {
    if (epsilon > 0.0) return epsilon;
    if (theta > 0) return epsilon_schedule_theta(T, theta, n, M);
    if (algo == "ftpl") return epsilon_schedule(std::max(T, 2), 1, n, M);
    if (algo == "lsa") {
        const int B = effective_block();
        const int blocks = (T + B - 1) / B;
        return epsilon_schedule(std::max(blocks, 2), 1, n, M * static_cast<double>(B));
    }
    return epsilon_schedule(T, H, n, M);
}

double ExperimentConfig::effective_delta() const {
    return delta >= 0.0 ? delta : delta_schedule(T, H, M);
}

std::unique_ptr<Learner> make_learner(const ExperimentConfig& cfg) {
    const double eps = cfg.effective_epsilon();
    if (cfg.algo == "ftarl") return std::make_unique<FtarlLearner>(cfg.n, eps);
    if (cfg.algo == "ftpl") return std::make_unique<FtplLearner>(cfg.n, eps);
    return std::make_unique<LsaLearner>(cfg.n, cfg.effective_block(), eps);
}

CostSequence make_costs(const ExperimentConfig& cfg, std::uint64_t adversary_seed) {
    if (cfg.adversary == "stoc-id") return stoc_id(cfg.n, cfg.T, adversary_seed, cfg.raw_sign);
    if (cfg.adversary == "stoc-het") return stoc_het(cfg.n, cfg.T, adversary_seed, cfg.raw_sign);
    if (cfg.adversary == "cyc") return cyc(cfg.n, cfg.T, cfg.L);
    if (cfg.adversary == "lower-bound") return lower_bound_adversary(cfg.T, cfg.H, adversary_seed);
    return load_cost_csv(cfg.cost_file, cfg.M, cfg.raw_sign);
}

void run_single(const ExperimentConfig& cfg, int run, RunResult& out) {
    const std::uint64_t run_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(run));
    SequenceSource source(make_costs(cfg, lane_seed(run_seed, kLaneAdversary)));
    auto learner = make_learner(cfg);
    const Trajectory traj = run_episode(*learner, source, cfg.H, lane_seed(run_seed, kLaneLearner));

    const int T = traj.rounds();
    const int n = cfg.n;
    out.loss.resize(static_cast<std::size_t>(T));
    out.cum_loss.resize(static_cast<std::size_t>(T));
    out.regret.resize(static_cast<std::size_t>(T));
    std::vector<double> g_running(static_cast<std::size_t>(n), 0.0);
    double cum = 0.0;
    for (int t = 1; t <= T; ++t) {
        cum += traj.losses[static_cast<std::size_t>(t - 1)];
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            g_running[static_cast<std::size_t>(i)] += traj.costs[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(i)];
            best = std::min(best, g_running[static_cast<std::size_t>(i)]);
        }
        out.loss[static_cast<std::size_t>(t - 1)] = traj.losses[static_cast<std::size_t>(t - 1)];
        out.cum_loss[static_cast<std::size_t>(t - 1)] = cum;
        out.regret[static_cast<std::size_t>(t - 1)] = cum - best;
    }
}

namespace {

int resolve_threads(const ExperimentConfig& cfg) {
    if (cfg.threads > 0) return cfg.threads;
    if (const char* env = std::getenv("HISTAVG_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return std::min(v, hardware_threads());
    }
    return hardware_threads();
}

void write_runs_csv(const std::string& path, const std::vector<RunResult>& results) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "run,t,loss,cum_loss,regret\n";
    for (std::size_t r = 0; r < results.size(); ++r) {
        const RunResult& rr = results[r];
        for (std::size_t t = 0; t < rr.loss.size(); ++t) {
            out << r << ',' << (t + 1) << ',' << format_number(rr.loss[t]) << ','
                << format_number(rr.cum_loss[t]) << ',' << format_number(rr.regret[t]) << '\n';
        }
    }
}

void write_aggregate_csv(const std::string& path, const std::vector<double>& mean,
                         const std::vector<double>& se) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "t,mean_regret,stderr_regret\n";
    for (std::size_t t = 0; t < mean.size(); ++t)
        out << (t + 1) << ',' << format_number(mean[t]) << ',' << format_number(se[t]) << '\n';
}

}  // namespace

AggregateReport run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.out_dir.empty()) throw std::invalid_argument("run_experiment: output path required");
    const auto started = std::chrono::steady_clock::now();

    std::vector<RunResult> results(static_cast<std::size_t>(cfg.runs));
    const int workers = std::max(1, std::min(resolve_threads(cfg), cfg.runs));
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::string error_message;
    std::mutex error_mutex;

    auto work = [&]() {
        for (;;) {
            const int r = next.fetch_add(1);
            if (r >= cfg.runs || failed.load()) return;
            try {
                run_single(cfg, r, results[static_cast<std::size_t>(r)]);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                failed.store(true);
                if (error_message.empty()) error_message = e.what();
                return;
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) throw std::runtime_error("run failed: " + error_message);

    const int T = static_cast<int>(results.front().regret.size());
    AggregateReport report;
    report.runs = cfg.runs;
    report.mean_regret.assign(static_cast<std::size_t>(T), 0.0);
    report.stderr_regret.assign(static_cast<std::size_t>(T), 0.0);
    // reduce in run-index order: identical output for every worker count
    for (int t = 0; t < T; ++t) {
        double sum = 0.0;
        for (int r = 0; r < cfg.runs; ++r) sum += results[static_cast<std::size_t>(r)].regret[static_cast<std::size_t>(t)];
        const double mean = sum / cfg.runs;
        double ss = 0.0;
        for (int r = 0; r < cfg.runs; ++r) {
            const double d = results[static_cast<std::size_t>(r)].regret[static_cast<std::size_t>(t)] - mean;
            ss += d * d;
        }
        report.mean_regret[static_cast<std::size_t>(t)] = mean;
        report.stderr_regret[static_cast<std::size_t>(t)] =
            cfg.runs > 1 ? std::sqrt(ss / (cfg.runs - 1)) / std::sqrt(static_cast<double>(cfg.runs)) : 0.0;
    }
    report.final_mean_regret = report.mean_regret.back();
    report.final_stderr = report.stderr_regret.back();

    if (cfg.theta > 0) {
        report.bound_value = corollary43_bound(cfg.T, cfg.theta, cfg.n, cfg.M);
    } else if (cfg.T > cfg.H) {
        report.bound_value = theorem42_bound(cfg.T, cfg.H, cfg.n, cfg.M);
    } else {
        report.bound_value = std::numeric_limits<double>::quiet_NaN();
    }
    report.bound_satisfied = report.final_mean_regret < report.bound_value;

    std::filesystem::create_directories(cfg.out_dir);
    write_runs_csv(cfg.out_dir + "/runs.csv", results);
    write_aggregate_csv(cfg.out_dir + "/aggregate.csv", report.mean_regret, report.stderr_regret);
    if (!cfg.svg_path.empty()) {
        std::vector<double> reference(static_cast<std::size_t>(T),
                                      std::numeric_limits<double>::quiet_NaN());
        for (int t = 1; t <= T; ++t) {
            if (cfg.theta > 0 && t >= 1)
                reference[static_cast<std::size_t>(t - 1)] = corollary43_bound(t, cfg.theta, cfg.n, cfg.M);
            else if (t > cfg.H)
                reference[static_cast<std::size_t>(t - 1)] = theorem42_bound(t, cfg.H, cfg.n, cfg.M);
        }
        write_regret_svg(cfg.svg_path, report.mean_regret, report.stderr_regret, reference,
                         "scheduled-rate bound (reconstruction)");
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    std::cout << "algo=" << cfg.algo << " adversary=" << cfg.adversary << " n=" << cfg.n
              << " T=" << cfg.T << " H=" << cfg.H << " runs=" << cfg.runs << " seed=" << cfg.seed
              << "\n"
              << "final mean regret " << format_number(report.final_mean_regret) << " +/- "
              << format_number(report.final_stderr) << " (stderr)\n";
    if (std::isfinite(report.bound_value))
        std::cout << "bound " << format_number(report.bound_value) << " -> "
                  << (report.bound_satisfied ? "satisfied" : "EXCEEDED") << "\n";
    std::cout << "wrote " << cfg.out_dir << "/runs.csv, " << cfg.out_dir << "/aggregate.csv";
    if (!cfg.svg_path.empty()) std::cout << ", " << cfg.svg_path;
    std::cout << "  (" << format_number(report.wall_seconds) << " s, " << workers << " workers)\n";
    return report;
}

double crosscheck_aggregate_files(const std::string& out_dir) {
    const CsvTable runs = read_csv(out_dir + "/runs.csv");
    const CsvTable agg = read_csv(out_dir + "/aggregate.csv");
    if (runs.header != std::vector<std::string>{"run", "t", "loss", "cum_loss", "regret"})
        throw std::runtime_error("unexpected runs.csv header");
    if (agg.header != std::vector<std::string>{"t", "mean_regret", "stderr_regret"})
        throw std::runtime_error("unexpected aggregate.csv header");

    const std::size_t T = agg.rows.size();
    std::vector<double> sum(T, 0.0);
    std::vector<int> count(T, 0);
    for (const auto& row : runs.rows) {
        const auto t = static_cast<std::size_t>(row[1]);
        if (t < 1 || t > T) throw std::runtime_error("runs.csv round out of range");
        sum[t - 1] += row[4];
        ++count[t - 1];
    }
    double worst = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
        if (count[t] == 0) throw std::runtime_error("aggregate round missing from runs.csv");
        worst = std::max(worst, std::abs(sum[t] / count[t] - agg.rows[t][1]));
    }
    return worst;
}

}  // namespace histavg
