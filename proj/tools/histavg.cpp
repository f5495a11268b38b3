// Command-line runner: `run` plays Monte Carlo experiments and writes CSV
// (optionally SVG) output; `verify` batch-runs the bound and identity
// checkers. A flat key=value config file can seed any flag; explicit flags
// win.

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>

#include "histavg/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"online learning with history-averaged decisions"};
    app.require_subcommand(1);

    histavg::ExperimentConfig cfg;
    auto* run = app.add_subcommand("run", "run a multi-seed experiment and write CSVs");
    run->set_config("--config", "", "flat key=value config file (flags override it)");
    run->add_option("--algo", cfg.algo, "learner: ftarl | ftpl | lsa")->capture_default_str();
    run->add_option("--adversary", cfg.adversary,
                    "cost generator: stoc-id | stoc-het | cyc | lower-bound | csv")
        ->capture_default_str();
    run->add_option("--n", cfg.n, "number of actions")->capture_default_str();
    run->add_option("--T", cfg.T, "rounds per episode")->capture_default_str();
    run->add_option("--H", cfg.H, "history horizon of the averaging dynamics")->capture_default_str();
    run->add_option("--L", cfg.L, "hold length of the cyclic generator")->capture_default_str();
    run->add_option("--runs", cfg.runs, "independent runs")->capture_default_str();
    run->add_option("--block", cfg.block, "lsa block length (0: ceil(sqrt(T*H)))")->capture_default_str();
    run->add_option("--epsilon", cfg.epsilon, "perturbation rate (0: scheduled)")->capture_default_str();
    run->add_option("--delta", cfg.delta, "regularizer weight (<0: scheduled M*H/T)")
        ->capture_default_str();
    run->add_option("--theta", cfg.theta, "horizon upper bound; switches to the theta schedule")
        ->capture_default_str();
    run->add_option("--M", cfg.M, "sup-norm cost bound")->capture_default_str();
    run->add_option("--seed", cfg.seed, "root seed")->capture_default_str();
    run->add_flag("--raw-sign", cfg.raw_sign, "emit the unnegated [0,1] stochastic costs");
    run->add_option("--out", cfg.out_dir, "output directory")->required();
    run->add_option("--cost-file", cfg.cost_file, "cost CSV (t,g_1,...,g_n) for --adversary csv");
    run->add_option("--svg", cfg.svg_path, "also render the regret curve to this SVG path");
    run->add_option("--threads", cfg.threads, "worker cap (0: HISTAVG_THREADS env or hardware)")
        ->capture_default_str();

    histavg::VerifyOptions vopts;
    auto* verify = app.add_subcommand("verify", "run the bound/identity verification suites");
    std::string suites_help = "one of:";
    for (const auto& s : histavg::verify_suite_names()) suites_help += " " + s;
    verify->add_option("--suite", vopts.suite, suites_help);
    verify->add_option("--seed", vopts.seed, "verification seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            histavg::run_experiment(cfg);
            return 0;
        }
        return histavg::verify_all(vopts) == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
