#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "histavg/bounds.hpp"
#include "histavg/experiment.hpp"
#include "histavg/history.hpp"
#include "histavg/regret.hpp"
#include "histavg/regularizer.hpp"
#include "histavg/rng.hpp"
#include "histavg/schedules.hpp"
#include "histavg/verify.hpp"

namespace histavg {

namespace {

struct SuiteResult {
    bool ok = true;
    std::string details;
};

CostSequence pick_costs(int which, int n, int T, std::uint64_t seed) {
    switch (which % 3) {
        case 0: return stoc_id(n, T, seed);
        case 1: return stoc_het(n, T, seed);
        default: return cyc(n, T, std::max(1, T / 8));
    }
}

SuiteResult suite_lemma21(std::uint64_t seed) {
    const int ns[] = {2, 3, 5};
    const int hs[] = {1, 4, 25, 100};
    const int ts[] = {1, 2, 7, 160, 400};
    int case_id = 0;
    for (int n : ns) {
        for (int h : hs) {
            for (int t : ts) {
                const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(case_id));
                SequenceSource source(pick_costs(case_id, n, t, s));
                const double eps = t > h ? epsilon_schedule(t, h, n, 1.0) : 1.0;
                FtarlLearner learner(n, eps);
                const Trajectory traj = run_episode(learner, source, h, lane_seed(s, kLaneLearner));
                const Lemma21Check check = lemma21_check(traj);
                if (!check.holds) {
                    std::ostringstream msg;
                    msg << "case " << case_id << " (n=" << n << " H=" << h << " T=" << t << " seed=" << s
                        << "): |regret - policy regret| = " << check.difference;
                    if (check.state_mismatch_round)
                        msg << ", state mismatch at round " << *check.state_mismatch_round;
                    return {false, msg.str()};
                }
                ++case_id;
            }
        }
    }
    return {true, std::to_string(case_id) + " trajectories, regret == policy regret within 1e-9"};
}

SuiteResult suite_thm31(std::uint64_t seed) {
    SplitMix64 stream(seed);
    const int ns[] = {2, 3, 5};
    for (int k = 0; k < 200; ++k) {
        const int n = ns[k % 3];
        const int T = 1 + static_cast<int>(stream.next_u64() % 50);
        std::vector<std::vector<double>> costs(static_cast<std::size_t>(T));
        for (auto& c : costs) {
            c.resize(static_cast<std::size_t>(n));
            for (double& v : c) v = 2.0 * stream.next_u01() - 1.0;
        }
        const InequalityCheck check = ftl_inequality_check(costs);
        if (!check.holds) {
            std::ostringstream msg;
            msg << "instance " << k << " (n=" << n << " T=" << T << " seed=" << seed
                << "): lhs=" << check.lhs << " > rhs=" << check.rhs;
            return {false, msg.str()};
        }
    }
    return {true, "200 random linear-cost instances"};
}

SuiteResult suite_thm32(std::uint64_t seed) {
    SplitMix64 stream(seed);
    const int ns[] = {2, 5};
    const int hs[] = {1, 4, 10};
    for (int k = 0; k < 100; ++k) {
        const int n = ns[k % 2];
        const int H = hs[k % 3];
        const int T = 20 + static_cast<int>(stream.next_u64() % 181);
        const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(k));
        SequenceSource source(stoc_id(n, T, s));
        const double eps = epsilon_schedule(T, H, n, 1.0);
        FtarlLearner learner(n, eps);
        Trajectory traj = run_episode(learner, source, H, lane_seed(s, kLaneLearner), true);
        traj.delta = delta_schedule(T, H, 1.0);

        const int best = argmin_index(traj.cumulative_cost);
        const std::vector<double> bih = SimplexVector::vertex(n, best).entries();
        InequalityCheck check = ftarl_inequality_check(traj, bih);
        if (check.holds && k % 4 == 0)
            check = ftarl_inequality_check(traj, traj.virtual_states.front().entries());
        if (!check.holds) {
            std::ostringstream msg;
            msg << "instance " << k << " (n=" << n << " H=" << H << " T=" << T << " seed=" << s
                << "): lhs=" << check.lhs << " > rhs=" << check.rhs;
            return {false, msg.str()};
        }
    }
    return {true, "100 seeded runs, both comparator choices"};
}

SuiteResult suite_remark41(std::uint64_t seed) {
    int checked = 0;
    for (int episode = 0; checked < 100; ++episode) {
        const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(episode));
        const int n = 2 + static_cast<int>(s % 4);            // 2..5
        const int T = 40 + static_cast<int>((s >> 8) % 160);  // 40..199
        const int H = 1 + static_cast<int>((s >> 16) % 20);   // 1..20
        if (T <= H) continue;
        const double eps = epsilon_schedule(T, H, n, 1.0);
        const double delta = delta_schedule(T, H, 1.0);
        const CostSequence seq = stoc_het(n, T, lane_seed(s, kLaneAdversary));

        FtarlLearner learner(n, eps);
        learner.reset(lane_seed(s, kLaneLearner));
        HistoryState state(H, n);
        const int harvest_every = std::max(1, T / 5);
        for (int t = 1; t <= T; ++t) {
            const SimplexVector v = learner.decide(t);
            state.advance(v);
            learner.observe(seq.costs[static_cast<std::size_t>(t - 1)]);
            if (t % harvest_every != 0 || checked >= 100) continue;

            RegularizerSpec spec;
            spec.delta = delta;
            spec.y = state.y_current();
            spec.beta_next = state.beta_next();
            spec.v_star_next = learner.decide(t + 1).entries();  // leader after observing g^t
            spec.g_cum = learner.cumulative_cost();

            const ArgminResult result = argmin_oracle(spec, spec.g_cum);
            if (!result.converged) {
                std::ostringstream msg;
                msg << "optimizer did not converge (episode seed " << s << ", round " << t << ", "
                    << result.iterations << " iterations)";
                return {false, msg.str()};
            }
            double err = 0.0;
            for (int i = 0; i < n; ++i) {
                const double target = spec.y[static_cast<std::size_t>(i)] +
                                      spec.beta_next * spec.v_star_next[static_cast<std::size_t>(i)];
                err = std::max(err, std::abs(result.x[static_cast<std::size_t>(i)] - target));
            }
            if (err > 1e-6) {
                std::ostringstream msg;
                msg << "minimizer off closed form by " << err << " (episode seed " << s << ", round "
                    << t << ")";
                return {false, msg.str()};
            }
            ++checked;
        }
    }
    return {true, "100 regularizer specs harvested from live runs, sup error <= 1e-6"};
}

SuiteResult suite_identities(std::uint64_t seed) {
    const int hs[] = {1, 3, 10, 100};
    int case_id = 0;
    for (int h : hs) {
        for (int k = 0; k < 6; ++k) {
            const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(case_id));
            const int n = 2 + (case_id % 3);
            const int T = std::max(h + 20, 150);
            SequenceSource source(pick_costs(case_id, n, T, s));
            const double eps = epsilon_schedule(T, h, n, 1.0);
            FtarlLearner learner(n, eps);
            const Trajectory traj = run_episode(learner, source, h, lane_seed(s, kLaneLearner));
            if (const auto violation = check_step_identities(traj)) {
                std::ostringstream msg;
                msg << violation->identity << " violated at round " << violation->round << " (seed " << s
                    << "): observed " << violation->observed << " vs " << violation->expected;
                return {false, msg.str()};
            }
            const int bad = first_state_mismatch(traj);
            if (bad > 0) {
                return {false, "state reconstruction mismatch at round " + std::to_string(bad) +
                                   " (seed " + std::to_string(s) + ")"};
            }
            ++case_id;
        }
    }
    return {true, std::to_string(case_id) + " trajectories, I.1-I.3 and state reconstruction"};
}

SuiteResult suite_claim_a(std::uint64_t seed) {
    const int T = 1000, H = 50, n = 2, episodes = 5000;
    const double eps = epsilon_schedule(T, H, n, 1.0);
    const CostSequence seq = stoc_het(n, T, derive_seed(seed, 0xc1a));
    const ClaimACheck check = claim_a_check(seq, H, eps, episodes, seed);
    std::ostringstream msg;
    msg << "frequency " << check.frequency << " vs bound " << check.bound << " + 3se ("
        << check.comparisons << " comparisons)";
    return {check.holds, msg.str()};
}

SuiteResult suite_leader_gap(std::uint64_t seed) {
    int case_id = 0;
    for (int k = 0; k < 8; ++k) {
        const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(k));
        const int n = 2 + (k % 3);
        const int T = 400;
        const int theta = 50;
        const CostSequence seq = pick_costs(k, n, T, s);
        const double eps = epsilon_schedule(T, theta, n, 1.0);
        const std::vector<double> z = exp_draw(n, eps, lane_seed(s, kLaneLearner));
        const LeaderGapCheck check = leader_value_gap_check(seq, z, theta);
        if (!check.holds) {
            std::ostringstream msg;
            msg << "gap " << check.max_gap << " exceeds " << check.bound << " (seed " << s << ")";
            return {false, msg.str()};
        }
        case_id += check.windows;
    }
    return {true, std::to_string(case_id) + " multi-leader windows within the M*theta gap"};
}

SuiteResult suite_claim41(std::uint64_t seed) {
    const int T = 500, H = 400, draws = 2000;
    const double floor = static_cast<double>(H) / 32.0;
    for (const char* algo : {"ftarl", "lsa"}) {
        ExperimentConfig cfg;
        cfg.algo = algo;
        cfg.adversary = "lower-bound";
        cfg.n = 2;
        cfg.T = T;
        cfg.H = H;
        cfg.runs = draws;
        cfg.seed = seed;
        double total = 0.0;
        RunResult rr;
        for (int r = 0; r < draws; ++r) {
            run_single(cfg, r, rr);
            total += rr.regret.back();
        }
        const double mean = total / draws;
        if (mean < floor) {
            std::ostringstream msg;
            msg << algo << " mean regret " << mean << " below the H/32 floor " << floor;
            return {false, msg.str()};
        }
    }
    return {true, "ftarl and lsa both at or above the H/32 floor over 2000 coin draws"};
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"lemma21", "thm31", "thm32", "remark41", "identities", "claim-a", "leader-gap", "claim41"};
}

int verify_all(const VerifyOptions& opts) {
    using SuiteFn = std::function<SuiteResult(std::uint64_t)>;
    const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"lemma21", suite_lemma21},   {"thm31", suite_thm31},
        {"thm32", suite_thm32},       {"remark41", suite_remark41},
        {"identities", suite_identities}, {"claim-a", suite_claim_a},
        {"leader-gap", suite_leader_gap}, {"claim41", suite_claim41},
    };
    int failures = 0;
    bool matched = false;
    for (const auto& [name, fn] : suites) {
        if (!opts.suite.empty() && opts.suite != name) continue;
        matched = true;
        const auto t0 = std::chrono::steady_clock::now();
        SuiteResult result;
        try {
            result = fn(opts.seed);
        } catch (const std::exception& e) {
            result = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (result.ok ? "[ ok ]" : "[FAIL]") << " " << name;
        std::cout.setf(std::ios::fixed);
        std::cout.precision(2);
        std::cout << " (" << secs << " s)";
        std::cout.unsetf(std::ios::fixed);
        std::cout << ": " << result.details << "\n";
        failures += result.ok ? 0 : 1;
    }
    if (!matched) {
        std::cout << "unknown suite: " << opts.suite << "\n";
        return 2;
    }
    return failures;
}

}  // namespace histavg
