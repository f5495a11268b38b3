#include "histavg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "histavg/regularizer.hpp"
#include "histavg/rng.hpp"

namespace histavg {

std::vector<int> ftl_decisions(const std::vector<std::vector<double>>& costs) {
    if (costs.empty()) throw std::invalid_argument("ftl_decisions: empty cost sequence");
    const std::size_t n = costs.front().size();
    std::vector<double> cumulative(n, 0.0);
    std::vector<int> decisions;
    decisions.reserve(costs.size() + 1);
    for (const auto& c : costs) {
        if (c.size() != n) throw std::invalid_argument("ftl_decisions: ragged costs");
        decisions.push_back(argmin_index(cumulative));
        for (std::size_t i = 0; i < n; ++i) cumulative[i] += c[i];
    }
    decisions.push_back(argmin_index(cumulative));  // post-hoc leader x^{T+1}
    return decisions;
}

InequalityCheck ftl_inequality_check(const std::vector<std::vector<double>>& costs, double tol) {
    const std::vector<int> d = ftl_decisions(costs);
    const std::size_t n = costs.front().size();
    std::vector<double> cumulative(n, 0.0);
    double play_loss = 0.0;
    double rhs = 0.0;
    for (std::size_t t = 0; t < costs.size(); ++t) {
        play_loss += costs[t][static_cast<std::size_t>(d[t])];
        rhs += costs[t][static_cast<std::size_t>(d[t])] - costs[t][static_cast<std::size_t>(d[t + 1])];
        for (std::size_t i = 0; i < n; ++i) cumulative[i] += costs[t][i];
    }
    const double best = cumulative[static_cast<std::size_t>(argmin_index(cumulative))];
    InequalityCheck check;
    check.lhs = play_loss - best;
    check.rhs = rhs;
    check.holds = check.lhs <= check.rhs + tol;
    return check;
}

namespace {

// y^t of the trailing-average dynamics rebuilt from the decision prefix sums.
std::vector<double> rebuild_y(const std::vector<std::vector<double>>& prefix, int t, int H, int n) {
    std::vector<double> y(static_cast<std::size_t>(n), 0.0);
    if (t == 0) return y;
    if (t < H) {
        const double inv = 1.0 / (t + 1);
        for (int i = 0; i < n; ++i)
            y[static_cast<std::size_t>(i)] = prefix[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] * inv;
    } else {
        const double inv = 1.0 / H;
        for (int i = 0; i < n; ++i)
            y[static_cast<std::size_t>(i)] = (prefix[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] -
                                              prefix[static_cast<std::size_t>(t - H + 1)][static_cast<std::size_t>(i)]) *
                                             inv;
    }
    return y;
}

}  // namespace

InequalityCheck ftarl_inequality_check(const Trajectory& traj, const std::vector<double>& comparator,
                                       double tol) {
    const int T = traj.rounds();
    if (T < 1) throw std::invalid_argument("ftarl_inequality_check: empty trajectory");
    if (traj.perturbation.empty())
        throw std::invalid_argument("ftarl_inequality_check: trajectory lacks a perturbation vector");
    if (traj.virtual_decisions.empty() || traj.virtual_states.empty())
        throw std::invalid_argument("ftarl_inequality_check: trajectory lacks the virtual rounds");
    const int n = traj.decisions.front().dim();
    if (static_cast<int>(comparator.size()) != n)
        throw std::invalid_argument("ftarl_inequality_check: comparator dimension mismatch");
    const int H = traj.horizon;

    // decisions and states through round T+1
    std::vector<const SimplexVector*> v(static_cast<std::size_t>(T) + 2, nullptr);
    std::vector<const SimplexVector*> x(static_cast<std::size_t>(T) + 2, nullptr);
    for (int t = 1; t <= T; ++t) {
        v[static_cast<std::size_t>(t)] = &traj.decisions[static_cast<std::size_t>(t - 1)];
        x[static_cast<std::size_t>(t)] = &traj.states[static_cast<std::size_t>(t - 1)];
    }
    v[static_cast<std::size_t>(T + 1)] = &traj.virtual_decisions.front();
    x[static_cast<std::size_t>(T + 1)] = &traj.virtual_states.front();

    // decision prefix sums and cost prefix sums, rebuilt from scratch
    std::vector<std::vector<double>> vsum(static_cast<std::size_t>(T) + 2,
                                          std::vector<double>(static_cast<std::size_t>(n), 0.0));
    std::vector<std::vector<double>> gsum(static_cast<std::size_t>(T) + 1,
                                          std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int t = 1; t <= T + 1; ++t)
        for (int i = 0; i < n; ++i)
            vsum[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] =
                vsum[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(i)] +
                (*v[static_cast<std::size_t>(t)])[static_cast<std::size_t>(i)];
    for (int t = 1; t <= T; ++t)
        for (int i = 0; i < n; ++i)
            gsum[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] =
                gsum[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(i)] +
                traj.costs[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(i)];

    const auto regularizer_at = [&](int t) {
        RegularizerSpec spec;
        spec.delta = traj.delta;
        spec.y = rebuild_y(vsum, t, H, n);
        spec.beta_next = 1.0 / std::min(t + 1, H);
        spec.v_star_next = v[static_cast<std::size_t>(t + 1)]->entries();
        spec.g_cum = gsum[static_cast<std::size_t>(t)];
        return spec;
    };

    InequalityCheck check;
    for (int t = 1; t <= T; ++t) {
        const auto& g = traj.costs[static_cast<std::size_t>(t - 1)].entries();
        check.lhs += dot(g, x[static_cast<std::size_t>(t)]->entries()) - dot(g, comparator);
        check.rhs += dot(g, x[static_cast<std::size_t>(t)]->entries()) -
                     dot(g, x[static_cast<std::size_t>(t + 1)]->entries());
    }
    // t = 0 telescope term uses the linear perturbation regularizer
    check.rhs += regularizer_r0(traj.perturbation, x[2]->entries()) -
                 regularizer_r0(traj.perturbation, x[1]->entries());
    for (int t = 1; t <= T - 1; ++t) {
        const RegularizerSpec spec = regularizer_at(t);
        check.rhs += spec.value(x[static_cast<std::size_t>(t + 2)]->entries()) -
                     spec.value(x[static_cast<std::size_t>(t + 1)]->entries());
    }
    const RegularizerSpec last = regularizer_at(T);
    check.rhs += last.value(comparator) - last.value(x[static_cast<std::size_t>(T + 1)]->entries());
    check.holds = check.lhs <= check.rhs + tol;
    return check;
}

std::optional<IdentityViolation> check_step_identities(const Trajectory& traj, double tol) {
    const int T = traj.rounds();
    const int H = traj.horizon;
    if (T < 2) return std::nullopt;
    const int n = traj.decisions.front().dim();
    for (int t = 1; t <= T - 1; ++t) {
        const auto& xt = traj.states[static_cast<std::size_t>(t - 1)].entries();
        const auto& xt1 = traj.states[static_cast<std::size_t>(t)].entries();
        const auto& vt1 = traj.decisions[static_cast<std::size_t>(t)].entries();

        double l1 = 0.0;
        for (int i = 0; i < n; ++i) l1 += std::abs(xt1[static_cast<std::size_t>(i)] - xt[static_cast<std::size_t>(i)]);
        const double step_bound = 2.0 / std::min(t, H);
        if (l1 > step_bound + tol)
            return IdentityViolation{"I.3", t, l1, step_bound};

        if (t >= H) {
            const auto& vold = traj.decisions[static_cast<std::size_t>(t - H)].entries();  // v^{t+1-H}
            for (int i = 0; i < n; ++i) {
                const double got = xt1[static_cast<std::size_t>(i)] - xt[static_cast<std::size_t>(i)];
                const double want =
                    (vt1[static_cast<std::size_t>(i)] - vold[static_cast<std::size_t>(i)]) / H;
                if (std::abs(got - want) > tol) return IdentityViolation{"I.1", t, got, want};
            }
        } else {
            for (int i = 0; i < n; ++i) {
                const double got = xt1[static_cast<std::size_t>(i)] - xt[static_cast<std::size_t>(i)];
                const double want =
                    (vt1[static_cast<std::size_t>(i)] - xt[static_cast<std::size_t>(i)]) / (t + 1);
                if (std::abs(got - want) > tol) return IdentityViolation{"I.2", t, got, want};
            }
        }
    }
    return std::nullopt;
}

ClaimACheck claim_a_check(const CostSequence& seq, int H, double epsilon, int episodes,
                          std::uint64_t seed, double slack_sigmas) {
    if (H < 1) throw std::invalid_argument("claim_a_check: H must be >= 1");
    if (epsilon <= 0.0) throw std::invalid_argument("claim_a_check: epsilon must be positive");
    const int T = seq.rounds();
    const int n = seq.n;
    if (T <= H) throw std::invalid_argument("claim_a_check: needs T > H");

    std::vector<std::vector<double>> gsum(static_cast<std::size_t>(T),
                                          std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int t = 1; t < T; ++t)
        for (int i = 0; i < n; ++i)
            gsum[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] =
                gsum[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(i)] +
                seq.costs[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(i)];

    ClaimACheck check;
    std::vector<int> leaders(static_cast<std::size_t>(T));
    for (int e = 0; e < episodes; ++e) {
        const std::vector<double> z = exp_draw(n, epsilon, derive_seed(seed, static_cast<std::uint64_t>(e)));
        for (int t = 0; t < T; ++t) {
            int best = 0;
            double best_score = gsum[static_cast<std::size_t>(t)][0] - z[0];
            for (int i = 1; i < n; ++i) {
                const double s = gsum[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] -
                                 z[static_cast<std::size_t>(i)];
                if (s < best_score) {
                    best_score = s;
                    best = i;
                }
            }
            leaders[static_cast<std::size_t>(t)] = best;
        }
        // x^t != x^{t+1} for t >= H reduces to a change between the leaders
        // H rounds apart
        for (int t = H; t <= T - 1; ++t) {
            check.changes += leaders[static_cast<std::size_t>(t)] != leaders[static_cast<std::size_t>(t - H)];
            ++check.comparisons;
        }
    }
    check.frequency =
        check.comparisons > 0 ? static_cast<double>(check.changes) / static_cast<double>(check.comparisons) : 0.0;
    check.bound = epsilon * seq.bound * H;
    check.stderr_ = check.comparisons > 0
                        ? std::sqrt(std::max(0.0, check.frequency * (1.0 - check.frequency) /
                                                      static_cast<double>(check.comparisons)))
                        : 0.0;
    check.holds = check.frequency <= check.bound + slack_sigmas * check.stderr_;
    return check;
}

LeaderGapCheck leader_value_gap_check(const CostSequence& seq, const std::vector<double>& z,
                                      int theta, double tol) {
    const int T = seq.rounds();
    const int n = seq.n;
    if (static_cast<int>(z.size()) != n)
        throw std::invalid_argument("leader_value_gap_check: perturbation dimension mismatch");
    if (theta < 1 || theta > T) throw std::invalid_argument("leader_value_gap_check: bad theta");

    // perturbed scores s_i(tau) = G^tau_i - z_i for tau = 0..T
    std::vector<std::vector<double>> score(static_cast<std::size_t>(T) + 1,
                                           std::vector<double>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) score[0][static_cast<std::size_t>(i)] = -z[static_cast<std::size_t>(i)];
    for (int tau = 1; tau <= T; ++tau)
        for (int i = 0; i < n; ++i)
            score[static_cast<std::size_t>(tau)][static_cast<std::size_t>(i)] =
                score[static_cast<std::size_t>(tau - 1)][static_cast<std::size_t>(i)] +
                seq.costs[static_cast<std::size_t>(tau - 1)][static_cast<std::size_t>(i)];

    std::vector<int> leader(static_cast<std::size_t>(T) + 1);
    for (int tau = 0; tau <= T; ++tau)
        leader[static_cast<std::size_t>(tau)] = argmin_index(score[static_cast<std::size_t>(tau)]);

    LeaderGapCheck check;
    check.bound = seq.bound * theta;
    check.holds = true;
    for (int t = theta; t <= T; ++t) {
        std::vector<int> leaders;
        for (int tau = t - theta; tau <= t; ++tau) {
            const int l = leader[static_cast<std::size_t>(tau)];
            if (std::find(leaders.begin(), leaders.end(), l) == leaders.end()) leaders.push_back(l);
        }
        if (leaders.size() < 2) continue;
        ++check.windows;
        for (int tau = t - theta; tau <= t; ++tau) {
            for (std::size_t a = 0; a < leaders.size(); ++a) {
                for (std::size_t b = a + 1; b < leaders.size(); ++b) {
                    const double gap = std::abs(
                        score[static_cast<std::size_t>(tau)][static_cast<std::size_t>(leaders[a])] -
                        score[static_cast<std::size_t>(tau)][static_cast<std::size_t>(leaders[b])]);
                    check.max_gap = std::max(check.max_gap, gap);
                }
            }
        }
    }
    check.holds = check.max_gap <= check.bound + tol;
    return check;
}

}  // namespace histavg
