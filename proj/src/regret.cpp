#include "histavg/regret.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "histavg/history.hpp"

namespace histavg {

RegretReport regret(const Trajectory& traj) {
    if (traj.rounds() == 0) throw std::invalid_argument("regret: empty trajectory");
    RegretReport report;
    report.total_loss = traj.total_loss();
    report.best_in_hindsight =
        traj.cumulative_cost[static_cast<std::size_t>(argmin_index(traj.cumulative_cost))];
    report.regret = report.total_loss - report.best_in_hindsight;
    report.policy_regret = policy_regret(traj);
    return report;
}

double policy_regret(const Trajectory& traj) {
    if (traj.rounds() == 0) throw std::invalid_argument("policy_regret: empty trajectory");
    const int T = traj.rounds();
    const int n = traj.decisions.front().dim();

    // comparator term: best constant input replayed through the dynamics
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
        HistoryState dynamics(traj.horizon, n);
        const SimplexVector v = SimplexVector::vertex(n, j);
        double total = 0.0;
        for (int t = 1; t <= T; ++t) {
            SimplexVector x = dynamics.advance(v);
            total += dot(traj.costs[static_cast<std::size_t>(t - 1)].entries(), x.entries());
        }
        if (total < best) best = total;
    }
    return traj.total_loss() - best;
}

Lemma21Check lemma21_check(const Trajectory& traj, double tol) {
    Lemma21Check check;
    const RegretReport report = regret(traj);
    check.regret = report.regret;
    check.policy_regret = report.policy_regret;
    check.difference = std::abs(check.regret - check.policy_regret);
    const int bad = first_state_mismatch(traj);
    if (bad > 0) check.state_mismatch_round = bad;
    check.holds = !check.state_mismatch_round.has_value() && check.difference <= tol;
    return check;
}

}  // namespace histavg
