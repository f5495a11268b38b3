#include "histavg/episode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "histavg/history.hpp"

namespace histavg {

double Trajectory::total_loss() const {
    double s = 0.0;
    for (double l : losses) s += l;
    return s;
}

Trajectory run_episode(Learner& learner, CostSource& source, int H, std::uint64_t learner_seed,
                       bool extend_for_verification) {
    if (learner.dim() != source.dim())
        throw std::invalid_argument("run_episode: learner and adversary dimensions differ");
    const int T = source.rounds();
    const int n = source.dim();

    learner.reset(learner_seed);
    HistoryState state(H, n);

    Trajectory traj;
    traj.horizon = H;
    traj.decisions.reserve(static_cast<std::size_t>(T));
    traj.states.reserve(static_cast<std::size_t>(T));
    traj.costs.reserve(static_cast<std::size_t>(T));
    traj.losses.reserve(static_cast<std::size_t>(T));
    traj.cumulative_cost.assign(static_cast<std::size_t>(n), 0.0);

    for (int t = 1; t <= T; ++t) {
        SimplexVector v = learner.decide(t);
        SimplexVector x = state.advance(v);
        const CostVector& g = source.cost(t);  // only after the round-t decision
        traj.losses.push_back(dot(g.entries(), x.entries()));
        for (int i = 0; i < n; ++i) traj.cumulative_cost[static_cast<std::size_t>(i)] += g[static_cast<std::size_t>(i)];
        traj.decisions.push_back(std::move(v));
        traj.states.push_back(std::move(x));
        traj.costs.push_back(g);
        learner.observe(g);
    }

    if (const auto* z = learner.perturbation()) traj.perturbation = *z;
    if (const auto* f = dynamic_cast<const FtarlLearner*>(&learner)) traj.epsilon = f->epsilon();

    if (extend_for_verification) {
        // two extra steps with zero incoming cost; the first is the learner's
        // output after its last observation
        const CostVector zero(std::vector<double>(static_cast<std::size_t>(n), 0.0), 1.0);
        for (int k = 1; k <= 2; ++k) {
            SimplexVector v = learner.decide(T + k);
            SimplexVector x = state.advance(v);
            traj.virtual_decisions.push_back(std::move(v));
            traj.virtual_states.push_back(std::move(x));
            learner.observe(zero);
        }
    }
    return traj;
}

int first_state_mismatch(const Trajectory& traj, double tol) {
    const int T = traj.rounds();
    if (T == 0) return -1;
    const int n = traj.decisions.front().dim();
    const int H = traj.horizon;
    std::vector<std::vector<double>> prefix(static_cast<std::size_t>(T) + 1,
                                            std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int t = 1; t <= T; ++t)
        for (int i = 0; i < n; ++i)
            prefix[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] =
                prefix[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(i)] +
                traj.decisions[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(i)];
    for (int t = 1; t <= T; ++t) {
        const int w = std::min(t, H);
        for (int i = 0; i < n; ++i) {
            const double want = (prefix[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] -
                                 prefix[static_cast<std::size_t>(t - w)][static_cast<std::size_t>(i)]) /
                                w;
            if (std::abs(want - traj.states[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(i)]) > tol)
                return t;
        }
    }
    return -1;
}

}  // namespace histavg
