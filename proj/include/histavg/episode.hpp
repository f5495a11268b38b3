#pragma once

#include <cstdint>
#include <vector>

#include "histavg/adversaries.hpp"
#include "histavg/learners.hpp"
#include "histavg/simplex.hpp"

namespace histavg {

// One played-out episode: inputs v^t, states x^t, costs g^t and per-round
// losses <g^t, x^t>, plus the data the bound verifiers need.
struct Trajectory {
    int horizon = 1;
    std::vector<SimplexVector> decisions;
    std::vector<SimplexVector> states;
    std::vector<CostVector> costs;
    std::vector<double> losses;
    std::vector<double> cumulative_cost;  // G^T

    // Filled when the learner exposes them.
    std::vector<double> perturbation;  // Z
    double epsilon = 0.0;
    double delta = 0.0;

    // Two post-horizon steps driven with zero incoming cost, present when the
    // episode was run with extend_for_verification.
    std::vector<SimplexVector> virtual_decisions;
    std::vector<SimplexVector> virtual_states;

    int rounds() const { return static_cast<int>(decisions.size()); }
    double total_loss() const;
};

// Drives `learner` against `source` for source.rounds() rounds under the
// trailing-average dynamics with horizon H. Costs are only read after the
// decision of the same round. extend_for_verification appends two virtual
// rounds with zero cost.
Trajectory run_episode(Learner& learner, CostSource& source, int H, std::uint64_t learner_seed,
                       bool extend_for_verification = false);

// First round whose stored state disagrees with a from-scratch recomputation
// of the trailing average (beyond `tol` in sup norm), or -1 if none.
int first_state_mismatch(const Trajectory& traj, double tol = 1e-9);

}  // namespace histavg
