#pragma once

#include <optional>

#include "histavg/episode.hpp"

namespace histavg {

struct RegretReport {
    double total_loss = 0.0;
    double best_in_hindsight = 0.0;
    double regret = 0.0;
    double policy_regret = 0.0;
    std::optional<double> bound_value;
    std::optional<bool> bound_satisfied;
};

// Regret against the best fixed simplex point: total loss minus min_i G^T_i
// (a linear objective over the simplex attains its minimum at a vertex).
// Throws std::invalid_argument on an empty trajectory.
RegretReport regret(const Trajectory& traj);

// Policy regret evaluated literally: the comparator replays each candidate
// vertex as a constant input through the trailing-average dynamics. Under
// those dynamics this equals regret().
double policy_regret(const Trajectory& traj);

struct Lemma21Check {
    double regret = 0.0;
    double policy_regret = 0.0;
    double difference = 0.0;
    std::optional<int> state_mismatch_round;  // set when the trajectory does not follow the dynamics
    bool holds = false;
};

// Checks regret == policy regret within tol, guarding against trajectories
// whose states were not generated by the averaging dynamics.
Lemma21Check lemma21_check(const Trajectory& traj, double tol = 1e-9);

}  // namespace histavg
