#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "histavg/adversaries.hpp"
#include "histavg/episode.hpp"

namespace histavg {

struct InequalityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

// Follow-the-leader decisions for arbitrary linear costs: the vertex
// minimizing the cumulative cost so far, lowest index first. Returns T + 1
// decisions (the last one is the post-hoc leader).
std::vector<int> ftl_decisions(const std::vector<std::vector<double>>& costs);

// Checks the follow-the-leader regret inequality
//   sum_t l^t(x^t) - min_x sum_t l^t(x)  <=  sum_t l^t(x^t) - l^t(x^{t+1})
// on the given linear cost sequence, with decisions generated internally.
InequalityCheck ftl_inequality_check(const std::vector<std::vector<double>>& costs, double tol = 1e-9);

// Literal two-sided evaluation of the adaptively-regularized leader regret
// inequality on an extended trajectory (perturbation, delta and at least one
// virtual round are required; throws std::invalid_argument otherwise):
//
//   sum_t l^t(x^t) - l^t(x')  <=  sum_t l^t(x^t) - l^t(x^{t+1})
//        + sum_{t=0}^{T-1} (R^t(x^{t+2}) - R^t(x^{t+1})) + R^T(x') - R^T(x^{T+1}).
InequalityCheck ftarl_inequality_check(const Trajectory& traj, const std::vector<double>& comparator,
                                       double tol = 1e-9);

struct IdentityViolation {
    std::string identity;  // "I.1", "I.2" or "I.3"
    int round = 0;         // the t of the x^{t+1} - x^t step
    double observed = 0.0;
    double expected = 0.0;
};

// Verifies the state-step identities on a trajectory:
//   t >= H:  x^{t+1} - x^t == (v^{t+1} - v^{t+1-H}) / H
//   t <  H:  x^{t+1} - x^t == (v^{t+1} - x^t) / (t + 1)
//   always:  ||x^{t+1} - x^t||_1 <= 2 / min(t, H)
// Returns the first violation, or nullopt.
std::optional<IdentityViolation> check_step_identities(const Trajectory& traj, double tol = 1e-9);

struct ClaimACheck {
    double frequency = 0.0;
    double bound = 0.0;  // epsilon * M * H
    double stderr_ = 0.0;
    long long changes = 0;
    long long comparisons = 0;
    bool holds = false;
};

// Monte Carlo estimate of the state-change frequency P(x^t != x^{t+1}) for
// t >= H under fresh perturbation draws, against the epsilon*M*H bound plus
// `slack_sigmas` binomial standard errors.
ClaimACheck claim_a_check(const CostSequence& seq, int H, double epsilon, int episodes,
                          std::uint64_t seed, double slack_sigmas = 3.0);

struct LeaderGapCheck {
    double max_gap = 0.0;
    double bound = 0.0;  // M * theta
    int windows = 0;
    bool holds = false;
};

// Over every window [t - theta, t], any two actions that both led at some
// point of the window have perturbed scores within M * theta of each other
// at every round of the window. Checked exhaustively.
LeaderGapCheck leader_value_gap_check(const CostSequence& seq, const std::vector<double>& z,
                                      int theta, double tol = 1e-9);

}  // namespace histavg
