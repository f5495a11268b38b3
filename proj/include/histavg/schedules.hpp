#pragma once

namespace histavg {

// Perturbation rate eps = sqrt(4 (log n + 1) / (M^2 (T - H) (2 + H))).
// Requires T > H >= 1, n >= 2, M > 0.
double epsilon_schedule(int T, int H, int n, double M);

// Horizon-agnostic rate eps = sqrt(4 (log n + 1) / (T M^2 Theta)) for a known
// upper bound Theta on the horizon.
double epsilon_schedule_theta(int T, int theta, int n, double M);

// Regularizer weight delta = M H / T.
double delta_schedule(int T, int H, double M);

}  // namespace histavg
