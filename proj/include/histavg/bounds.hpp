#pragma once

namespace histavg {

// Expected-regret bound 5 M H + 4 M sqrt((T - H)(H + 2)(log n + 1)) for the
// scheduled perturbation rate. Natural logarithm. Requires T > H.
double theorem42_bound(int T, int H, int n, double M);

// Horizon-agnostic variant 5 M Theta + 4 M sqrt(T Theta (log n + 1)).
double corollary43_bound(int T, int theta, int n, double M);

}  // namespace histavg
