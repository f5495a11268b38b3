#include "histavg/regularizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace histavg {

double RegularizerSpec::value(const std::vector<double>& x) const {
    if (x.size() != y.size()) throw std::invalid_argument("RegularizerSpec::value: dimension mismatch");
    double sq = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        sq += d * d;
    }
    return delta * (0.5 * sq - beta_next * dot(v_star_next, x)) - dot(g_cum, x);
}

double regularizer_r0(const std::vector<double>& z, const std::vector<double>& x) {
    return -dot(z, x);
}

std::vector<double> project_to_simplex(std::vector<double> v) {
    // sort-based Euclidean projection onto {x >= 0, sum x = 1}
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double css = 0.0;
    double tau = 0.0;
    int rho = 0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        css += u[k];
        const double candidate = (css - 1.0) / static_cast<double>(k + 1);
        if (u[k] - candidate > 0.0) {
            rho = static_cast<int>(k + 1);
            tau = candidate;
        }
    }
    (void)rho;
    for (double& x : v) x = std::max(0.0, x - tau);
    return v;
}

ArgminResult argmin_oracle(const RegularizerSpec& spec, const std::vector<double>& g_objective,
                           int max_iterations, double step_tol) {
    const std::size_t n = spec.y.size();
    if (g_objective.size() != n) throw std::invalid_argument("argmin_oracle: dimension mismatch");
    if (n < 2) throw std::invalid_argument("argmin_oracle: need dimension >= 2");

    // objective F(x) = delta*(0.5||x-y||^2 - beta <v*, x>) + <g_objective - G, x>
    std::vector<double> linear(n);
    for (std::size_t i = 0; i < n; ++i) linear[i] = g_objective[i] - spec.g_cum[i];

    if (spec.delta == 0.0) {
        // linear objective: a vertex minimizer, lowest index on ties
        const int j = argmin_index(linear);
        return {SimplexVector::vertex(static_cast<int>(n), j), true, true, 0};
    }
    if (spec.delta < 0.0) throw std::invalid_argument("argmin_oracle: delta must be nonnegative");

    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    std::vector<double> grad(n), next(n);
    for (int k = 0; k < max_iterations; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            grad[i] = spec.delta * (x[i] - spec.y[i] - spec.beta_next * spec.v_star_next[i]) + linear[i];
        const double step = 2.0 / (spec.delta * static_cast<double>(k + 2));
        for (std::size_t i = 0; i < n; ++i) next[i] = x[i] - step * grad[i];
        next = project_to_simplex(std::move(next));
        double move = 0.0;
        for (std::size_t i = 0; i < n; ++i) move = std::max(move, std::abs(next[i] - x[i]));
        x.swap(next);
        if (move <= step_tol) return {SimplexVector(std::move(x)), true, false, k + 1};
    }
    return {SimplexVector(std::move(x)), false, false, max_iterations};
}

}  // namespace histavg
