#pragma once

#include <vector>

#include "histavg/simplex.hpp"

namespace histavg {

// The round-t adaptive regularizer
//
//   R^t(x) = delta (1/2 ||x - y||^2 - beta_next <v_star_next, x>) - <g_cum, x>
//
// built from the learner's own history: y is the partial trailing average,
// beta_next the upcoming averaging weight, v_star_next the next perturbed
// leader and g_cum the running cost sum G^t.
struct RegularizerSpec {
    double delta = 0.0;
    std::vector<double> y;
    double beta_next = 1.0;
    std::vector<double> v_star_next;
    std::vector<double> g_cum;

    double value(const std::vector<double>& x) const;
};

// Round-0 regularizer R^0(x) = -<z, x>.
double regularizer_r0(const std::vector<double>& z, const std::vector<double>& x);

// Euclidean projection onto the probability simplex.
std::vector<double> project_to_simplex(std::vector<double> v);

struct ArgminResult {
    SimplexVector x;
    bool converged = false;
    bool degenerate_linear = false;  // delta == 0: objective is linear, a vertex is returned
    int iterations = 0;
};

// Numerically minimizes R^t(x) + <g_objective, x> over the simplex by
// projected gradient descent with diminishing steps. For delta > 0 and
// g_objective == spec.g_cum the minimizer must match the closed-form update
// y + beta_next * v_star_next within 1e-6; callers treat converged == false
// as a failure, never as an answer.
ArgminResult argmin_oracle(const RegularizerSpec& spec, const std::vector<double>& g_objective,
                           int max_iterations = 20000, double step_tol = 1e-13);

}  // namespace histavg
