#include "histavg/schedules.hpp"

#include <cmath>
#include <stdexcept>

namespace histavg {

double epsilon_schedule(int T, int H, int n, double M) {
    if (H < 1) throw std::invalid_argument("epsilon_schedule: H must be >= 1");
    if (T <= H) throw std::invalid_argument("epsilon_schedule: requires T > H");
    if (n < 2) throw std::invalid_argument("epsilon_schedule: n must be >= 2");
    if (M <= 0.0) throw std::invalid_argument("epsilon_schedule: M must be positive");
    const double num = 4.0 * (std::log(static_cast<double>(n)) + 1.0);
    const double den = M * M * static_cast<double>(T - H) * static_cast<double>(2 + H);
    return std::sqrt(num / den);
}

double epsilon_schedule_theta(int T, int theta, int n, double M) {
    if (T < 1) throw std::invalid_argument("epsilon_schedule_theta: T must be >= 1");
    if (theta < 1) throw std::invalid_argument("epsilon_schedule_theta: theta must be >= 1");
    if (n < 2) throw std::invalid_argument("epsilon_schedule_theta: n must be >= 2");
    if (M <= 0.0) throw std::invalid_argument("epsilon_schedule_theta: M must be positive");
    const double num = 4.0 * (std::log(static_cast<double>(n)) + 1.0);
    const double den = static_cast<double>(T) * M * M * static_cast<double>(theta);
    return std::sqrt(num / den);
}

double delta_schedule(int T, int H, double M) {
    if (T < 1) throw std::invalid_argument("delta_schedule: T must be >= 1");
    return M * static_cast<double>(H) / static_cast<double>(T);
}

}  // namespace histavg
