#include "histavg/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace histavg {

double theorem42_bound(int T, int H, int n, double M) {
    if (H < 1) throw std::invalid_argument("theorem42_bound: H must be >= 1");
    if (T <= H) throw std::invalid_argument("theorem42_bound: requires T > H");
    if (n < 2) throw std::invalid_argument("theorem42_bound: n must be >= 2");
    if (M < 0.0) throw std::invalid_argument("theorem42_bound: M must be nonnegative");
    const double logn1 = std::log(static_cast<double>(n)) + 1.0;
    return 5.0 * M * H + 4.0 * M * std::sqrt(static_cast<double>(T - H) * (H + 2) * logn1);
}

double corollary43_bound(int T, int theta, int n, double M) {
    if (T < 1) throw std::invalid_argument("corollary43_bound: T must be >= 1");
    if (theta < 1) throw std::invalid_argument("corollary43_bound: theta must be >= 1");
    if (n < 2) throw std::invalid_argument("corollary43_bound: n must be >= 2");
    if (M < 0.0) throw std::invalid_argument("corollary43_bound: M must be nonnegative");
    const double logn1 = std::log(static_cast<double>(n)) + 1.0;
    return 5.0 * M * theta + 4.0 * M * std::sqrt(static_cast<double>(T) * theta * logn1);
}

}  // namespace histavg
