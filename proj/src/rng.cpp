#include "histavg/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace histavg {

double SplitMix64::next_exp(double rate) {
    if (rate <= 0.0) throw std::invalid_argument("exponential rate must be positive");
    return -std::log(next_u01_positive()) / rate;
}

std::vector<double> exp_draw(int n, double epsilon, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("exp_draw: n must be nonnegative");
    if (epsilon <= 0.0) throw std::invalid_argument("exp_draw: epsilon must be positive");
    SplitMix64 stream(seed);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (double& v : out) v = stream.next_exp(epsilon);
    return out;
}

}  // namespace histavg
