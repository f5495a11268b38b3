#pragma once

#include <cstdint>
#include <vector>

namespace histavg {

// 64-bit finalizer used for seed derivation. Stateless, bit-stable across
// platforms.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Per-run seed for Monte Carlo run `index` under a root seed.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    return mix64(root ^ index);
}

// Independent sub-streams of one episode seed. The adversary and the learner
// never share draws.
inline constexpr std::uint64_t kLaneAdversary = 0xad5ec0575eed0001ULL;
inline constexpr std::uint64_t kLaneLearner = 0x1ea85eed00000002ULL;

inline std::uint64_t lane_seed(std::uint64_t seed, std::uint64_t lane) {
    return mix64(seed ^ lane);
}

// splitmix64 stream. Deterministic: identical seed gives an identical draw
// sequence bit for bit.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // Uniform on [0, 1) with 53 random bits.
    double next_u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1); a zero draw is rejected and redrawn.
    double next_u01_positive() {
        double u;
        do {
            u = next_u01();
        } while (u <= 0.0);
        return u;
    }

    // Exponential(rate) via inverse CDF.
    double next_exp(double rate);

  private:
    std::uint64_t state_;
};

// n i.i.d. exponential(epsilon) magnitudes. Throws std::invalid_argument on
// epsilon <= 0 or n < 0.
std::vector<double> exp_draw(int n, double epsilon, std::uint64_t seed);

}  // namespace histavg
