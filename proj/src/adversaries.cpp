#include "histavg/adversaries.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "histavg/rng.hpp"

namespace histavg {

namespace {

void check_dims(int n, int T) {
    if (n < 2) throw std::invalid_argument("cost generator: n must be >= 2");
    if (T < 0) throw std::invalid_argument("cost generator: T must be nonnegative");
}

double signed_cost(double magnitude, bool raw_sign) { return raw_sign ? magnitude : -magnitude; }

}  // namespace

CostSequence stoc_id(int n, int T, std::uint64_t seed, bool raw_sign) {
    check_dims(n, T);
    SplitMix64 stream(seed);
    CostSequence seq{n, 1.0, raw_sign, {}};
    seq.costs.reserve(static_cast<std::size_t>(T));
    for (int t = 0; t < T; ++t) {
        std::vector<double> g(static_cast<std::size_t>(n));
        for (double& v : g) v = signed_cost(stream.next_u01(), raw_sign);
        seq.costs.emplace_back(std::move(g), seq.bound, raw_sign);
    }
    return seq;
}

std::vector<std::pair<double, double>> stoc_het_intervals(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("stoc_het_intervals: n must be >= 2");
    SplitMix64 stream(seed);
    std::vector<std::pair<double, double>> intervals(static_cast<std::size_t>(n));
    for (auto& iv : intervals) {
        double u = stream.next_u01();
        double w = stream.next_u01();
        iv = {std::min(u, w), std::max(u, w)};
    }
    return intervals;
}

CostSequence stoc_het(int n, int T, std::uint64_t seed, bool raw_sign) {
    check_dims(n, T);
    SplitMix64 stream(seed);
    // interval draws come first so the stream position is shared with
    // stoc_het_intervals
    std::vector<std::pair<double, double>> intervals(static_cast<std::size_t>(n));
    for (auto& iv : intervals) {
        double u = stream.next_u01();
        double w = stream.next_u01();
        iv = {std::min(u, w), std::max(u, w)};
    }
    CostSequence seq{n, 1.0, raw_sign, {}};
    seq.costs.reserve(static_cast<std::size_t>(T));
    for (int t = 0; t < T; ++t) {
        std::vector<double> g(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const auto& [a, b] = intervals[static_cast<std::size_t>(i)];
            g[static_cast<std::size_t>(i)] = signed_cost(a + stream.next_u01() * (b - a), raw_sign);
        }
        seq.costs.emplace_back(std::move(g), seq.bound, raw_sign);
    }
    return seq;
}

CostSequence cyc(int n, int T, int L) {
    check_dims(n, T);
    if (L < 1) throw std::invalid_argument("cyc: L must be >= 1");
    CostSequence seq{n, 1.0, false, {}};
    seq.costs.reserve(static_cast<std::size_t>(T));
    for (int t = 1; t <= T; ++t) {
        std::vector<double> g(static_cast<std::size_t>(n), 0.0);
        const int phase = ((t + L - 1) / L - 1) % n;  // action 0 for rounds 1..L, then action 1, ...
        g[static_cast<std::size_t>(phase)] = -1.0;
        seq.costs.emplace_back(std::move(g), seq.bound, false);
    }
    return seq;
}

CostSequence lower_bound_adversary(int T, int H, std::uint64_t coin_seed) {
    if (T < 1) throw std::invalid_argument("lower_bound_adversary: T must be >= 1");
    if (H < 4 || H % 4 != 0)
        throw std::invalid_argument("lower_bound_adversary: H must be a positive multiple of 4");
    if (static_cast<double>(H) > 0.8 * static_cast<double>(T))
        throw std::invalid_argument("lower_bound_adversary: requires H <= 0.8 T");
    const int t_switch = T - H / 4;
    SplitMix64 stream(coin_seed);
    const int hit = stream.next_u01() < 0.5 ? 0 : 1;
    CostSequence seq{2, 1.0, false, {}};
    seq.costs.reserve(static_cast<std::size_t>(T));
    for (int t = 1; t <= T; ++t) {
        std::vector<double> g(2, 0.0);
        if (t > t_switch) g[static_cast<std::size_t>(hit)] = -1.0;
        seq.costs.emplace_back(std::move(g), seq.bound, false);
    }
    return seq;
}

CostSequence load_cost_csv(const std::string& path, double bound, bool raw_sign) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cost file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty cost file: " + path);

    // header t,g_1,...,g_n
    int n = -1;
    {
        std::stringstream ss(line);
        std::string field;
        int count = 0;
        while (std::getline(ss, field, ',')) ++count;
        n = count - 1;
    }
    if (n < 2) throw std::runtime_error("cost file needs at least columns t,g_1,g_2: " + path);

    CostSequence seq{n, bound, raw_sign, {}};
    int expected_t = 1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        if (!std::getline(ss, field, ',')) throw std::runtime_error("bad row in " + path);
        if (std::stoi(field) != expected_t)
            throw std::runtime_error("cost file rounds must be 1..T in order: " + path);
        std::vector<double> g;
        g.reserve(static_cast<std::size_t>(n));
        while (std::getline(ss, field, ',')) g.push_back(std::stod(field));
        if (static_cast<int>(g.size()) != n) throw std::runtime_error("bad row width in " + path);
        seq.costs.emplace_back(std::move(g), bound, raw_sign);
        ++expected_t;
    }
    return seq;
}

}  // namespace histavg
