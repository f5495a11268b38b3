#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "histavg/simplex.hpp"

namespace histavg {

// A full oblivious cost sequence, fixed before any learner decision.
struct CostSequence {
    int n = 0;
    double bound = 1.0;    // sup-norm bound M
    bool raw_sign = false; // true when entries are the unnegated [0,1] variant
    std::vector<CostVector> costs;  // g^1 .. g^T

    int rounds() const { return static_cast<int>(costs.size()); }
};

// Every entry i.i.d. uniform on [-1, 0] (on [0, 1] under raw_sign).
CostSequence stoc_id(int n, int T, std::uint64_t seed, bool raw_sign = false);

// Per-action interval [a_i, b_i], the sorted pair of two uniform draws; then
// g_i^t i.i.d. uniform on [-b_i, -a_i] ([a_i, b_i] under raw_sign).
CostSequence stoc_het(int n, int T, std::uint64_t seed, bool raw_sign = false);

// The interval endpoints stoc_het(n, T, seed) uses, as (a_i, b_i) pairs.
std::vector<std::pair<double, double>> stoc_het_intervals(int n, std::uint64_t seed);

// g^t = -e_j with j cycling through the actions, each held for L rounds.
CostSequence cyc(int n, int T, int L);

// Two actions, zero cost through T_s = T - H/4, then one fair-coin-selected
// unit cost vector for every remaining round. Requires H a multiple of 4
// with H <= 0.8 T.
CostSequence lower_bound_adversary(int T, int H, std::uint64_t coin_seed);

// Reads a cost sequence from a CSV file with header t,g_1,...,g_n. Entries
// must be <= 0 unless raw_sign. Throws std::runtime_error on malformed input.
CostSequence load_cost_csv(const std::string& path, double bound = 1.0, bool raw_sign = false);

// Round-by-round access to a cost sequence, so tests can instrument the
// order in which the driver reads costs.
class CostSource {
  public:
    virtual ~CostSource() = default;
    virtual int dim() const = 0;
    virtual int rounds() const = 0;
    virtual const CostVector& cost(int t) = 0;  // t = 1..rounds()
};

class SequenceSource : public CostSource {
  public:
    explicit SequenceSource(CostSequence seq) : seq_(std::move(seq)) {}
    int dim() const override { return seq_.n; }
    int rounds() const override { return seq_.rounds(); }
    const CostVector& cost(int t) override { return seq_.costs.at(static_cast<std::size_t>(t - 1)); }
    const CostSequence& sequence() const { return seq_; }

  private:
    CostSequence seq_;
};

}  // namespace histavg
