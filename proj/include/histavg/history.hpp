#pragma once

#include <vector>

#include "histavg/simplex.hpp"

namespace histavg {

// State machine for the trailing-average dynamics. Feeding inputs
// v^1, v^2, ... yields states
//
//   x^t = mean of the last min(t, H) inputs,
//
// maintained incrementally as x^t = y^{t-1} + beta^t v^t with
// beta^t = 1/min(t, H) and y^0 = 0. The window sum is recomputed exactly
// from the ring buffer every min(H, 1024) rounds to bound drift.
class HistoryState {
  public:
    // Throws std::invalid_argument unless horizon >= 1 and dim >= 2.
    HistoryState(int horizon, int dim);

    // Consumes v^{t} for t = round()+1, returns x^{t}, advances the state.
    SimplexVector advance(const SimplexVector& input);

    int round() const { return round_; }
    int horizon() const { return horizon_; }
    int dim() const { return dim_; }

    // beta for the upcoming round: 1/min(round+1, H).
    double beta_next() const { return beta_next_; }

    // y^{round}; the zero vector at round 0 and whenever H == 1.
    const std::vector<double>& y_current() const { return y_; }

    int window_size() const { return count_; }

    // When enabled, advance() checks the step bound
    // ||x^{t+1} - x^t||_1 <= 2/min(t, H) and throws std::logic_error naming
    // the round on violation. Test binaries switch this on globally.
    static void set_identity_checks(bool enabled);
    static bool identity_checks_enabled();

  private:
    void push(const std::vector<double>& v);
    void recompute_window_sum();

    int horizon_;
    int dim_;
    int round_ = 0;
    int recompute_every_;
    double beta_next_ = 1.0;
    std::vector<std::vector<double>> window_;  // ring buffer, capacity H
    int head_ = 0;                             // index of the oldest entry
    int count_ = 0;
    std::vector<double> window_sum_;
    std::vector<double> y_;
    std::vector<double> prev_x_;  // state at the previous round, for the step check
};

}  // namespace histavg
