#include "histavg/history.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

namespace histavg {

namespace {
std::atomic<bool> g_identity_checks{false};
}

void HistoryState::set_identity_checks(bool enabled) { g_identity_checks.store(enabled); }
bool HistoryState::identity_checks_enabled() { return g_identity_checks.load(); }

HistoryState::HistoryState(int horizon, int dim) : horizon_(horizon), dim_(dim) {
    if (horizon < 1) throw std::invalid_argument("HistoryState: horizon must be >= 1");
    if (dim < 2) throw std::invalid_argument("HistoryState: dimension must be >= 2");
    recompute_every_ = std::min(horizon_, 1024);
    window_.resize(static_cast<std::size_t>(horizon_));
    window_sum_.assign(static_cast<std::size_t>(dim_), 0.0);
    y_.assign(static_cast<std::size_t>(dim_), 0.0);
}

void HistoryState::push(const std::vector<double>& v) {
    if (count_ < horizon_) {
        window_[static_cast<std::size_t>((head_ + count_) % horizon_)] = v;
        ++count_;
        for (int i = 0; i < dim_; ++i) window_sum_[static_cast<std::size_t>(i)] += v[static_cast<std::size_t>(i)];
    } else {
        auto& oldest = window_[static_cast<std::size_t>(head_)];
        for (int i = 0; i < dim_; ++i)
            window_sum_[static_cast<std::size_t>(i)] += v[static_cast<std::size_t>(i)] - oldest[static_cast<std::size_t>(i)];
        oldest = v;
        head_ = (head_ + 1) % horizon_;
    }
}

void HistoryState::recompute_window_sum() {
    std::fill(window_sum_.begin(), window_sum_.end(), 0.0);
    for (int k = 0; k < count_; ++k) {
        const auto& v = window_[static_cast<std::size_t>((head_ + k) % horizon_)];
        for (int i = 0; i < dim_; ++i) window_sum_[static_cast<std::size_t>(i)] += v[static_cast<std::size_t>(i)];
    }
}

SimplexVector HistoryState::advance(const SimplexVector& input) {
    if (input.dim() != dim_) throw std::invalid_argument("HistoryState::advance: dimension mismatch");
    const int t = round_ + 1;

    // x^t = y^{t-1} + beta^t * v^t
    std::vector<double> x(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i)
        x[static_cast<std::size_t>(i)] = y_[static_cast<std::size_t>(i)] + beta_next_ * input[static_cast<std::size_t>(i)];

    if (identity_checks_enabled() && round_ >= 1) {
        const double step = l1_distance(x, prev_x_);
        const double bound = 2.0 / std::min(round_, horizon_);
        if (step > bound + 1e-9)
            throw std::logic_error("state step bound violated at round " + std::to_string(t) +
                                   ": ||x^{t+1}-x^t||_1 = " + std::to_string(step) + " > " +
                                   std::to_string(bound));
    }
    prev_x_ = x;

    push(input.entries());
    round_ = t;
    if (t % recompute_every_ == 0) recompute_window_sum();

    if (t < horizon_) {
        const double inv = 1.0 / (t + 1);
        for (int i = 0; i < dim_; ++i) y_[static_cast<std::size_t>(i)] = window_sum_[static_cast<std::size_t>(i)] * inv;
    } else {
        // drop the oldest window entry: y^t spans v^{t-H+2} .. v^t
        const auto& oldest = window_[static_cast<std::size_t>(head_)];
        const double inv = 1.0 / horizon_;
        for (int i = 0; i < dim_; ++i)
            y_[static_cast<std::size_t>(i)] =
                (window_sum_[static_cast<std::size_t>(i)] - oldest[static_cast<std::size_t>(i)]) * inv;
    }
    beta_next_ = 1.0 / std::min(t + 1, horizon_);
    return SimplexVector(std::move(x));
}

}  // namespace histavg
