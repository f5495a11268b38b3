#include "histavg/learners.hpp"

#include <stdexcept>

namespace histavg {

FtarlLearner::FtarlLearner(int n, double epsilon) : n_(n), epsilon_(epsilon) {
    if (n < 2) throw std::invalid_argument("FtarlLearner: n must be >= 2");
    if (epsilon <= 0.0) throw std::invalid_argument("FtarlLearner: epsilon must be positive");
    cumulative_.assign(static_cast<std::size_t>(n_), 0.0);
}

void FtarlLearner::reset(std::uint64_t seed) {
    z_ = exp_draw(n_, epsilon_, seed);
    cumulative_.assign(static_cast<std::size_t>(n_), 0.0);
}

void FtarlLearner::set_perturbation(std::vector<double> z) {
    if (static_cast<int>(z.size()) != n_) throw std::invalid_argument("set_perturbation: dimension mismatch");
    for (double v : z)
        if (v < 0.0) throw std::invalid_argument("set_perturbation: negative magnitude");
    z_ = std::move(z);
    cumulative_.assign(static_cast<std::size_t>(n_), 0.0);
}

int FtarlLearner::leader() const {
    if (z_.empty()) throw std::logic_error("FtarlLearner: no perturbation drawn; call reset first");
    int best = 0;
    double best_score = cumulative_[0] - z_[0];
    for (int i = 1; i < n_; ++i) {
        const double s = cumulative_[static_cast<std::size_t>(i)] - z_[static_cast<std::size_t>(i)];
        if (s < best_score) {
            best_score = s;
            best = i;
        }
    }
    return best;
}

SimplexVector FtarlLearner::decide(int) { return SimplexVector::vertex(n_, leader()); }

void FtarlLearner::observe(const CostVector& g) {
    if (g.dim() != n_) throw std::invalid_argument("FtarlLearner::observe: dimension mismatch");
    for (int i = 0; i < n_; ++i) cumulative_[static_cast<std::size_t>(i)] += g[static_cast<std::size_t>(i)];
}

LsaLearner::LsaLearner(int n, int block_len, double inner_epsilon)
    : n_(n), block_len_(block_len), inner_epsilon_(inner_epsilon) {
    if (n < 2) throw std::invalid_argument("LsaLearner: n must be >= 2");
    if (block_len < 1) throw std::invalid_argument("LsaLearner: block length must be >= 1");
    if (inner_epsilon <= 0.0) throw std::invalid_argument("LsaLearner: inner epsilon must be positive");
    block_cumulative_.assign(static_cast<std::size_t>(n_), 0.0);
    block_sum_.assign(static_cast<std::size_t>(n_), 0.0);
}

void LsaLearner::reset(std::uint64_t seed) {
    stream_ = std::make_unique<SplitMix64>(seed);
    block_cumulative_.assign(static_cast<std::size_t>(n_), 0.0);
    block_sum_.assign(static_cast<std::size_t>(n_), 0.0);
    current_decision_ = 0;
}

SimplexVector LsaLearner::decide(int t) {
    if (!stream_) throw std::logic_error("LsaLearner: call reset before decide");
    if ((t - 1) % block_len_ == 0) {
        if (t > 1) {
            // hand the completed block's summed cost to the inner step
            for (int i = 0; i < n_; ++i) {
                block_cumulative_[static_cast<std::size_t>(i)] += block_sum_[static_cast<std::size_t>(i)];
                block_sum_[static_cast<std::size_t>(i)] = 0.0;
            }
        }
        int best = 0;
        double best_score = 0.0;
        for (int i = 0; i < n_; ++i) {
            const double s = block_cumulative_[static_cast<std::size_t>(i)] - stream_->next_exp(inner_epsilon_);
            if (i == 0 || s < best_score) {
                best_score = s;
                best = i;
            }
        }
        current_decision_ = best;
    }
    return SimplexVector::vertex(n_, current_decision_);
}

void LsaLearner::observe(const CostVector& g) {
    if (g.dim() != n_) throw std::invalid_argument("LsaLearner::observe: dimension mismatch");
    for (int i = 0; i < n_; ++i) block_sum_[static_cast<std::size_t>(i)] += g[static_cast<std::size_t>(i)];
}

}  // namespace histavg
