#include "histavg/simplex.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace histavg {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double l1_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("l1_distance: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return s;
}

int argmin_index(const std::vector<double>& v) {
    if (v.empty()) throw std::invalid_argument("argmin_index: empty vector");
    int best = 0;
    for (int i = 1; i < static_cast<int>(v.size()); ++i) {
        if (v[static_cast<std::size_t>(i)] < v[static_cast<std::size_t>(best)]) best = i;
    }
    return best;
}

SimplexVector::SimplexVector(std::vector<double> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("SimplexVector: empty");
    double sum = 0.0;
    for (double v : entries_) {
        if (v < -kNonnegTol)
            throw std::invalid_argument("SimplexVector: negative entry " + std::to_string(v));
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSumTol)
        throw std::invalid_argument("SimplexVector: entries sum to " + std::to_string(sum));
}

SimplexVector SimplexVector::vertex(int n, int index) {
    if (n < 1 || index < 0 || index >= n) throw std::invalid_argument("SimplexVector::vertex: bad index");
    std::vector<double> e(static_cast<std::size_t>(n), 0.0);
    e[static_cast<std::size_t>(index)] = 1.0;
    return SimplexVector(std::move(e));
}

SimplexVector SimplexVector::uniform(int n) {
    if (n < 1) throw std::invalid_argument("SimplexVector::uniform: n must be positive");
    return SimplexVector(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
}

int SimplexVector::vertex_index() const {
    int unit = -1;
    for (int i = 0; i < dim(); ++i) {
        double v = entries_[static_cast<std::size_t>(i)];
        if (v == 1.0) {
            if (unit >= 0) return -1;
            unit = i;
        } else if (v != 0.0) {
            return -1;
        }
    }
    return unit;
}

CostVector::CostVector(std::vector<double> entries, double bound, bool allow_positive)
    : entries_(std::move(entries)), bound_(bound) {
    if (entries_.empty()) throw std::invalid_argument("CostVector: empty");
    if (bound_ < 0.0) throw std::invalid_argument("CostVector: negative bound");
    for (double v : entries_) {
        if (!allow_positive && v > 0.0)
            throw std::invalid_argument("CostVector: positive entry " + std::to_string(v));
        if (std::abs(v) > bound_ + 1e-12)
            throw std::invalid_argument("CostVector: entry exceeds bound " + std::to_string(v));
    }
}

void CumulativeCost::add(const CostVector& g) {
    if (g.dim() != static_cast<int>(entries_.size()))
        throw std::invalid_argument("CumulativeCost: dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += g[i];
    ++rounds_;
}

double CumulativeCost::min_entry() const {
    return entries_[static_cast<std::size_t>(argmin_index(entries_))];
}

}  // namespace histavg
