#pragma once

#include <cstddef>
#include <vector>

namespace histavg {

double dot(const std::vector<double>& a, const std::vector<double>& b);
double l1_distance(const std::vector<double>& a, const std::vector<double>& b);

// Index of the smallest entry; ties resolve to the lowest index.
int argmin_index(const std::vector<double>& v);

// Point on the probability simplex: nonnegative entries summing to one.
// Construction validates the invariants (entries >= -1e-12, sum within 1e-9).
class SimplexVector {
  public:
    explicit SimplexVector(std::vector<double> entries);

    static SimplexVector vertex(int n, int index);
    static SimplexVector uniform(int n);

    int dim() const { return static_cast<int>(entries_.size()); }
    double operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<double>& entries() const { return entries_; }

    // Index of the unit coordinate if this is a vertex, -1 otherwise.
    int vertex_index() const;

    bool operator==(const SimplexVector& other) const { return entries_ == other.entries_; }

    static constexpr double kNonnegTol = 1e-12;
    static constexpr double kSumTol = 1e-9;

  private:
    std::vector<double> entries_;
};

// Per-round cost vector. Entries are non-positive (unless the raw-sign mode
// is active) and bounded by `bound` in sup norm.
class CostVector {
  public:
    CostVector(std::vector<double> entries, double bound, bool allow_positive = false);

    int dim() const { return static_cast<int>(entries_.size()); }
    double operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<double>& entries() const { return entries_; }
    double bound() const { return bound_; }

  private:
    std::vector<double> entries_;
    double bound_;
};

// Running sum of observed cost vectors, starting at the zero vector.
class CumulativeCost {
  public:
    explicit CumulativeCost(int n) : entries_(n, 0.0), rounds_(0) {}

    void add(const CostVector& g);
    const std::vector<double>& entries() const { return entries_; }
    int rounds_accumulated() const { return rounds_; }
    double min_entry() const;

  private:
    std::vector<double> entries_;
    int rounds_;
};

}  // namespace histavg
