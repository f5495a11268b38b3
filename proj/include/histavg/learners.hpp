#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "histavg/rng.hpp"
#include "histavg/simplex.hpp"

namespace histavg {

// Online learner over the simplex. decide(t) may rely only on the costs
// passed to observe() for rounds 1..t-1; the driver enforces the call order
// decide(1), observe(g^1), decide(2), observe(g^2), ...
class Learner {
  public:
    virtual ~Learner() = default;

    virtual int dim() const = 0;
    virtual std::string name() const = 0;

    // Begins a fresh episode; all internal randomness derives from `seed`.
    virtual void reset(std::uint64_t seed) = 0;

    virtual SimplexVector decide(int t) = 0;
    virtual void observe(const CostVector& g) = 0;

    // Fixed perturbation vector of perturbed-leader learners, when one exists.
    virtual const std::vector<double>* perturbation() const { return nullptr; }
};

// Follow-the-perturbed-leader with a single perturbation draw per episode:
// at round t plays the vertex minimizing G^{t-1}_i - Z_i over i, where
// Z_i ~ Exp(epsilon) are drawn once at reset and G is the running cost sum.
// Ties resolve to the lowest index.
class FtarlLearner : public Learner {
  public:
    FtarlLearner(int n, double epsilon);

    int dim() const override { return n_; }
    std::string name() const override { return "ftarl"; }
    void reset(std::uint64_t seed) override;
    SimplexVector decide(int t) override;
    void observe(const CostVector& g) override;
    const std::vector<double>* perturbation() const override { return &z_; }

    // Installs an explicit perturbation vector (diagnostics and tests).
    void set_perturbation(std::vector<double> z);

    double epsilon() const { return epsilon_; }
    const std::vector<double>& cumulative_cost() const { return cumulative_; }

    // argmin_i(G_i - Z_i) on the current running sum.
    int leader() const;

  private:
    int n_;
    double epsilon_;
    std::vector<double> z_;
    std::vector<double> cumulative_;
};

// The memoryless baseline: identical decision rule to FtarlLearner (the
// distinction is the epsilon the harness schedules for it).
class FtplLearner : public FtarlLearner {
  public:
    using FtarlLearner::FtarlLearner;
    std::string name() const override { return "ftpl"; }
};

// Low-switch baseline: decisions are frozen over blocks of `block_len`
// rounds. At each block boundary the summed cost of the completed block is
// fed to an inner perturbed-leader step with a fresh perturbation draw.
class LsaLearner : public Learner {
  public:
    LsaLearner(int n, int block_len, double inner_epsilon);

    int dim() const override { return n_; }
    std::string name() const override { return "lsa"; }
    void reset(std::uint64_t seed) override;
    SimplexVector decide(int t) override;
    void observe(const CostVector& g) override;

    int block_len() const { return block_len_; }
    double inner_epsilon() const { return inner_epsilon_; }

  private:
    int n_;
    int block_len_;
    double inner_epsilon_;
    std::unique_ptr<SplitMix64> stream_;
    std::vector<double> block_cumulative_;  // sums over completed blocks
    std::vector<double> block_sum_;         // the block in progress
    int current_decision_ = 0;
};

}  // namespace histavg
