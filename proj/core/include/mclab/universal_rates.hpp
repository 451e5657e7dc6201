#ifndef MCLAB_UNIVERSAL_RATES_HPP
#define MCLAB_UNIVERSAL_RATES_HPP

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "mclab/distribution.hpp"
#include "mclab/games.hpp"
#include "mclab/online.hpp"
#include "mclab/patterns.hpp"
#include "mclab/types.hpp"

namespace mclab {

// Shared per-class solver state so Monte-Carlo trials on one thread reuse
// memo tables. Not safe for concurrent use; build one per worker.
struct LearnerContext {
    std::shared_ptr<const ExpGameSolver> exp_solver;
    std::shared_ptr<const NlGameSolver> nl_solver;  // null until requested

    static LearnerContext exponential(const ConceptClass& cls);
    static LearnerContext linear(const ConceptClass& cls, int horizon = kMaxTreeDepth);
};

struct BatchPlan {
    int t_hat = 0;
    int batch_count = 0;
    bool fallback = false;  // the estimator hit the infinity sentinel
    std::vector<std::pair<int, int>> batch_ranges;  // [begin, end) sample indices
};

// Plurality vote over member predictors, ties to the smallest label.
class MajorityPredictor {
public:
    MajorityPredictor(int k, std::vector<std::function<Label(PointId)>> members)
        : k_(k), members_(std::move(members)) {}

    Label predict(PointId x) const;
    Label operator()(PointId x) const { return predict(x); }
    size_t member_count() const { return members_.size(); }
    Label member_predict(size_t i, PointId x) const { return members_[i](x); }

private:
    int k_;
    std::vector<std::function<Label(PointId)>> members_;
};

// t_hat = first t <= floor(n/2) whose first-half batch learners all stay
// clean on the held-out second half for at least 3/4 of the batches.
// Infinity sentinel falls back to floor(n/2), flagged.
BatchPlan estimate_t_hat_exp(const LabeledSample& dataset, const LearnerContext& ctx);

// floor(n/(2 t_hat)) tournament learners trained online on disjoint batches
// of the first half, aggregated by plurality.
MajorityPredictor learn_exponential(const LabeledSample& dataset, const LearnerContext& ctx);

// Quarter-based estimator: avoiders train on quarter 1, t_hat tests their
// pattern-avoidance failures on quarter 2, and the one-inclusion predictors
// read the second half through the pattern-restricted class.
MajorityPredictor learn_linear(const LabeledSample& dataset, const LearnerContext& ctx);

// The two-atom distribution pair of the exponential lower bound: h0, h1 agree
// at x and split at x'; P_i puts mass 1/2 on (x, y) and 1/2 on (x', y_i). No
// witness (degenerate class) raises ConstructionError.
std::pair<FiniteDistribution, FiniteDistribution> lower_bound_exp_pair(const ConceptClass& cls);

// Distribution along one branch of a shattered multiclass Littlestone tree:
// level l atom carries weight 2^-(l+1); the last level absorbs the tail.
// `branch` provides one descent bit per node level.
FiniteDistribution branch_distribution(const ConceptClass& cls, const LittlestoneTree& tree,
                                       const std::vector<uint8_t>& branch);

// Distribution along one branch of an NL tree: the level-l node spreads mass
// p_l uniformly over its l points, labeled by a hypothesis N-consistent with
// the whole branch.
FiniteDistribution slow_rate_distribution(const ConceptClass& cls, const NlTree& tree,
                                          const std::vector<Pattern>& branch,
                                          const std::vector<double>& level_mass);

} // namespace mclab

#endif
