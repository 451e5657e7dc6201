#ifndef MCLAB_ONLINE_HPP
#define MCLAB_ONLINE_HPP

#include <memory>
#include <vector>

#include "mclab/games.hpp"
#include "mclab/types.hpp"

namespace mclab {

struct OnlineRound {
    PointId x;
    Label predicted;
    Label truth;
};

struct OnlineTranscript {
    std::vector<OnlineRound> rounds;
    int mistake_count = 0;
};

enum class OnlineLearnerKind { Soa, Tournament };

// Standard optimal algorithm: predict the label whose consistent version
// space has the largest Littlestone dimension, ties to the smallest label.
class SoaLearner {
public:
    explicit SoaLearner(std::shared_ptr<const LittlestoneSolver> solver);

    Label predict(PointId x) const;
    // Restricts the version space; throws ProtocolError when the feed is
    // unrealizable.
    void observe(PointId x, Label truth);
    const HypSet& version_space() const { return version_; }

private:
    std::shared_ptr<const LittlestoneSolver> solver_;
    HypSet version_;
};

// Tournament wrapper around the exponential-game strategy: every label pair
// is ranked by the strategy bit and the max-out-degree vertex of the induced
// orientation of the label clique wins. Mistakes advance the coupled game by
// one round committing to the revealed true label.
class TournamentLearner {
public:
    explicit TournamentLearner(std::shared_ptr<const ExpGameSolver> solver);

    Label predict(PointId x) const;
    void observe(PointId x, Label predicted, Label truth);
    int mistake_counter() const { return static_cast<int>(history_.size()); }

private:
    std::shared_ptr<const ExpGameSolver> solver_;
    std::vector<ExpHistoryEntry> history_;
};

// Adversary that descends a maximal shattered tree, forcing a mistake in
// every round for exactly littlestone_dim_k rounds against any learner.
class OptimalAdversary {
public:
    explicit OptimalAdversary(std::shared_ptr<const ExpGameSolver> solver);

    bool done() const { return !move_.has_value(); }
    PointId next_point() const;
    // Reveals the true label given the learner's prediction and advances.
    Label answer(Label predicted);

private:
    std::shared_ptr<const ExpGameSolver> solver_;
    HypSet family_;
    std::optional<ExpMove> move_;
};

// Feeds a fixed realizable sequence; throws ProtocolError naming the first
// violating round (1-based) when the sequence is not realizable.
OnlineTranscript run_online(const ConceptClass& cls, const LabeledSample& sequence,
                            OnlineLearnerKind kind);

// Plays the learner against the optimal adversary until the adversary's tree
// is exhausted.
OnlineTranscript run_online_adversarial(const ConceptClass& cls, OnlineLearnerKind kind);

} // namespace mclab

#endif
