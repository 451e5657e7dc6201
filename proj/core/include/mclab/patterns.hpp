#ifndef MCLAB_PATTERNS_HPP
#define MCLAB_PATTERNS_HPP

#include <memory>
#include <vector>

#include "mclab/games.hpp"
#include "mclab/types.hpp"

namespace mclab {

// True iff some h in the class matches s_{bits[i]}(x_i) at every position.
bool is_realized_pattern(const ConceptClass& cls, const std::vector<PointId>& points,
                         const std::vector<Label>& s0, const std::vector<Label>& s1,
                         const Pattern& bits);

// Frozen avoidance function: the NL-game strategy applied after the recorded
// bad-block history. Callable on tuples of exactly `length` points.
class AvoidanceFunction {
public:
    AvoidanceFunction(std::shared_ptr<const NlGameSolver> solver,
                      std::vector<NlHistoryEntry> history);

    int length() const { return static_cast<int>(history_.size()) + 1; }
    int k() const;
    Pattern operator()(const std::vector<PointId>& points, const std::vector<Label>& s0,
                       const std::vector<Label>& s1) const;

private:
    std::shared_ptr<const NlGameSolver> solver_;
    std::vector<NlHistoryEntry> history_;
};

// Streaming pattern avoider: scans the data in blocks of the current length,
// tries every everywhere-different coloring pair of the block in fixed
// lexicographic order, and asks the NL-game strategy for a pattern. When a
// queried pattern is realized by the observed labels the game advances one
// round and the block length grows by one.
class PatternAvoider {
public:
    // Refuses classes whose nl game value reaches the horizon: convergence
    // could then need strategy queries past the cap.
    explicit PatternAvoider(std::shared_ptr<const NlGameSolver> solver);

    void feed(PointId x, Label y);
    void feed(const LabeledSample& stream);

    int current_length() const { return static_cast<int>(history_.size()) + 1; }
    int growth_events() const { return static_cast<int>(history_.size()); }
    const std::vector<std::pair<PointId, Label>>& stream() const { return stream_; }
    AvoidanceFunction function() const { return AvoidanceFunction(solver_, history_); }

private:
    std::shared_ptr<const NlGameSolver> solver_;
    std::vector<NlHistoryEntry> history_;
    std::vector<std::pair<PointId, Label>> stream_;
    HypSet consistent_;
};

// One window of the per(g) failure event: does g emit a pattern that the
// observed labels realize, for some everywhere-different coloring pair of
// this block?
bool avoidance_fails_on_block(const AvoidanceFunction& g, const std::vector<PointId>& xs,
                              const std::vector<Label>& ys);

// All labelings f of the given points such that no t-subset together with any
// everywhere-different coloring pair realizes g's pattern. points.size() < t
// yields the unrestricted labeling cube. With verify_ndim the Natarajan
// dimension of the result is checked to be < t.
ConceptClass build_pattern_restricted_class(const std::vector<PointId>& points,
                                            const AvoidanceFunction& g, int t,
                                            bool verify_ndim = false);

} // namespace mclab

#endif
