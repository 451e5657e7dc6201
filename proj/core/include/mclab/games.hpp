#ifndef MCLAB_GAMES_HPP
#define MCLAB_GAMES_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "mclab/dimensions.hpp"
#include "mclab/hypset.hpp"
#include "mclab/types.hpp"

namespace mclab {

// One adversary move of the exponential game: a point and two candidate
// labels y0 != y1. The learner answers with a bit eta; the consistent
// subclass keeps the hypotheses with h(x) == y_eta.
struct ExpMove {
    PointId x;
    Label y0;
    Label y1;
};

struct ExpHistoryEntry {
    ExpMove move;
    int eta;
};

// Exact minimax solver for the exponential game. The game value of a family
// is the number of rounds an optimal adversary keeps the consistent subclass
// nonempty against an optimal learner; it coincides with the multiclass
// Littlestone dimension.
class ExpGameSolver {
public:
    explicit ExpGameSolver(const ConceptClass& cls);
    ~ExpGameSolver();
    ExpGameSolver(ExpGameSolver&&) noexcept;

    const RestrictionIndex& index() const;

    // -1 for the empty family/class (sentinel).
    int value() const;
    int value(const HypSet& family) const;

    // Learner bit for the pending move: the eta whose kept subclass has the
    // smaller game value (empty counts as -1); ties break to eta = 0. The
    // resulting value is strictly below the current one.
    int strategy(const std::vector<ExpHistoryEntry>& history, const ExpMove& move) const;

    HypSet family_after(const std::vector<ExpHistoryEntry>& history) const;

    // An optimal adversary move from `family`: both restrictions stay
    // nonempty and min of their values is value(family) - 1. nullopt when the
    // value is 0.
    std::optional<ExpMove> best_adversary_move(const HypSet& family) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// One adversary move of the NL game at round t: t points and two colorings
// that differ at every position. Points may repeat (the definition allows
// it); repeats never help the adversary.
struct NlMove {
    std::vector<PointId> points;
    std::vector<Label> s0;
    std::vector<Label> s1;
};

using Pattern = std::vector<uint8_t>;  // bits; bit i selects s0 (0) or s1 (1)

struct NlHistoryEntry {
    NlMove move;
    Pattern pattern;
};

class NlGameSolver {
public:
    // horizon <= kMaxTreeDepth; larger values raise LimitError.
    NlGameSolver(const ConceptClass& cls, int horizon);
    ~NlGameSolver();
    NlGameSolver(NlGameSolver&&) noexcept;

    const RestrictionIndex& index() const;
    int horizon() const;

    // Rounds the adversary survives under optimal play, clipped at the
    // horizon; equals min(nl_tree_depth, horizon). -1 for an empty class.
    int value() const;
    int value(const HypSet& family, int round) const;

    // Pattern minimizing the successor value (empty family counts as -1);
    // ties break to the lexicographically smallest pattern read LSB-first
    // position 0 first. Results are cached per (family, move).
    Pattern strategy(const std::vector<NlHistoryEntry>& history, const NlMove& move) const;

    HypSet family_after(const std::vector<NlHistoryEntry>& history) const;

    // Restriction of `family` by one (move, pattern) round.
    HypSet apply_round(const HypSet& family, const NlMove& move, const Pattern& pattern) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace mclab

#endif
