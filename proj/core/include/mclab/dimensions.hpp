#ifndef MCLAB_DIMENSIONS_HPP
#define MCLAB_DIMENSIONS_HPP

#include <memory>
#include <optional>
#include <vector>

#include "mclab/hypset.hpp"
#include "mclab/types.hpp"

namespace mclab {

// Per-(point,label) membership masks over the hypotheses of one fixed class.
// All dimension and game recursions restrict by intersecting these masks, so
// a subfamily is always fingerprinted by a HypSet.
class RestrictionIndex {
public:
    explicit RestrictionIndex(ConceptClass cls);

    const ConceptClass& cls() const { return cls_; }
    HypSet full() const { return full_; }
    // Hypotheses with h(x) == y.
    const HypSet& mask(PointId x, Label y) const {
        return masks_[static_cast<size_t>(x) * static_cast<size_t>(k_ + 1) +
                      static_cast<size_t>(y)];
    }
    // Hypotheses defined at x.
    const HypSet& defined_mask(PointId x) const { return defined_[static_cast<size_t>(x)]; }
    // Hypotheses defined at x with h(x) != y.
    const HypSet& diff_mask(PointId x, Label y) const {
        return diff_[static_cast<size_t>(x) * static_cast<size_t>(k_ + 1) +
                     static_cast<size_t>(y)];
    }
    // Labels realized at x within the family, ascending.
    std::vector<Label> realized_labels(PointId x, const HypSet& family) const;

private:
    ConceptClass cls_;
    int k_;
    HypSet full_;
    std::vector<HypSet> masks_;
    std::vector<HypSet> defined_;
    std::vector<HypSet> diff_;
};

struct DimensionReport {
    int vc = -1;
    int natarajan = -1;
    int graph = -1;
    int littlestone_k = -1;  // -2 when not computed (partial mode)
};

// Witness for an N- or G-shattered point set. For a Graph witness only s0 is
// populated.
struct ShatterWitness {
    std::vector<PointId> points;
    std::vector<Label> s0;
    std::vector<Label> s1;
};

struct TreeDepthReport {
    int mll_depth = -1;
    int nl_depth = 0;
    int gl_depth = 0;
};

// Exhaustive dimension computations. Conventions: -1 for the empty class,
// 0 for a nonempty class that shatters no point.
int vc_dim(const ConceptClass& cls, ShatterWitness* witness = nullptr);
int natarajan_dim(const ConceptClass& cls, ShatterWitness* witness = nullptr);
int graph_dim(const ConceptClass& cls, ShatterWitness* witness = nullptr);
int littlestone_dim_k(const ConceptClass& cls);

// Replay a witness against the class; used by tests and the CLI.
bool check_natarajan_witness(const ConceptClass& cls, const ShatterWitness& w);
bool check_graph_witness(const ConceptClass& cls, const ShatterWitness& w);

constexpr int kMaxTreeDepth = 4;
constexpr long long kTreeTupleBudget = 10'000'000;

// Largest d <= max_depth such that a depth-d Natarajan-Littlestone
// (resp. Graph-Littlestone) tree exists. max_depth > kMaxTreeDepth raises
// LimitError, as does blowing the tuple budget.
int nl_tree_depth(const ConceptClass& cls, int max_depth);
int gl_tree_depth(const ConceptClass& cls, int max_depth);

// max over m-subsets C of |project(cls, C)|.
long long growth_function(const ConceptClass& cls, int m);

DimensionReport dimension_report(const ConceptClass& cls);
TreeDepthReport tree_depth_report(const ConceptClass& cls, int max_depth);

// Memoized multiclass Littlestone dimension over restricted subfamilies of a
// fixed total class. Shared by the online learners and the game solvers'
// cross-checks.
class LittlestoneSolver {
public:
    explicit LittlestoneSolver(const ConceptClass& cls);
    ~LittlestoneSolver();
    LittlestoneSolver(LittlestoneSolver&&) noexcept;

    const RestrictionIndex& index() const;
    int dim() const;
    int dim(const HypSet& family) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Explicit maximal shattered multiclass Littlestone tree: a binary tree whose
// node levels equal littlestone_dim_k(cls). Node 0 is the root; child ids are
// -1 below the last level.
struct LittlestoneTree {
    struct Node {
        PointId x;
        Label y0;
        Label y1;
        int child0 = -1;
        int child1 = -1;
    };
    std::vector<Node> nodes;
    int levels = 0;
};

// Empty tree (levels 0) when the class is empty or a singleton.
LittlestoneTree find_littlestone_tree(const ConceptClass& cls);

// Explicit Natarajan-Littlestone tree of exactly `depth` levels; level t
// nodes carry t points and two pointwise-different colorings, with 2^t
// children per node. nullopt when no such tree exists.
struct NlTree {
    struct Node {
        std::vector<PointId> points;
        std::vector<Label> s0;
        std::vector<Label> s1;
        std::vector<int> children;  // indexed by pattern bits read LSB-first
    };
    std::vector<Node> nodes;
    int depth = 0;
};

std::optional<NlTree> find_nl_tree(const ConceptClass& cls, int depth);

} // namespace mclab

#endif
