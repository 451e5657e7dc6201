#ifndef MCLAB_PARTIAL_CONCEPTS_HPP
#define MCLAB_PARTIAL_CONCEPTS_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mclab/types.hpp"

namespace mclab {

// Conflict graph of a partial class: one vertex per hypothesis, an edge when
// two hypotheses disagree at some commonly defined point. Groups of pairwise
// non-conflicting hypotheses share a total completion, so disambiguations
// correspond to proper colorings.
struct ConflictGraph {
    int vertex_count = 0;
    std::vector<std::vector<bool>> adjacent;
    std::vector<std::pair<int, int>> edges;
};

ConflictGraph build_conflict_graph(const ConceptClass& partial);

constexpr int kChromaticVertexCap = 24;

// Exact chromatic number by DSATUR-ordered branch and bound.
int chromatic_number(const ConflictGraph& graph);

// True iff every partial hypothesis extends to some total hypothesis that
// agrees on its support. Domains and label bounds must match.
bool is_disambiguation(const ConceptClass& total, const ConceptClass& partial);

// chi of the conflict graph = minimum size of a disambiguating total class.
int min_disambiguation_size(const ConceptClass& partial, int limit);

struct SuppVcReport {
    int supp_vc = -1;   // VC dimension of {supp(h)}
    int ndim = -1;      // Natarajan dimension of the partial class
    int ndim_k2 = -1;   // Natarajan dimension with the marker as a (k+2)-th label
    int gdim_k2 = -1;   // Graph dimension with the marker as a (k+2)-th label
};

SuppVcReport supp_vc_dim(const ConceptClass& partial);

struct SspResult {
    bool holds = true;
    long long growth = 0;
    long long bound = 0;
    int vc = -1;
    std::optional<std::vector<PointId>> counterexample;
};

// Growth-function Sauer-Shelah-Perles bound for binary partial classes:
// Pi_H(m) <= sum_{i<=VC} C(m, i). A false return indicates an implementation
// bug; the test suite treats it as one.
SspResult ssp_check(const ConceptClass& partial_binary, int m);

// Biclique partition instance: a simple graph plus complete bipartite blocks
// partitioning its edge set.
struct BicliqueInstance {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    struct Block {
        std::vector<int> left;
        std::vector<int> right;
    };
    std::vector<Block> blocks;
};

// Text format: `vertices <n>`, `edge <u> <v>` lines, then
// `block <j>: L=<id,id,...> R=<id,...>`. '#' starts a comment. Validation:
// blocks are edge-disjoint complete bipartite subgraphs covering every edge.
BicliqueInstance read_biclique(std::istream& in, const std::string& name = "<stream>");
BicliqueInstance read_biclique_file(const std::string& path);

// The canonical 4-vertex instance with blocks ({a},{c}) and ({b},{d}).
BicliqueInstance c4_matching_instance();
// The 4-cycle a-b-c-d partitioned into the two stars at a and c.
BicliqueInstance c4_cycle_instance();

// Partial class over the block indices: one concept per vertex tuple of the
// `copies` tensor power, with labels sum_j 2^(j-1) c_{v_j}(i) and the marker
// absorbing. k = 2^copies - 1.
ConceptClass build_biclique_class(const BicliqueInstance& instance, int copies);

// One-inclusion partial predictor boosted by plurality over ceil(ln(1/delta))
// disjoint splits. epsilon >= 1 returns the trivial constant predictor.
std::function<Label(PointId)> partial_pac_learn(const ConceptClass& partial,
                                                const LabeledSample& dataset, double epsilon,
                                                double delta);

} // namespace mclab

#endif
