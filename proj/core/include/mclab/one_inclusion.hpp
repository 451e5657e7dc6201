#ifndef MCLAB_ONE_INCLUSION_HPP
#define MCLAB_ONE_INCLUSION_HPP

#include <vector>

#include "mclab/types.hpp"

namespace mclab {

// One-inclusion hypergraph of a class projected onto a point tuple. Vertices
// are the realized fully-defined label vectors; a hyperedge is a maximal
// group of >= 2 vertices that agree everywhere except at one free coordinate.
struct OneInclusionGraph {
    std::vector<PointId> points;                // coordinate c -> point id
    std::vector<std::vector<int8_t>> vertices;  // sorted, unique
    struct Hyperedge {
        int free_coord;
        std::vector<int> members;  // vertex indices, ascending
    };
    std::vector<Hyperedge> edges;
    // edge index -> member vertex the edge is assigned to; filled by orient.
    std::vector<int> orientation;

    bool oriented() const { return orientation.size() == edges.size(); }
};

struct OrientationReport {
    int max_out_degree = 0;
    double bound = 0.0;  // Ndim(restriction) * max(1, log2(k+1))
    bool within_bound = true;
};

OneInclusionGraph build_graph(const ConceptClass& cls, const std::vector<PointId>& points);

// Orients every hyperedge toward one member, minimizing the maximum
// out-degree exactly (out-degree of v = edges containing v assigned
// elsewhere). Binary search on the bound with a max-flow feasibility check.
// Returns the achieved maximum out-degree.
int orient_min_max_outdegree(OneInclusionGraph& graph);

// Compares the achieved out-degree with the Natarajan bound of the class
// restricted to the graph's points.
OrientationReport orientation_report(const OneInclusionGraph& graph, const ConceptClass& cls);

// Transductive prediction: build the graph on the distinct points of
// labeled + test, locate the vertices consistent with the labels, and follow
// the orientation on the test coordinate. Partial classes go through the
// total completion class first (constant 0 when the completion is empty).
// Always returns a defined label; unrealizable labeled samples raise
// ProtocolError.
Label one_inclusion_predict(const ConceptClass& cls, const LabeledSample& labeled,
                            PointId test);

// All total labelings of the given distinct points whose full graphs are
// realizable samples for the partial class, as a total class over
// 0..points.size()-1 (coordinate i is points[i]).
ConceptClass partial_completion_class(const ConceptClass& cls,
                                      const std::vector<PointId>& points);

struct LeaveOneOutResult {
    int mistakes = 0;
    int count = 0;
    double fraction() const { return count ? static_cast<double>(mistakes) / count : 0.0; }
};

// Exact cyclic leave-one-out error: hold out each of the m labeled points
// once and predict it from the rest over one shared orientation.
LeaveOneOutResult leave_one_out(const ConceptClass& cls, const std::vector<PointId>& points,
                                const std::vector<Label>& labels);

} // namespace mclab

#endif
