#include "mclab/one_inclusion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <string>

#include "mclab/dimensions.hpp"
#include "mclab/errors.hpp"

namespace mclab {

OneInclusionGraph build_graph(const ConceptClass& cls, const std::vector<PointId>& points) {
    OneInclusionGraph g;
    g.points = points;
    auto projected = project(cls, points);  // validates distinctness and range
    g.vertices.assign(projected.begin(), projected.end());

    const int m = static_cast<int>(points.size());
    for (int c = 0; c < m; ++c) {
        // Group vertices by their labels off coordinate c.
        std::map<std::vector<int8_t>, std::vector<int>> groups;
        for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
            std::vector<int8_t> key = g.vertices[static_cast<size_t>(v)];
            key[static_cast<size_t>(c)] = -2;
            groups[std::move(key)].push_back(v);
        }
        for (auto& [key, members] : groups)
            if (members.size() >= 2) g.edges.push_back({c, members});
    }
    return g;
}

namespace {

// Max flow on the edge/vertex bipartite network with unit supplies per
// hyperedge and the given per-vertex demands; returns whether all demands can
// be met and, if so, the edge -> vertex assignment through which flow ran.
bool demands_feasible(const OneInclusionGraph& g, const std::vector<int>& demand,
                      std::vector<int>* assignment) {
    const int ne = static_cast<int>(g.edges.size());
    const int nv = static_cast<int>(g.vertices.size());
    long long total_demand = 0;
    for (int d : demand) total_demand += d;
    if (total_demand == 0) {
        if (assignment) assignment->assign(static_cast<size_t>(ne), -1);
        return true;
    }

    // Node layout: 0 = source, 1..ne = edges, ne+1..ne+nv = vertices, sink.
    const int source = 0, sink = ne + nv + 1;
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> adj(static_cast<size_t>(sink) + 1);
    auto add_arc = [&](int a, int b, int cap) {
        adj[static_cast<size_t>(a)].push_back({b, cap, static_cast<int>(adj[static_cast<size_t>(b)].size())});
        adj[static_cast<size_t>(b)].push_back({a, 0, static_cast<int>(adj[static_cast<size_t>(a)].size()) - 1});
    };
    for (int e = 0; e < ne; ++e) {
        add_arc(source, 1 + e, 1);
        for (int v : g.edges[static_cast<size_t>(e)].members) add_arc(1 + e, 1 + ne + v, 1);
    }
    for (int v = 0; v < nv; ++v)
        if (demand[static_cast<size_t>(v)] > 0)
            add_arc(1 + ne + v, sink, demand[static_cast<size_t>(v)]);

    long long flow = 0;
    while (true) {
        // BFS for an augmenting path.
        std::vector<int> prev_node(static_cast<size_t>(sink) + 1, -1);
        std::vector<int> prev_arc(static_cast<size_t>(sink) + 1, -1);
        std::queue<int> q;
        q.push(source);
        prev_node[static_cast<size_t>(source)] = source;
        while (!q.empty() && prev_node[static_cast<size_t>(sink)] < 0) {
            int u = q.front();
            q.pop();
            const auto& arcs = adj[static_cast<size_t>(u)];
            for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
                const Arc& a = arcs[static_cast<size_t>(i)];
                if (a.cap > 0 && prev_node[static_cast<size_t>(a.to)] < 0) {
                    prev_node[static_cast<size_t>(a.to)] = u;
                    prev_arc[static_cast<size_t>(a.to)] = i;
                    q.push(a.to);
                }
            }
        }
        if (prev_node[static_cast<size_t>(sink)] < 0) break;
        // Unit capacities along edge arcs: bottleneck is 1.
        int u = sink;
        while (u != source) {
            int p = prev_node[static_cast<size_t>(u)];
            Arc& a = adj[static_cast<size_t>(p)][static_cast<size_t>(prev_arc[static_cast<size_t>(u)])];
            a.cap -= 1;
            adj[static_cast<size_t>(u)][static_cast<size_t>(a.rev)].cap += 1;
            u = p;
        }
        ++flow;
    }
    if (flow < total_demand) return false;
    if (assignment) {
        assignment->assign(static_cast<size_t>(ne), -1);
        for (int e = 0; e < ne; ++e)
            for (const Arc& a : adj[static_cast<size_t>(1 + e)])
                if (a.to >= 1 + ne && a.to < 1 + ne + nv && a.cap == 0) {
                    // forward arc fully used -> flow went edge -> vertex
                    (*assignment)[static_cast<size_t>(e)] = a.to - 1 - ne;
                    break;
                }
    }
    return true;
}

} // namespace

int orient_min_max_outdegree(OneInclusionGraph& graph) {
    const int nv = static_cast<int>(graph.vertices.size());
    const int ne = static_cast<int>(graph.edges.size());
    std::vector<int> degree(static_cast<size_t>(nv), 0);
    for (const auto& e : graph.edges)
        for (int v : e.members) ++degree[static_cast<size_t>(v)];
    int max_deg = 0;
    for (int d : degree) max_deg = std::max(max_deg, d);

    auto feasible = [&](int d, std::vector<int>* assignment) {
        std::vector<int> demand(static_cast<size_t>(nv));
        for (int v = 0; v < nv; ++v)
            demand[static_cast<size_t>(v)] = std::max(0, degree[static_cast<size_t>(v)] - d);
        return demands_feasible(graph, demand, assignment);
    };

    int lo = 0, hi = max_deg;
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (feasible(mid, nullptr))
            hi = mid;
        else
            lo = mid + 1;
    }
    std::vector<int> assignment;
    feasible(lo, &assignment);
    graph.orientation.assign(static_cast<size_t>(ne), -1);
    for (int e = 0; e < ne; ++e) {
        int v = assignment[static_cast<size_t>(e)];
        // Edges the flow did not need can absorb into any member.
        graph.orientation[static_cast<size_t>(e)] =
            v >= 0 ? v : graph.edges[static_cast<size_t>(e)].members.front();
    }

    int achieved = 0;
    std::vector<int> outdeg(static_cast<size_t>(nv), 0);
    for (int e = 0; e < ne; ++e)
        for (int v : graph.edges[static_cast<size_t>(e)].members)
            if (v != graph.orientation[static_cast<size_t>(e)])
                ++outdeg[static_cast<size_t>(v)];
    for (int d : outdeg) achieved = std::max(achieved, d);
    return achieved;
}

OrientationReport orientation_report(const OneInclusionGraph& graph, const ConceptClass& cls) {
    OrientationReport r;
    std::vector<int> outdeg(graph.vertices.size(), 0);
    for (size_t e = 0; e < graph.edges.size(); ++e)
        for (int v : graph.edges[e].members)
            if (v != graph.orientation[e]) ++outdeg[static_cast<size_t>(v)];
    for (int d : outdeg) r.max_out_degree = std::max(r.max_out_degree, d);
    ConceptClass restricted = restrict_to_points(cls, graph.points);
    int ndim = natarajan_dim(restricted);
    r.bound = std::max(0, ndim) * std::max(1.0, std::log2(static_cast<double>(cls.k()) + 1.0));
    r.within_bound = static_cast<double>(r.max_out_degree) <= r.bound;
    return r;
}

ConceptClass partial_completion_class(const ConceptClass& cls,
                                      const std::vector<PointId>& points) {
    if (!cls.partial()) throw InputError("completion applies to partial classes");
    auto projected = project(cls, points);
    std::vector<Hypothesis> hyps;
    for (const auto& v : projected) hyps.emplace_back(v);
    return ConceptClass(cls.k(), static_cast<int>(points.size()), ClassMode::Total,
                        std::move(hyps));
}

namespace {

// Prediction on an already built and oriented graph: coordinates with labels
// fixed everywhere except `test_coord`.
Label predict_on_graph(const OneInclusionGraph& g, const std::vector<Label>& coord_labels,
                       int test_coord, int k) {
    std::vector<int> consistent;
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        bool ok = true;
        for (int c = 0; c < static_cast<int>(g.points.size()); ++c) {
            if (c == test_coord || coord_labels[static_cast<size_t>(c)] == kStar) continue;
            if (g.vertices[static_cast<size_t>(v)][static_cast<size_t>(c)] !=
                coord_labels[static_cast<size_t>(c)]) {
                ok = false;
                break;
            }
        }
        if (ok) consistent.push_back(v);
    }
    if (consistent.empty()) throw ProtocolError("labeled sample is unrealizable for the class");
    if (consistent.size() == 1)
        return g.vertices[static_cast<size_t>(consistent[0])][static_cast<size_t>(test_coord)];

    // >= 2 consistent vertices agree off the test coordinate, so they are a
    // maximal group: find the recorded hyperedge and follow its orientation.
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (g.edges[e].free_coord != test_coord) continue;
        if (g.edges[e].members == consistent)
            return g.vertices[static_cast<size_t>(g.orientation[e])]
                             [static_cast<size_t>(test_coord)];
    }
    // Fallback: plurality of the consistent fiber, ties to the smallest label.
    std::vector<int> votes(static_cast<size_t>(k) + 1, 0);
    for (int v : consistent)
        ++votes[static_cast<size_t>(
            g.vertices[static_cast<size_t>(v)][static_cast<size_t>(test_coord)])];
    Label best = 0;
    for (Label y = 1; y <= k; ++y)
        if (votes[static_cast<size_t>(y)] > votes[static_cast<size_t>(best)]) best = y;
    return best;
}

} // namespace

Label one_inclusion_predict(const ConceptClass& cls, const LabeledSample& labeled,
                            PointId test) {
    validate_sample(cls, labeled);
    if (test < 0 || test >= cls.domain_size()) throw InputError("test point out of range");

    // Distinct points, labeled first in order of appearance, then the test.
    std::vector<PointId> points;
    auto add_point = [&](PointId x) {
        if (std::find(points.begin(), points.end(), x) == points.end()) points.push_back(x);
    };
    for (const LabeledPair& p : labeled) add_point(p.x);
    add_point(test);
    int test_coord =
        static_cast<int>(std::find(points.begin(), points.end(), test) - points.begin());

    // Coordinate labels; kStar marks the unconstrained test coordinate.
    std::vector<Label> coord_labels(points.size(), kStar);
    for (const LabeledPair& p : labeled) {
        int c = static_cast<int>(std::find(points.begin(), points.end(), p.x) - points.begin());
        if (coord_labels[static_cast<size_t>(c)] != kStar &&
            coord_labels[static_cast<size_t>(c)] != p.y)
            throw ProtocolError("labeled sample repeats a point with conflicting labels");
        coord_labels[static_cast<size_t>(c)] = p.y;
    }

    if (cls.partial()) {
        ConceptClass completion = partial_completion_class(cls, points);
        if (completion.empty()) return 0;  // Case B: no consistent total labeling
        std::vector<PointId> local(points.size());
        for (size_t i = 0; i < points.size(); ++i) local[i] = static_cast<PointId>(i);
        OneInclusionGraph g = build_graph(completion, local);
        orient_min_max_outdegree(g);
        return predict_on_graph(g, coord_labels, test_coord, cls.k());
    }

    OneInclusionGraph g = build_graph(cls, points);
    orient_min_max_outdegree(g);
    return predict_on_graph(g, coord_labels, test_coord, cls.k());
}

LeaveOneOutResult leave_one_out(const ConceptClass& cls, const std::vector<PointId>& points,
                                const std::vector<Label>& labels) {
    if (points.size() != labels.size()) throw InputError("points/labels size mismatch");
    LeaveOneOutResult result;
    result.count = static_cast<int>(points.size());

    const ConceptClass* effective = &cls;
    std::optional<ConceptClass> completion;
    std::vector<PointId> local(points.size());
    for (size_t i = 0; i < points.size(); ++i) local[i] = static_cast<PointId>(i);
    const std::vector<PointId>* graph_points = &points;
    if (cls.partial()) {
        completion = partial_completion_class(cls, points);
        if (completion->empty()) {
            // Case B predicts 0 everywhere.
            for (Label y : labels)
                if (y != 0) ++result.mistakes;
            return result;
        }
        effective = &*completion;
        graph_points = &local;
    }

    OneInclusionGraph g = build_graph(*effective, *graph_points);
    orient_min_max_outdegree(g);
    std::vector<Label> coord_labels(labels.begin(), labels.end());
    for (int i = 0; i < static_cast<int>(points.size()); ++i) {
        Label keep = coord_labels[static_cast<size_t>(i)];
        coord_labels[static_cast<size_t>(i)] = kStar;
        Label got = predict_on_graph(g, coord_labels, i, cls.k());
        coord_labels[static_cast<size_t>(i)] = keep;
        if (got != keep) ++result.mistakes;
    }
    return result;
}

} // namespace mclab
