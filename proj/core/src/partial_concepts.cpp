#include "mclab/partial_concepts.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "mclab/dimensions.hpp"
#include "mclab/errors.hpp"
#include "mclab/one_inclusion.hpp"

namespace mclab {

ConflictGraph build_conflict_graph(const ConceptClass& partial) {
    ConflictGraph g;
    g.vertex_count = static_cast<int>(partial.size());
    g.adjacent.assign(static_cast<size_t>(g.vertex_count),
                      std::vector<bool>(static_cast<size_t>(g.vertex_count), false));
    for (int i = 0; i < g.vertex_count; ++i)
        for (int j = i + 1; j < g.vertex_count; ++j) {
            const Hypothesis& a = partial.hypothesis(static_cast<size_t>(i));
            const Hypothesis& b = partial.hypothesis(static_cast<size_t>(j));
            bool conflict = false;
            for (PointId x = 0; x < partial.domain_size(); ++x)
                if (a.defined(x) && b.defined(x) && a.at(x) != b.at(x)) {
                    conflict = true;
                    break;
                }
            if (conflict) {
                g.adjacent[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
                g.adjacent[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
                g.edges.push_back({i, j});
            }
        }
    return g;
}

namespace {

// DSATUR branch and bound; exact for the desk-scale caps enforced upstream.
struct ColoringSearch {
    const ConflictGraph& g;
    int n;
    std::vector<int> color;
    std::vector<int> best_coloring;
    int best = 0;

    explicit ColoringSearch(const ConflictGraph& graph)
        : g(graph), n(graph.vertex_count), color(static_cast<size_t>(n), -1) {}

    int saturation(int v) const {
        std::set<int> used;
        for (int u = 0; u < n; ++u)
            if (g.adjacent[static_cast<size_t>(v)][static_cast<size_t>(u)] &&
                color[static_cast<size_t>(u)] >= 0)
                used.insert(color[static_cast<size_t>(u)]);
        return static_cast<int>(used.size());
    }

    int pick_vertex() const {
        int best_v = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<size_t>(v)] >= 0) continue;
            int sat = saturation(v);
            int deg = 0;
            for (int u = 0; u < n; ++u)
                if (g.adjacent[static_cast<size_t>(v)][static_cast<size_t>(u)]) ++deg;
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best_v = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best_v;
    }

    void dfs(int colored, int used) {
        if (used >= best) return;  // cannot improve
        if (colored == n) {
            best = used;
            best_coloring = color;
            return;
        }
        int v = pick_vertex();
        std::vector<bool> forbidden(static_cast<size_t>(used) + 2, false);
        for (int u = 0; u < n; ++u)
            if (g.adjacent[static_cast<size_t>(v)][static_cast<size_t>(u)] &&
                color[static_cast<size_t>(u)] >= 0)
                forbidden[static_cast<size_t>(color[static_cast<size_t>(u)])] = true;
        for (int c = 0; c < std::min(used + 1, best); ++c) {
            if (c < used && forbidden[static_cast<size_t>(c)]) continue;
            color[static_cast<size_t>(v)] = c;
            dfs(colored + 1, std::max(used, c + 1));
            color[static_cast<size_t>(v)] = -1;
        }
    }
};

} // namespace

int chromatic_number(const ConflictGraph& graph) {
    if (graph.vertex_count == 0) return 0;
    if (graph.vertex_count > kChromaticVertexCap)
        throw LimitError("chromatic search capped at " +
                         std::to_string(kChromaticVertexCap) + " vertices");
    if (graph.edges.empty()) return 1;
    ColoringSearch search(graph);
    search.best = graph.vertex_count;
    search.dfs(0, 0);
    return search.best;
}

bool is_disambiguation(const ConceptClass& total, const ConceptClass& partial) {
    if (total.domain_size() != partial.domain_size() || total.k() != partial.k())
        throw InputError("disambiguation check needs matching domain and k");
    if (total.partial()) throw InputError("the disambiguating class must be total");
    for (const Hypothesis& h : partial.hypotheses()) {
        bool extended = false;
        for (const Hypothesis& t : total.hypotheses()) {
            bool ok = true;
            for (PointId x = 0; x < partial.domain_size(); ++x)
                if (h.defined(x) && t.at(x) != h.at(x)) {
                    ok = false;
                    break;
                }
            if (ok) {
                extended = true;
                break;
            }
        }
        if (!extended) return false;
    }
    return true;
}

int min_disambiguation_size(const ConceptClass& partial, int limit) {
    if (static_cast<int>(partial.size()) > limit)
        throw LimitError("class size exceeds the disambiguation limit");
    if (partial.empty()) return 0;
    return chromatic_number(build_conflict_graph(partial));
}

SuppVcReport supp_vc_dim(const ConceptClass& partial) {
    SuppVcReport r;
    if (partial.empty()) return r;
    // Support indicators as a binary class.
    std::vector<Hypothesis> indicators;
    for (const Hypothesis& h : partial.hypotheses()) {
        std::vector<int8_t> v(static_cast<size_t>(partial.domain_size()), 0);
        for (PointId x = 0; x < partial.domain_size(); ++x)
            if (h.defined(x)) v[static_cast<size_t>(x)] = 1;
        indicators.emplace_back(std::move(v));
    }
    ConceptClass supports(1, partial.domain_size(), ClassMode::Total, std::move(indicators));
    r.supp_vc = vc_dim(supports);
    r.ndim = natarajan_dim(partial);

    // Treat the marker as a genuine extra label.
    std::vector<Hypothesis> lifted;
    for (const Hypothesis& h : partial.hypotheses()) {
        std::vector<int8_t> v = h.labels;
        for (int8_t& val : v)
            if (val == kStar) val = static_cast<int8_t>(partial.k() + 1);
        lifted.emplace_back(std::move(v));
    }
    ConceptClass as_total(partial.k() + 1, partial.domain_size(), ClassMode::Total,
                          std::move(lifted));
    r.ndim_k2 = natarajan_dim(as_total);
    r.gdim_k2 = graph_dim(as_total);
    return r;
}

SspResult ssp_check(const ConceptClass& partial_binary, int m) {
    if (partial_binary.k() != 1) throw InputError("ssp_check needs a binary class (k = 1)");
    if (m < 1 || m > partial_binary.domain_size())
        throw InputError("ssp_check needs 1 <= m <= domain_size");
    SspResult r;
    r.vc = vc_dim(partial_binary);
    // sum_{i=0}^{vc} C(m, i)
    long long bound = 0;
    long long binom = 1;
    const int top = std::min(std::max(0, r.vc), m);
    for (int i = 0; i <= top; ++i) {
        if (i > 0) binom = binom * (m - i + 1) / i;
        bound += binom;
    }
    r.bound = bound;
    r.growth = 0;

    // Track the maximizing subset for the counterexample slot.
    std::vector<int> sub(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) sub[static_cast<size_t>(i)] = i;
    const int n = partial_binary.domain_size();
    while (true) {
        auto projected = project(partial_binary, std::vector<PointId>(sub.begin(), sub.end()));
        long long count = static_cast<long long>(projected.size());
        if (count > r.growth) {
            r.growth = count;
            if (count > bound) r.counterexample = std::vector<PointId>(sub.begin(), sub.end());
        }
        int i = m - 1;
        while (i >= 0 && sub[static_cast<size_t>(i)] == n - m + i) --i;
        if (i < 0) break;
        ++sub[static_cast<size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            sub[static_cast<size_t>(j)] = sub[static_cast<size_t>(j - 1)] + 1;
    }
    r.holds = r.growth <= r.bound;
    return r;
}

// ---------------------------------------------------------------------------
// Biclique instances

namespace {

std::vector<int> parse_id_list(const std::string& s, const std::string& name, int line) {
    std::vector<int> ids;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) {
                try {
                    ids.push_back(std::stoi(cur));
                } catch (const std::exception&) {
                    throw InputError(name + ":" + std::to_string(line) + ": bad id '" + cur +
                                     "'");
                }
                cur.clear();
            }
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    return ids;
}

void validate_instance(const BicliqueInstance& inst, const std::string& name) {
    std::set<std::pair<int, int>> edge_set;
    auto norm = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    for (auto [u, v] : inst.edges) {
        if (u < 0 || u >= inst.vertex_count || v < 0 || v >= inst.vertex_count || u == v)
            throw InputError(name + ": bad edge");
        if (!edge_set.insert(norm(u, v)).second)
            throw InputError(name + ": duplicate edge");
    }
    std::set<std::pair<int, int>> covered;
    for (size_t j = 0; j < inst.blocks.size(); ++j) {
        const auto& blk = inst.blocks[j];
        for (int u : blk.left)
            for (int v : blk.right) {
                if (std::find(blk.left.begin(), blk.left.end(), v) != blk.left.end())
                    throw InputError(name + ": block sides intersect");
                auto e = norm(u, v);
                if (!edge_set.count(e))
                    throw InputError(name + ": block " + std::to_string(j + 1) +
                                     " uses a non-edge");
                if (!covered.insert(e).second)
                    throw InputError(name + ": blocks are not edge-disjoint");
            }
        std::set<int> l(blk.left.begin(), blk.left.end());
        std::set<int> rset(blk.right.begin(), blk.right.end());
        for (int v : blk.left)
            if (rset.count(v)) throw InputError(name + ": block sides intersect");
        if (blk.left.empty() || blk.right.empty())
            throw InputError(name + ": block side empty");
    }
    if (covered.size() != edge_set.size())
        throw InputError(name + ": blocks do not cover every edge");
}

} // namespace

BicliqueInstance read_biclique(std::istream& in, const std::string& name) {
    BicliqueInstance inst;
    std::string line;
    int lineno = 0;
    bool have_vertices = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok)) continue;
        if (tok == "vertices") {
            if (!(ss >> inst.vertex_count) || inst.vertex_count < 1)
                throw InputError(name + ":" + std::to_string(lineno) + ": bad vertex count");
            have_vertices = true;
        } else if (tok == "edge") {
            int u, v;
            if (!(ss >> u >> v))
                throw InputError(name + ":" + std::to_string(lineno) + ": bad edge line");
            inst.edges.push_back({u, v});
        } else if (tok == "block") {
            std::string rest;
            std::getline(ss, rest);
            auto colon = rest.find(':');
            if (colon == std::string::npos)
                throw InputError(name + ":" + std::to_string(lineno) + ": block needs ':'");
            rest = rest.substr(colon + 1);
            auto lpos = rest.find("L=");
            auto rpos = rest.find("R=");
            if (lpos == std::string::npos || rpos == std::string::npos || rpos < lpos)
                throw InputError(name + ":" + std::to_string(lineno) +
                                 ": block needs L=... R=...");
            BicliqueInstance::Block blk;
            blk.left = parse_id_list(rest.substr(lpos + 2, rpos - lpos - 2), name, lineno);
            blk.right = parse_id_list(rest.substr(rpos + 2), name, lineno);
            inst.blocks.push_back(std::move(blk));
        } else {
            throw InputError(name + ":" + std::to_string(lineno) + ": unknown directive '" +
                             tok + "'");
        }
    }
    if (!have_vertices) throw InputError(name + ": missing 'vertices' line");
    validate_instance(inst, name);
    return inst;
}

BicliqueInstance read_biclique_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_biclique(in, path);
}

BicliqueInstance c4_matching_instance() {
    BicliqueInstance inst;
    inst.vertex_count = 4;
    inst.edges = {{0, 2}, {1, 3}};
    inst.blocks = {{{0}, {2}}, {{1}, {3}}};
    return inst;
}

BicliqueInstance c4_cycle_instance() {
    BicliqueInstance inst;
    inst.vertex_count = 4;
    inst.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    inst.blocks = {{{0}, {1, 3}}, {{2}, {1, 3}}};
    return inst;
}

ConceptClass build_biclique_class(const BicliqueInstance& instance, int copies) {
    validate_instance(instance, "<instance>");
    if (copies < 1) throw InputError("copies must be >= 1");
    if (copies > 3) throw LimitError("tensor copies capped at 3");
    const int blocks = static_cast<int>(instance.blocks.size());
    if (blocks < 1) throw InputError("instance has no blocks");
    const int k = (1 << copies) - 1;

    // c_v(j): 0 on the left side of block j, 1 on the right, undefined else.
    auto side = [&](int v, int j) -> Label {
        const auto& blk = instance.blocks[static_cast<size_t>(j)];
        if (std::find(blk.left.begin(), blk.left.end(), v) != blk.left.end()) return 0;
        if (std::find(blk.right.begin(), blk.right.end(), v) != blk.right.end()) return 1;
        return kStar;
    };

    std::vector<Hypothesis> hyps;
    std::vector<int> tuple(static_cast<size_t>(copies), 0);
    while (true) {
        std::vector<int8_t> row(static_cast<size_t>(blocks));
        for (int j = 0; j < blocks; ++j) {
            int value = 0;
            bool defined = true;
            for (int c = 0; c < copies; ++c) {
                Label bit = side(tuple[static_cast<size_t>(c)], j);
                if (is_star(bit)) {
                    defined = false;
                    break;
                }
                value += bit << c;  // weight 2^(c) for copy index c = j-1 in 1-based terms
            }
            row[static_cast<size_t>(j)] = defined ? static_cast<int8_t>(value)
                                                  : static_cast<int8_t>(kStar);
        }
        hyps.emplace_back(std::move(row));
        int c = 0;
        while (c < copies && tuple[static_cast<size_t>(c)] == instance.vertex_count - 1) {
            tuple[static_cast<size_t>(c)] = 0;
            ++c;
        }
        if (c == copies) break;
        ++tuple[static_cast<size_t>(c)];
    }
    return ConceptClass(k, blocks, ClassMode::Partial, std::move(hyps));
}

std::function<Label(PointId)> partial_pac_learn(const ConceptClass& partial,
                                                const LabeledSample& dataset, double epsilon,
                                                double delta) {
    if (epsilon <= 0.0 || delta <= 0.0 || delta >= 1.0)
        throw InputError("need epsilon > 0 and delta in (0, 1)");
    if (epsilon >= 1.0) {
        // Any predictor meets error <= 1.
        return [](PointId) { return 0; };
    }
    validate_sample(partial, dataset);
    if (!is_realizable(partial, dataset))
        throw ProtocolError("dataset is not realizable for the partial class");

    const int n = static_cast<int>(dataset.size());
    int splits = std::max(1, static_cast<int>(std::ceil(std::log(1.0 / delta))));
    int part = n / splits;
    if (part == 0) {
        splits = 1;
        part = n;
    }
    auto parts = std::make_shared<std::vector<LabeledSample>>();
    for (int i = 0; i < splits; ++i)
        parts->emplace_back(dataset.begin() + static_cast<long>(i) * part,
                            dataset.begin() + static_cast<long>(i + 1) * part);
    auto cls = std::make_shared<ConceptClass>(partial);
    const int k = partial.k();
    return [parts, cls, k](PointId x) {
        std::vector<int> votes(static_cast<size_t>(k) + 1, 0);
        for (const LabeledSample& p : *parts) {
            Label y = one_inclusion_predict(*cls, p, x);
            ++votes[static_cast<size_t>(y)];
        }
        Label best = 0;
        for (Label y = 1; y <= k; ++y)
            if (votes[static_cast<size_t>(y)] > votes[static_cast<size_t>(best)]) best = y;
        return best;
    };
}

} // namespace mclab
