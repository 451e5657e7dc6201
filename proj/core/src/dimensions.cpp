#include "mclab/dimensions.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "mclab/errors.hpp"

namespace mclab {

RestrictionIndex::RestrictionIndex(ConceptClass cls)
    : cls_(std::move(cls)), k_(cls_.k()), full_(static_cast<int>(cls_.size()), true) {
    const int n = cls_.domain_size();
    const int m = static_cast<int>(cls_.size());
    masks_.assign(static_cast<size_t>(n) * static_cast<size_t>(k_ + 1), HypSet(m));
    defined_.assign(static_cast<size_t>(n), HypSet(m));
    diff_.assign(static_cast<size_t>(n) * static_cast<size_t>(k_ + 1), HypSet(m));
    for (int h = 0; h < m; ++h) {
        for (int x = 0; x < n; ++x) {
            Label y = cls_.value(static_cast<size_t>(h), x);
            if (is_star(y)) continue;
            masks_[static_cast<size_t>(x) * static_cast<size_t>(k_ + 1) +
                   static_cast<size_t>(y)]
                .set(h);
            defined_[static_cast<size_t>(x)].set(h);
        }
    }
    for (int x = 0; x < n; ++x)
        for (Label y = 0; y <= k_; ++y) {
            HypSet d = defined_[static_cast<size_t>(x)];
            const HypSet& eq = mask(x, y);
            d.for_each([&](int h) {
                if (eq.test(h)) d.reset(h);
            });
            diff_[static_cast<size_t>(x) * static_cast<size_t>(k_ + 1) +
                  static_cast<size_t>(y)] = d;
        }
}

std::vector<Label> RestrictionIndex::realized_labels(PointId x, const HypSet& family) const {
    std::vector<Label> out;
    for (Label y = 0; y <= k_; ++y)
        if (mask(x, y).intersects(family)) out.push_back(y);
    return out;
}

namespace {

// Visits all ascending index combinations of size m from 0..n-1.
template <typename F>
void for_each_combination(int n, int m, F&& visit) {
    if (m > n || m < 0) return;
    std::vector<int> idx(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        visit(idx);
        int i = m - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - m + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

// Fully-defined projections of the class onto the given points.
std::vector<std::vector<int8_t>> defined_projections(const ConceptClass& cls,
                                                     const std::vector<int>& points) {
    std::vector<std::vector<int8_t>> rows;
    for (const Hypothesis& h : cls.hypotheses()) {
        std::vector<int8_t> v;
        v.reserve(points.size());
        bool ok = true;
        for (int x : points) {
            int8_t val = h.labels[static_cast<size_t>(x)];
            if (val == kStar) {
                ok = false;
                break;
            }
            v.push_back(val);
        }
        if (ok) rows.push_back(std::move(v));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

uint64_t pack_vector(const std::vector<int8_t>& v, int bits) {
    uint64_t key = 0;
    for (size_t i = 0; i < v.size(); ++i)
        key |= static_cast<uint64_t>(v[i]) << (bits * static_cast<int>(i));
    return key;
}

// True iff every binary pattern between s0 and s1 appears in the packed set.
bool patterns_all_realized(const std::unordered_set<uint64_t>& packed,
                           const std::vector<Label>& s0, const std::vector<Label>& s1,
                           int bits) {
    const int d = static_cast<int>(s0.size());
    for (uint64_t b = 0; b < (uint64_t{1} << d); ++b) {
        uint64_t key = 0;
        for (int i = 0; i < d; ++i) {
            Label v = ((b >> i) & 1) ? s1[static_cast<size_t>(i)] : s0[static_cast<size_t>(i)];
            key |= static_cast<uint64_t>(v) << (bits * i);
        }
        if (!packed.count(key)) return false;
    }
    return true;
}

// Tries to N-shatter the given points; fills s0/s1 on success. Coloring pairs
// are enumerated per coordinate as ordered pairs with s0 < s1 (swapping the
// colorings at one coordinate permutes the patterns, so this loses nothing).
bool natarajan_shatters(const ConceptClass& cls, const std::vector<int>& points,
                        std::vector<Label>* s0_out, std::vector<Label>* s1_out) {
    auto rows = defined_projections(cls, points);
    const int d = static_cast<int>(points.size());
    if (static_cast<long long>(rows.size()) < (1LL << d)) return false;
    const int bits = std::max(1, std::bit_width(static_cast<unsigned>(cls.k())));
    std::unordered_set<uint64_t> packed;
    packed.reserve(rows.size() * 2);
    for (const auto& v : rows) packed.insert(pack_vector(v, bits));

    std::vector<std::vector<std::pair<Label, Label>>> candidates(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        std::vector<bool> realized(static_cast<size_t>(cls.k()) + 1, false);
        for (const auto& v : rows) realized[static_cast<size_t>(v[static_cast<size_t>(i)])] = true;
        for (Label a = 0; a <= cls.k(); ++a)
            for (Label b = a + 1; b <= cls.k(); ++b)
                if (realized[static_cast<size_t>(a)] && realized[static_cast<size_t>(b)])
                    candidates[static_cast<size_t>(i)].push_back({a, b});
        if (candidates[static_cast<size_t>(i)].empty()) return false;
    }

    std::vector<Label> s0(static_cast<size_t>(d)), s1(static_cast<size_t>(d));
    std::vector<size_t> pick(static_cast<size_t>(d), 0);
    int pos = 0;
    while (pos >= 0) {
        if (pos == d) {
            if (patterns_all_realized(packed, s0, s1, bits)) {
                if (s0_out) *s0_out = s0;
                if (s1_out) *s1_out = s1;
                return true;
            }
            --pos;
            if (pos >= 0) ++pick[static_cast<size_t>(pos)];
            continue;
        }
        auto& options = candidates[static_cast<size_t>(pos)];
        size_t& p = pick[static_cast<size_t>(pos)];
        if (p == options.size()) {
            p = 0;
            --pos;
            if (pos >= 0) ++pick[static_cast<size_t>(pos)];
            continue;
        }
        s0[static_cast<size_t>(pos)] = options[p].first;
        s1[static_cast<size_t>(pos)] = options[p].second;
        ++pos;
        if (pos <= d - 1) pick[static_cast<size_t>(pos)] = 0;
    }
    return false;
}

bool graph_shatters(const ConceptClass& cls, const std::vector<int>& points,
                    std::vector<Label>* s0_out) {
    auto rows = defined_projections(cls, points);
    const int d = static_cast<int>(points.size());
    if (static_cast<long long>(rows.size()) < (1LL << d)) return false;

    std::vector<std::vector<Label>> candidates(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        std::vector<bool> realized(static_cast<size_t>(cls.k()) + 1, false);
        for (const auto& v : rows) realized[static_cast<size_t>(v[static_cast<size_t>(i)])] = true;
        int count = 0;
        for (Label a = 0; a <= cls.k(); ++a)
            if (realized[static_cast<size_t>(a)]) {
                candidates[static_cast<size_t>(i)].push_back(a);
                ++count;
            }
        // A G-shattering coloring needs an agreeing and a disagreeing value.
        if (count < 2) return false;
    }

    std::vector<Label> s0(static_cast<size_t>(d));
    std::vector<size_t> pick(static_cast<size_t>(d), 0);
    std::vector<bool> seen;
    int pos = 0;
    while (pos >= 0) {
        if (pos == d) {
            seen.assign(size_t{1} << d, false);
            size_t distinct = 0;
            for (const auto& v : rows) {
                uint64_t sig = 0;
                for (int i = 0; i < d; ++i)
                    if (v[static_cast<size_t>(i)] == s0[static_cast<size_t>(i)])
                        sig |= uint64_t{1} << i;
                if (!seen[sig]) {
                    seen[sig] = true;
                    ++distinct;
                }
            }
            if (distinct == (size_t{1} << d)) {
                if (s0_out) *s0_out = s0;
                return true;
            }
            --pos;
            if (pos >= 0) ++pick[static_cast<size_t>(pos)];
            continue;
        }
        auto& options = candidates[static_cast<size_t>(pos)];
        size_t& p = pick[static_cast<size_t>(pos)];
        if (p == options.size()) {
            p = 0;
            --pos;
            if (pos >= 0) ++pick[static_cast<size_t>(pos)];
            continue;
        }
        s0[static_cast<size_t>(pos)] = options[p];
        ++pos;
        if (pos <= d - 1) pick[static_cast<size_t>(pos)] = 0;
    }
    return false;
}

bool vc_shatters(const ConceptClass& cls, const std::vector<int>& points) {
    auto rows = defined_projections(cls, points);
    const int d = static_cast<int>(points.size());
    std::vector<bool> seen(size_t{1} << d, false);
    size_t distinct = 0;
    for (const auto& v : rows) {
        uint64_t sig = 0;
        bool binary = true;
        for (int i = 0; i < d; ++i) {
            int8_t val = v[static_cast<size_t>(i)];
            if (val != 0 && val != 1) {
                binary = false;
                break;
            }
            if (val) sig |= uint64_t{1} << i;
        }
        if (binary && !seen[sig]) {
            seen[sig] = true;
            ++distinct;
        }
    }
    return distinct == (size_t{1} << d);
}

// Largest d such that some d-subset passes `shatters`; shattering is monotone
// under taking subsets, so we grow d until the first failure.
template <typename ShatterFn>
int max_shattered_size(const ConceptClass& cls, ShatterFn&& shatters, int hard_cap,
                       std::vector<int>* witness_points) {
    if (cls.empty()) return -1;
    int best = 0;
    for (int d = 1; d <= std::min(cls.domain_size(), hard_cap); ++d) {
        bool found = false;
        for_each_combination(cls.domain_size(), d, [&](const std::vector<int>& pts) {
            if (found) return;
            if (shatters(pts)) {
                found = true;
                if (witness_points) *witness_points = pts;
            }
        });
        if (!found) break;
        best = d;
    }
    return best;
}

} // namespace

int vc_dim(const ConceptClass& cls, ShatterWitness* witness) {
    std::vector<int> pts;
    int d = max_shattered_size(
        cls, [&](const std::vector<int>& p) { return vc_shatters(cls, p); },
        cls.domain_size(), witness ? &pts : nullptr);
    if (witness && d > 0) {
        witness->points = pts;
        witness->s0.assign(pts.size(), 0);
        witness->s1.assign(pts.size(), 1);
    }
    return d;
}

int natarajan_dim(const ConceptClass& cls, ShatterWitness* witness) {
    std::vector<int> pts;
    std::vector<Label> s0, s1;
    // log2 of the class size caps the dimension: shattering d points needs 2^d
    // distinct projections.
    int cap = 0;
    while ((size_t{1} << (cap + 1)) <= cls.size()) ++cap;
    int d = max_shattered_size(
        cls,
        [&](const std::vector<int>& p) { return natarajan_shatters(cls, p, &s0, &s1); },
        std::max(cap, 1), witness ? &pts : nullptr);
    if (witness && d > 0) {
        ShatterWitness w;
        // The last successful call left s0/s1 for the recorded points.
        natarajan_shatters(cls, pts, &w.s0, &w.s1);
        w.points = pts;
        *witness = w;
    }
    return d;
}

int graph_dim(const ConceptClass& cls, ShatterWitness* witness) {
    std::vector<int> pts;
    std::vector<Label> s0;
    int cap = 0;
    while ((size_t{1} << (cap + 1)) <= cls.size()) ++cap;
    int d = max_shattered_size(
        cls, [&](const std::vector<int>& p) { return graph_shatters(cls, p, &s0); },
        std::max(cap, 1), witness ? &pts : nullptr);
    if (witness && d > 0) {
        ShatterWitness w;
        graph_shatters(cls, pts, &w.s0);
        w.points = pts;
        *witness = w;
    }
    return d;
}

bool check_natarajan_witness(const ConceptClass& cls, const ShatterWitness& w) {
    if (w.points.empty()) return false;
    for (size_t i = 0; i < w.points.size(); ++i)
        if (w.s0[i] == w.s1[i]) return false;
    const int d = static_cast<int>(w.points.size());
    for (uint64_t b = 0; b < (uint64_t{1} << d); ++b) {
        LabeledSample s;
        for (int i = 0; i < d; ++i)
            s.push_back({w.points[static_cast<size_t>(i)],
                         ((b >> i) & 1) ? w.s1[static_cast<size_t>(i)]
                                        : w.s0[static_cast<size_t>(i)]});
        if (!is_realizable(cls, s)) return false;
    }
    return true;
}

bool check_graph_witness(const ConceptClass& cls, const ShatterWitness& w) {
    if (w.points.empty()) return false;
    const int d = static_cast<int>(w.points.size());
    for (uint64_t b = 0; b < (uint64_t{1} << d); ++b) {
        bool found = false;
        for (const Hypothesis& h : cls.hypotheses()) {
            bool ok = true;
            for (int i = 0; i < d; ++i) {
                PointId x = w.points[static_cast<size_t>(i)];
                Label want = w.s0[static_cast<size_t>(i)];
                if (!h.defined(x)) {
                    ok = false;
                    break;
                }
                bool agree = h.at(x) == want;
                if (agree != (((b >> i) & 1) != 0)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Littlestone solver

struct LittlestoneSolver::Impl {
    RestrictionIndex idx;
    mutable std::unordered_map<HypSet, int, HypSetHash> memo;

    explicit Impl(const ConceptClass& cls) : idx(cls) {}

    int dim(const HypSet& family) const {
        int c = family.count();
        if (c == 0) return -1;
        if (c == 1) return 0;
        auto it = memo.find(family);
        if (it != memo.end()) return it->second;
        int best = 0;
        const int n = idx.cls().domain_size();
        for (int x = 0; x < n; ++x) {
            auto labels = idx.realized_labels(x, family);
            for (size_t i = 0; i < labels.size(); ++i)
                for (size_t j = i + 1; j < labels.size(); ++j) {
                    int d0 = dim(family & idx.mask(x, labels[i]));
                    int d1 = dim(family & idx.mask(x, labels[j]));
                    best = std::max(best, 1 + std::min(d0, d1));
                }
        }
        memo.emplace(family, best);
        return best;
    }
};

LittlestoneSolver::LittlestoneSolver(const ConceptClass& cls)
    : impl_(std::make_unique<Impl>(cls)) {
    if (cls.partial())
        throw InputError("littlestone_dim_k requires a total class");
}
LittlestoneSolver::~LittlestoneSolver() = default;
LittlestoneSolver::LittlestoneSolver(LittlestoneSolver&&) noexcept = default;

const RestrictionIndex& LittlestoneSolver::index() const { return impl_->idx; }
int LittlestoneSolver::dim() const { return impl_->dim(impl_->idx.full()); }
int LittlestoneSolver::dim(const HypSet& family) const { return impl_->dim(family); }

int littlestone_dim_k(const ConceptClass& cls) {
    if (cls.empty()) return -1;
    return LittlestoneSolver(cls).dim();
}

// ---------------------------------------------------------------------------
// NL / GL tree search

namespace {

struct FamilyLevelKey {
    HypSet family;
    int level;
    bool operator==(const FamilyLevelKey& o) const {
        return level == o.level && family == o.family;
    }
};
struct FamilyLevelHash {
    size_t operator()(const FamilyLevelKey& k) const {
        return k.family.hash() * 1000003u + static_cast<size_t>(k.level);
    }
};

// Shared search for NL (two colorings) and GL (one coloring) trees. Nodes at
// level t carry t distinct points; per-position color options depend on the
// variant. depth_from(F, t) = deepest tree rooted at level t over family F,
// clipped so levels never exceed max_depth.
struct TreeSearch {
    const RestrictionIndex& idx;
    int max_depth;
    bool graph_variant;  // GL when true
    long long tuples = 0;
    std::unordered_map<FamilyLevelKey, int, FamilyLevelHash> memo;

    TreeSearch(const RestrictionIndex& i, int md, bool gl)
        : idx(i), max_depth(md), graph_variant(gl) {}

    void charge() {
        if (++tuples > kTreeTupleBudget)
            throw LimitError("tree search exceeded the 10^7 candidate-tuple budget");
    }

    // Child family for position assignments under pattern bits b.
    HypSet child(const HypSet& family, const std::vector<int>& pts,
                 const std::vector<Label>& c0, const std::vector<Label>& c1,
                 uint64_t b) const {
        HypSet f = family;
        for (size_t i = 0; i < pts.size(); ++i) {
            bool one = (b >> i) & 1;
            if (!graph_variant) {
                f &= idx.mask(pts[i], one ? c1[i] : c0[i]);
            } else {
                // bit 1 agrees with the coloring, bit 0 disagrees
                f &= one ? idx.mask(pts[i], c0[i]) : idx.diff_mask(pts[i], c0[i]);
            }
            if (f.empty()) break;
        }
        return f;
    }

    int depth_from(const HypSet& family, int t) {
        const int n = idx.cls().domain_size();
        if (t > max_depth || t > n) return 0;
        FamilyLevelKey key{family, t};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        const int ceiling = std::min(max_depth, n) - t + 1;
        int best = 0;
        for_each_combination(n, t, [&](const std::vector<int>& pts) {
            if (best == ceiling) return;
            // Per-position color candidates, filtered to marginally realizable
            // choices.
            std::vector<std::vector<std::pair<Label, Label>>> cands(pts.size());
            bool viable = true;
            for (size_t i = 0; i < pts.size() && viable; ++i) {
                std::vector<Label> realized;
                for (Label y = 0; y <= idx.cls().k(); ++y)
                    if (idx.mask(pts[i], y).intersects(family)) realized.push_back(y);
                if (!graph_variant) {
                    for (size_t a = 0; a < realized.size(); ++a)
                        for (size_t b = a + 1; b < realized.size(); ++b)
                            cands[i].push_back({realized[a], realized[b]});
                } else {
                    if (realized.size() >= 2)
                        for (Label y : realized) cands[i].push_back({y, y});
                }
                if (cands[i].empty()) viable = false;
            }
            if (!viable) return;

            std::vector<size_t> pick(pts.size(), 0);
            std::vector<Label> c0(pts.size()), c1(pts.size());
            int pos = 0;
            while (pos >= 0 && best < ceiling) {
                if (pos == static_cast<int>(pts.size())) {
                    charge();
                    for (size_t i = 0; i < pts.size(); ++i) {
                        c0[i] = cands[i][pick[i]].first;
                        c1[i] = cands[i][pick[i]].second;
                    }
                    int node_val = ceiling;  // min over children, optimistically
                    for (uint64_t b = 0; b < (uint64_t{1} << pts.size()); ++b) {
                        HypSet f = child(family, pts, c0, c1, b);
                        if (f.empty()) {
                            node_val = 0;
                            break;
                        }
                        node_val = std::min(node_val, 1 + depth_from(f, t + 1));
                        if (node_val <= best) break;
                    }
                    best = std::max(best, node_val);
                    --pos;
                    if (pos >= 0) ++pick[static_cast<size_t>(pos)];
                    continue;
                }
                if (pick[static_cast<size_t>(pos)] == cands[static_cast<size_t>(pos)].size()) {
                    pick[static_cast<size_t>(pos)] = 0;
                    --pos;
                    if (pos >= 0) ++pick[static_cast<size_t>(pos)];
                    continue;
                }
                ++pos;
                if (pos < static_cast<int>(pts.size())) pick[static_cast<size_t>(pos)] = 0;
            }
        });
        memo.emplace(key, best);
        return best;
    }
};

int tree_depth(const ConceptClass& cls, int max_depth, bool graph_variant) {
    if (max_depth < 0) throw InputError("max_depth must be >= 0");
    if (max_depth > kMaxTreeDepth)
        throw LimitError("tree depth cap is " + std::to_string(kMaxTreeDepth));
    if (cls.empty() || max_depth == 0) return 0;
    RestrictionIndex idx(cls);
    TreeSearch search(idx, max_depth, graph_variant);
    return search.depth_from(idx.full(), 1);
}

} // namespace

int nl_tree_depth(const ConceptClass& cls, int max_depth) {
    return tree_depth(cls, max_depth, false);
}

int gl_tree_depth(const ConceptClass& cls, int max_depth) {
    return tree_depth(cls, max_depth, true);
}

long long growth_function(const ConceptClass& cls, int m) {
    if (m < 1 || m > cls.domain_size())
        throw InputError("growth_function needs 1 <= m <= domain_size");
    long long best = 0;
    for_each_combination(cls.domain_size(), m, [&](const std::vector<int>& pts) {
        auto rows = defined_projections(cls, pts);
        best = std::max(best, static_cast<long long>(rows.size()));
    });
    return best;
}

DimensionReport dimension_report(const ConceptClass& cls) {
    DimensionReport r;
    r.vc = vc_dim(cls);
    r.natarajan = natarajan_dim(cls);
    r.graph = graph_dim(cls);
    r.littlestone_k = cls.partial() ? -2 : littlestone_dim_k(cls);
    return r;
}

TreeDepthReport tree_depth_report(const ConceptClass& cls, int max_depth) {
    TreeDepthReport r;
    r.mll_depth = cls.partial() ? -2 : littlestone_dim_k(cls);
    r.nl_depth = nl_tree_depth(cls, max_depth);
    r.gl_depth = gl_tree_depth(cls, max_depth);
    return r;
}

// ---------------------------------------------------------------------------
// Explicit tree witnesses

namespace {

int build_littlestone_subtree(const LittlestoneSolver& solver, const HypSet& family,
                              int depth, LittlestoneTree* tree) {
    if (depth == 0) return -1;
    const RestrictionIndex& idx = solver.index();
    const int n = idx.cls().domain_size();
    for (int x = 0; x < n; ++x) {
        auto labels = idx.realized_labels(x, family);
        for (size_t i = 0; i < labels.size(); ++i)
            for (size_t j = i + 1; j < labels.size(); ++j) {
                HypSet f0 = family & idx.mask(x, labels[i]);
                HypSet f1 = family & idx.mask(x, labels[j]);
                if (std::min(solver.dim(f0), solver.dim(f1)) >= depth - 1) {
                    int id = static_cast<int>(tree->nodes.size());
                    tree->nodes.push_back({x, labels[i], labels[j], -1, -1});
                    int c0 = build_littlestone_subtree(solver, f0, depth - 1, tree);
                    int c1 = build_littlestone_subtree(solver, f1, depth - 1, tree);
                    tree->nodes[static_cast<size_t>(id)].child0 = c0;
                    tree->nodes[static_cast<size_t>(id)].child1 = c1;
                    return id;
                }
            }
    }
    return -1;  // unreachable when depth <= dim(family)
}

} // namespace

LittlestoneTree find_littlestone_tree(const ConceptClass& cls) {
    LittlestoneTree tree;
    if (cls.empty()) return tree;
    LittlestoneSolver solver(cls);
    tree.levels = solver.dim();
    if (tree.levels > 0)
        build_littlestone_subtree(solver, solver.index().full(), tree.levels, &tree);
    return tree;
}

namespace {

int build_nl_subtree(TreeSearch& search, const HypSet& family, int t, int remaining,
                     NlTree* tree) {
    if (remaining == 0) return -1;
    const RestrictionIndex& idx = search.idx;
    const int n = idx.cls().domain_size();
    int result = -1;
    for_each_combination(n, t, [&](const std::vector<int>& pts) {
        if (result >= 0) return;
        std::vector<std::vector<std::pair<Label, Label>>> cands(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) {
            std::vector<Label> realized;
            for (Label y = 0; y <= idx.cls().k(); ++y)
                if (idx.mask(pts[i], y).intersects(family)) realized.push_back(y);
            for (size_t a = 0; a < realized.size(); ++a)
                for (size_t b = a + 1; b < realized.size(); ++b)
                    cands[i].push_back({realized[a], realized[b]});
            if (cands[i].empty()) return;
        }
        std::vector<size_t> pick(pts.size(), 0);
        std::vector<Label> c0(pts.size()), c1(pts.size());
        int pos = 0;
        while (pos >= 0 && result < 0) {
            if (pos == static_cast<int>(pts.size())) {
                for (size_t i = 0; i < pts.size(); ++i) {
                    c0[i] = cands[i][pick[i]].first;
                    c1[i] = cands[i][pick[i]].second;
                }
                bool ok = true;
                std::vector<HypSet> children;
                for (uint64_t b = 0; ok && b < (uint64_t{1} << pts.size()); ++b) {
                    HypSet f = search.child(family, pts, c0, c1, b);
                    if (f.empty() || search.depth_from(f, t + 1) < remaining - 1) ok = false;
                    else children.push_back(std::move(f));
                }
                if (ok) {
                    int id = static_cast<int>(tree->nodes.size());
                    NlTree::Node node;
                    node.points = pts;
                    node.s0 = c0;
                    node.s1 = c1;
                    node.children.assign(size_t{1} << pts.size(), -1);
                    tree->nodes.push_back(std::move(node));
                    for (uint64_t b = 0; b < (uint64_t{1} << pts.size()); ++b) {
                        int cid = build_nl_subtree(search, children[static_cast<size_t>(b)],
                                                   t + 1, remaining - 1, tree);
                        tree->nodes[static_cast<size_t>(id)].children[static_cast<size_t>(b)] = cid;
                    }
                    result = id;
                    return;
                }
                --pos;
                if (pos >= 0) ++pick[static_cast<size_t>(pos)];
                continue;
            }
            if (pick[static_cast<size_t>(pos)] == cands[static_cast<size_t>(pos)].size()) {
                pick[static_cast<size_t>(pos)] = 0;
                --pos;
                if (pos >= 0) ++pick[static_cast<size_t>(pos)];
                continue;
            }
            ++pos;
            if (pos < static_cast<int>(pts.size())) pick[static_cast<size_t>(pos)] = 0;
        }
    });
    return result;
}

} // namespace

std::optional<NlTree> find_nl_tree(const ConceptClass& cls, int depth) {
    if (depth < 1) throw InputError("nl tree depth must be >= 1");
    if (depth > kMaxTreeDepth)
        throw LimitError("tree depth cap is " + std::to_string(kMaxTreeDepth));
    if (cls.empty()) return std::nullopt;
    RestrictionIndex idx(cls);
    TreeSearch search(idx, depth, false);
    if (search.depth_from(idx.full(), 1) < depth) return std::nullopt;
    NlTree tree;
    tree.depth = depth;
    build_nl_subtree(search, idx.full(), 1, depth, &tree);
    return tree;
}

} // namespace mclab
