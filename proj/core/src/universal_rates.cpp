#include "mclab/universal_rates.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "mclab/errors.hpp"
#include "mclab/one_inclusion.hpp"

namespace mclab {

LearnerContext LearnerContext::exponential(const ConceptClass& cls) {
    LearnerContext ctx;
    ctx.exp_solver = std::make_shared<ExpGameSolver>(cls);
    return ctx;
}

LearnerContext LearnerContext::linear(const ConceptClass& cls, int horizon) {
    LearnerContext ctx;
    ctx.exp_solver = std::make_shared<ExpGameSolver>(cls);
    ctx.nl_solver = std::make_shared<NlGameSolver>(cls, horizon);
    return ctx;
}

Label MajorityPredictor::predict(PointId x) const {
    std::vector<int> votes(static_cast<size_t>(k_) + 1, 0);
    for (const auto& m : members_) {
        Label y = m(x);
        if (y >= 0 && y <= k_) ++votes[static_cast<size_t>(y)];
    }
    Label best = 0;
    for (Label y = 1; y <= k_; ++y)
        if (votes[static_cast<size_t>(y)] > votes[static_cast<size_t>(best)]) best = y;
    return best;
}

namespace {

void require_realizable(const ConceptClass& cls, const LabeledSample& dataset) {
    validate_sample(cls, dataset);
    if (!is_realizable(cls, dataset))
        throw ProtocolError("dataset is not realizable for the class");
}

// Trains one tournament learner online on dataset[range).
TournamentLearner train_tournament(const LearnerContext& ctx, const LabeledSample& dataset,
                                   int begin, int end) {
    TournamentLearner learner(ctx.exp_solver);
    for (int i = begin; i < end; ++i) {
        Label predicted = learner.predict(dataset[static_cast<size_t>(i)].x);
        learner.observe(dataset[static_cast<size_t>(i)].x, predicted,
                        dataset[static_cast<size_t>(i)].y);
    }
    return learner;
}

bool errs_on_range(const TournamentLearner& learner, const LabeledSample& dataset, int begin,
                   int end) {
    for (int i = begin; i < end; ++i)
        if (learner.predict(dataset[static_cast<size_t>(i)].x) !=
            dataset[static_cast<size_t>(i)].y)
            return true;
    return false;
}

} // namespace

BatchPlan estimate_t_hat_exp(const LabeledSample& dataset, const LearnerContext& ctx) {
    const ConceptClass& cls = ctx.exp_solver->index().cls();
    const int n = static_cast<int>(dataset.size());
    if (n < 4) throw InputError("estimate_t_hat_exp needs at least 4 samples");
    require_realizable(cls, dataset);

    const int half = n / 2;
    BatchPlan plan;
    plan.fallback = true;
    plan.t_hat = half;
    for (int t = 1; t <= half; ++t) {
        const int batches = n / (2 * t);
        int bad = 0;
        for (int i = 0; i < batches; ++i) {
            TournamentLearner learner = train_tournament(ctx, dataset, i * t, (i + 1) * t);
            if (errs_on_range(learner, dataset, half, n)) ++bad;
        }
        if (4 * bad < batches) {  // e_hat < 1/4
            plan.t_hat = t;
            plan.fallback = false;
            break;
        }
    }
    plan.batch_count = n / (2 * plan.t_hat);
    for (int i = 0; i < plan.batch_count; ++i)
        plan.batch_ranges.push_back({i * plan.t_hat, (i + 1) * plan.t_hat});
    return plan;
}

MajorityPredictor learn_exponential(const LabeledSample& dataset, const LearnerContext& ctx) {
    const ConceptClass& cls = ctx.exp_solver->index().cls();
    BatchPlan plan = estimate_t_hat_exp(dataset, ctx);
    std::vector<std::function<Label(PointId)>> members;
    members.reserve(static_cast<size_t>(plan.batch_count));
    for (const auto& [begin, end] : plan.batch_ranges) {
        auto learner =
            std::make_shared<TournamentLearner>(train_tournament(ctx, dataset, begin, end));
        members.push_back([learner](PointId x) { return learner->predict(x); });
    }
    return MajorityPredictor(cls.k(), std::move(members));
}

namespace {

// One-inclusion member predictor of the linear-rate learner: pattern-restrict
// the labelings of the second-half support plus the query point, then predict
// transductively. Falls back to label 0 when the restricted class rejects the
// observed labels.
struct LinearMember {
    AvoidanceFunction g;
    std::vector<PointId> support;             // distinct second-half points, ascending
    std::vector<Label> support_labels;        // matching labels
    int domain_size;
    int k;
    // cache per distinct query-point set
    std::shared_ptr<std::map<std::vector<PointId>, ConceptClass>> cache =
        std::make_shared<std::map<std::vector<PointId>, ConceptClass>>();

    Label operator()(PointId x) const {
        std::vector<PointId> pts = support;
        if (std::find(pts.begin(), pts.end(), x) == pts.end()) {
            pts.push_back(x);
            std::sort(pts.begin(), pts.end());
        }
        auto it = cache->find(pts);
        if (it == cache->end()) {
            ConceptClass restricted =
                build_pattern_restricted_class(pts, g, g.length(), false);
            it = cache->emplace(pts, std::move(restricted)).first;
        }
        const ConceptClass& local = it->second;
        LabeledSample labeled;
        for (size_t i = 0; i < support.size(); ++i) {
            int c = static_cast<int>(std::find(pts.begin(), pts.end(), support[i]) -
                                     pts.begin());
            labeled.push_back({c, support_labels[i]});
        }
        int test = static_cast<int>(std::find(pts.begin(), pts.end(), x) - pts.begin());
        try {
            return one_inclusion_predict(local, labeled, test);
        } catch (const ProtocolError&) {
            return 0;  // the avoidance function excluded the true labeling
        }
    }
};

} // namespace

MajorityPredictor learn_linear(const LabeledSample& dataset, const LearnerContext& ctx) {
    if (!ctx.nl_solver) throw InputError("learn_linear needs an nl solver in the context");
    const ConceptClass& cls = ctx.nl_solver->index().cls();
    const int n = static_cast<int>(dataset.size());
    if (n < 4) throw InputError("learn_linear needs at least 4 samples");
    require_realizable(cls, dataset);

    const int quarter = n / 4;
    const int half = n / 2;

    // Avoiders train on quarter 1; their pattern-avoidance failures are
    // counted on sliding windows of quarter 2.
    auto train_avoider = [&](int t, int i) {
        PatternAvoider avoider(ctx.nl_solver);
        for (int s = i * t; s < (i + 1) * t; ++s)
            avoider.feed(dataset[static_cast<size_t>(s)].x, dataset[static_cast<size_t>(s)].y);
        return avoider;
    };
    auto fails_on_quarter2 = [&](const AvoidanceFunction& g) {
        const int len = g.length();
        std::vector<PointId> xs(static_cast<size_t>(len));
        std::vector<Label> ys(static_cast<size_t>(len));
        for (int s = quarter; s + len <= half; ++s) {
            for (int i = 0; i < len; ++i) {
                xs[static_cast<size_t>(i)] = dataset[static_cast<size_t>(s + i)].x;
                ys[static_cast<size_t>(i)] = dataset[static_cast<size_t>(s + i)].y;
            }
            if (avoidance_fails_on_block(g, xs, ys)) return true;
        }
        return false;
    };

    int t_hat = std::max(1, quarter);
    bool found = false;
    for (int t = 1; t <= quarter && !found; ++t) {
        const int batches = n / (4 * t);
        int bad = 0;
        for (int i = 0; i < batches; ++i)
            if (fails_on_quarter2(train_avoider(t, i).function())) ++bad;
        if (4 * bad < batches) {
            t_hat = t;
            found = true;
        }
    }

    // Second half support with labels (repeats agree by realizability).
    std::map<PointId, Label> support_map;
    for (int s = half; s < n; ++s)
        support_map[dataset[static_cast<size_t>(s)].x] = dataset[static_cast<size_t>(s)].y;
    std::vector<PointId> support;
    std::vector<Label> support_labels;
    for (const auto& [x, y] : support_map) {
        support.push_back(x);
        support_labels.push_back(y);
    }

    const int batch_count = std::max(1, n / (4 * t_hat));
    std::vector<std::function<Label(PointId)>> members;
    members.reserve(static_cast<size_t>(batch_count));
    for (int i = 0; i < batch_count; ++i) {
        LinearMember member{train_avoider(t_hat, i).function(), support, support_labels,
                            cls.domain_size(), cls.k()};
        members.push_back(std::move(member));
    }
    return MajorityPredictor(cls.k(), std::move(members));
}

std::pair<FiniteDistribution, FiniteDistribution> lower_bound_exp_pair(
    const ConceptClass& cls) {
    if (cls.partial()) throw InputError("lower_bound_exp_pair needs a total class");
    const int m = static_cast<int>(cls.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (PointId x = 0; x < cls.domain_size(); ++x) {
                if (cls.value(static_cast<size_t>(i), x) != cls.value(static_cast<size_t>(j), x))
                    continue;
                for (PointId xp = 0; xp < cls.domain_size(); ++xp) {
                    Label y0 = cls.value(static_cast<size_t>(i), xp);
                    Label y1 = cls.value(static_cast<size_t>(j), xp);
                    if (y0 == y1) continue;
                    Label y = cls.value(static_cast<size_t>(i), x);
                    FiniteDistribution p0({{x, y, 0.5}, {xp, y0, 0.5}}, cls.domain_size(),
                                          cls.k());
                    FiniteDistribution p1({{x, y, 0.5}, {xp, y1, 0.5}}, cls.domain_size(),
                                          cls.k());
                    return {std::move(p0), std::move(p1)};
                }
            }
    throw ConstructionError(
        "no agreeing/conflicting hypothesis pair: class is degenerate");
}

FiniteDistribution branch_distribution(const ConceptClass& cls, const LittlestoneTree& tree,
                                       const std::vector<uint8_t>& branch) {
    if (tree.levels < 1 || tree.nodes.empty()) throw InputError("tree has no levels");
    if (static_cast<int>(branch.size()) != tree.levels)
        throw InputError("branch needs one bit per tree level");

    std::map<std::pair<PointId, Label>, double> mass;
    int node = 0;
    LabeledSample path;
    for (int l = 0; l < tree.levels; ++l) {
        if (node < 0) throw InputError("branch leaves the tree early");
        const auto& nd = tree.nodes[static_cast<size_t>(node)];
        Label z = branch[static_cast<size_t>(l)] ? nd.y1 : nd.y0;
        double w = l + 1 < tree.levels ? std::ldexp(1.0, -(l + 1)) : std::ldexp(1.0, -l);
        mass[{nd.x, z}] += w;
        path.push_back({nd.x, z});
        node = branch[static_cast<size_t>(l)] ? nd.child1 : nd.child0;
    }
    if (!is_realizable(cls, path))
        throw InputError("tree branch is not consistent with any hypothesis");

    std::vector<Atom> atoms;
    for (const auto& [xy, p] : mass) atoms.push_back({xy.first, xy.second, p});
    return FiniteDistribution(std::move(atoms), cls.domain_size(), cls.k());
}

FiniteDistribution slow_rate_distribution(const ConceptClass& cls, const NlTree& tree,
                                          const std::vector<Pattern>& branch,
                                          const std::vector<double>& level_mass) {
    if (tree.depth < 1 || tree.nodes.empty()) throw InputError("nl tree has no levels");
    if (static_cast<int>(branch.size()) != tree.depth)
        throw InputError("branch needs one pattern per level");
    if (static_cast<int>(level_mass.size()) != tree.depth)
        throw InputError("need one mass per level");
    double sum = 0.0;
    for (double p : level_mass) {
        if (p < 0.0) throw InputError("level mass negative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw InputError("level masses must sum to 1");

    // Collect the branch constraints and locate a hypothesis N-consistent
    // with the whole branch.
    int node = 0;
    std::vector<const NlTree::Node*> path_nodes;
    for (int t = 1; t <= tree.depth; ++t) {
        if (node < 0) throw InputError("branch leaves the tree early");
        const auto& nd = tree.nodes[static_cast<size_t>(node)];
        if (static_cast<int>(branch[static_cast<size_t>(t - 1)].size()) != t)
            throw InputError("level " + std::to_string(t) + " pattern needs " +
                             std::to_string(t) + " bits");
        path_nodes.push_back(&nd);
        uint64_t code = 0;
        for (int i = 0; i < t; ++i)
            if (branch[static_cast<size_t>(t - 1)][static_cast<size_t>(i)])
                code |= uint64_t{1} << i;
        node = t < tree.depth ? nd.children[static_cast<size_t>(code)] : -1;
    }
    LabeledSample constraints;
    for (int t = 1; t <= tree.depth; ++t) {
        const auto& nd = *path_nodes[static_cast<size_t>(t - 1)];
        for (int i = 0; i < t; ++i) {
            Label want = branch[static_cast<size_t>(t - 1)][static_cast<size_t>(i)]
                             ? nd.s1[static_cast<size_t>(i)]
                             : nd.s0[static_cast<size_t>(i)];
            constraints.push_back({nd.points[static_cast<size_t>(i)], want});
        }
    }
    auto h = find_consistent(cls, constraints);
    if (!h) throw InputError("branch is not N-consistent with any hypothesis");

    std::map<std::pair<PointId, Label>, double> mass;
    for (int t = 1; t <= tree.depth; ++t) {
        const auto& nd = *path_nodes[static_cast<size_t>(t - 1)];
        for (int i = 0; i < t; ++i) {
            PointId x = nd.points[static_cast<size_t>(i)];
            mass[{x, cls.value(*h, x)}] += level_mass[static_cast<size_t>(t - 1)] / t;
        }
    }
    std::vector<Atom> atoms;
    for (const auto& [xy, p] : mass) atoms.push_back({xy.first, xy.second, p});
    return FiniteDistribution(std::move(atoms), cls.domain_size(), cls.k());
}

} // namespace mclab
