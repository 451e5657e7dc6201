#include "mclab/patterns.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "mclab/dimensions.hpp"
#include "mclab/errors.hpp"

namespace mclab {

bool is_realized_pattern(const ConceptClass& cls, const std::vector<PointId>& points,
                         const std::vector<Label>& s0, const std::vector<Label>& s1,
                         const Pattern& bits) {
    if (points.size() != s0.size() || points.size() != s1.size() ||
        points.size() != bits.size())
        throw InputError("pattern arity mismatch");
    for (size_t i = 0; i < points.size(); ++i) {
        if (points[i] < 0 || points[i] >= cls.domain_size())
            throw InputError("pattern point out of range");
        if (s0[i] < 0 || s0[i] > cls.k() || s1[i] < 0 || s1[i] > cls.k())
            throw InputError("pattern label out of range");
        if (s0[i] == s1[i]) throw InputError("pattern colorings must differ everywhere");
    }
    for (const Hypothesis& h : cls.hypotheses()) {
        bool ok = true;
        for (size_t i = 0; i < points.size(); ++i) {
            Label want = bits[i] ? s1[i] : s0[i];
            if (!h.defined(points[i]) || h.at(points[i]) != want) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

AvoidanceFunction::AvoidanceFunction(std::shared_ptr<const NlGameSolver> solver,
                                     std::vector<NlHistoryEntry> history)
    : solver_(std::move(solver)), history_(std::move(history)) {}

int AvoidanceFunction::k() const { return solver_->index().cls().k(); }

Pattern AvoidanceFunction::operator()(const std::vector<PointId>& points,
                                      const std::vector<Label>& s0,
                                      const std::vector<Label>& s1) const {
    if (static_cast<int>(points.size()) != length())
        throw InputError("avoidance function expects tuples of length " +
                         std::to_string(length()));
    return solver_->strategy(history_, NlMove{points, s0, s1});
}

PatternAvoider::PatternAvoider(std::shared_ptr<const NlGameSolver> solver)
    : solver_(std::move(solver)), consistent_(solver_->index().full()) {
    if (solver_->index().cls().empty()) throw InputError("avoider needs a nonempty class");
    int v = solver_->value();
    if (v >= solver_->horizon())
        throw LimitError("nl game value " + std::to_string(v) +
                         " reaches the horizon; avoider refuses the class");
}

namespace {

// Iterates the everywhere-different coloring pairs of a block that admit a
// data-realized pattern, in the lexicographic order of the concatenated
// (s0, s1) tuple. For such a pair the data-realized pattern is unique:
// position i forces bit 0 when y_i = s0[i] and bit 1 when y_i = s1[i], so a
// pair qualifies only when y_i appears in every position's pair. The skipped
// pairs can never fire the scan.
struct RealizablePairScan {
    int k;
    const std::vector<PointId>& xs;
    const std::vector<Label>& ys;

    // options[i]: (s0, s1, forced bit) triples in lex (s0, s1) order
    std::vector<std::vector<std::array<int, 3>>> options;

    RealizablePairScan(int k_, const std::vector<PointId>& xs_, const std::vector<Label>& ys_)
        : k(k_), xs(xs_), ys(ys_) {
        options.resize(xs.size());
        for (size_t i = 0; i < xs.size(); ++i) {
            for (Label a = 0; a <= k; ++a)
                for (Label b = 0; b <= k; ++b) {
                    if (a == b) continue;
                    if (ys[i] == a)
                        options[i].push_back({a, b, 0});
                    else if (ys[i] == b)
                        options[i].push_back({a, b, 1});
                }
        }
    }

    // Calls visit(s0, s1, forced_pattern) until it returns true; returns
    // whether a visit accepted.
    template <typename F>
    bool scan(F&& visit) const {
        const size_t m = xs.size();
        for (const auto& o : options)
            if (o.empty()) return false;
        std::vector<size_t> pick(m, 0);
        std::vector<Label> s0(m), s1(m);
        Pattern forced(m);
        int pos = 0;
        while (pos >= 0) {
            if (pos == static_cast<int>(m)) {
                for (size_t i = 0; i < m; ++i) {
                    s0[i] = options[i][pick[i]][0];
                    s1[i] = options[i][pick[i]][1];
                    forced[i] = static_cast<uint8_t>(options[i][pick[i]][2]);
                }
                if (visit(s0, s1, forced)) return true;
                --pos;
                if (pos >= 0) ++pick[static_cast<size_t>(pos)];
                continue;
            }
            if (pick[static_cast<size_t>(pos)] == options[static_cast<size_t>(pos)].size()) {
                pick[static_cast<size_t>(pos)] = 0;
                --pos;
                if (pos >= 0) ++pick[static_cast<size_t>(pos)];
                continue;
            }
            ++pos;
            if (pos < static_cast<int>(m)) pick[static_cast<size_t>(pos)] = 0;
        }
        return false;
    }
};

} // namespace

void PatternAvoider::feed(PointId x, Label y) {
    const ConceptClass& cls = solver_->index().cls();
    if (x < 0 || x >= cls.domain_size()) throw InputError("stream point out of range");
    if (y < 0 || y > cls.k()) throw InputError("stream label out of range");
    consistent_ &= solver_->index().mask(x, y);
    if (consistent_.empty())
        throw ProtocolError("stream unrealizable at item " +
                            std::to_string(stream_.size() + 1));
    stream_.push_back({x, y});

    const int L = current_length();
    if (static_cast<int>(stream_.size()) < L) return;  // cannot happen after round 1
    std::vector<PointId> xs(static_cast<size_t>(L));
    std::vector<Label> ys(static_cast<size_t>(L));
    for (int i = 0; i < L; ++i) {
        xs[static_cast<size_t>(i)] = stream_[stream_.size() - static_cast<size_t>(L) +
                                             static_cast<size_t>(i)].first;
        ys[static_cast<size_t>(i)] = stream_[stream_.size() - static_cast<size_t>(L) +
                                             static_cast<size_t>(i)].second;
    }

    RealizablePairScan scan(cls.k(), xs, ys);
    scan.scan([&](const std::vector<Label>& s0, const std::vector<Label>& s1,
                  const Pattern& forced) {
        NlMove move{xs, s0, s1};
        Pattern b = solver_->strategy(history_, move);
        if (b != forced) return false;  // the guessed pattern is not realized
        history_.push_back({std::move(move), std::move(b)});
        return true;
    });
}

void PatternAvoider::feed(const LabeledSample& stream) {
    for (const LabeledPair& p : stream) feed(p.x, p.y);
}

bool avoidance_fails_on_block(const AvoidanceFunction& g, const std::vector<PointId>& xs,
                              const std::vector<Label>& ys) {
    RealizablePairScan scan(g.k(), xs, ys);
    return scan.scan([&](const std::vector<Label>& s0, const std::vector<Label>& s1,
                         const Pattern& forced) { return g(xs, s0, s1) == forced; });
}

ConceptClass build_pattern_restricted_class(const std::vector<PointId>& points,
                                            const AvoidanceFunction& g, int t,
                                            bool verify_ndim) {
    const int m = static_cast<int>(points.size());
    const int k = g.k();
    if (t != g.length()) throw InputError("t must equal the avoidance function length");
    if (m < 1) throw InputError("need at least one point");
    if (m > 16) throw LimitError("pattern-restricted class cap is 16 points");

    // Mixed-radix index over labelings of the m points.
    size_t total = 1;
    for (int i = 0; i < m; ++i) total *= static_cast<size_t>(k + 1);
    std::vector<bool> excluded(total, false);

    if (m >= t) {
        std::vector<int> sub(static_cast<size_t>(t));
        for (int i = 0; i < t; ++i) sub[static_cast<size_t>(i)] = i;
        std::vector<PointId> xs(static_cast<size_t>(t));
        std::vector<Label> s0(static_cast<size_t>(t)), s1(static_cast<size_t>(t));
        while (true) {
            for (int i = 0; i < t; ++i)
                xs[static_cast<size_t>(i)] = points[static_cast<size_t>(sub[static_cast<size_t>(i)])];
            // every ordered everywhere-different pair on the subset
            std::vector<size_t> pick(static_cast<size_t>(t), 0);
            const size_t pair_count = static_cast<size_t>((k + 1) * k);
            int pos = 0;
            while (pos >= 0) {
                if (pos == t) {
                    for (int i = 0; i < t; ++i) {
                        size_t p = pick[static_cast<size_t>(i)];
                        Label a = static_cast<Label>(p / static_cast<size_t>(k));
                        Label rem = static_cast<Label>(p % static_cast<size_t>(k));
                        Label b = rem >= a ? rem + 1 : rem;
                        s0[static_cast<size_t>(i)] = a;
                        s1[static_cast<size_t>(i)] = b;
                    }
                    Pattern b = g(xs, s0, s1);
                    // Mark every labeling matching the selected colors on the
                    // subset as realizing this pattern.
                    std::vector<Label> want(static_cast<size_t>(t));
                    for (int i = 0; i < t; ++i)
                        want[static_cast<size_t>(i)] =
                            b[static_cast<size_t>(i)] ? s1[static_cast<size_t>(i)]
                                                      : s0[static_cast<size_t>(i)];
                    // enumerate completions
                    std::vector<int> free_pos;
                    for (int i = 0; i < m; ++i)
                        if (std::find(sub.begin(), sub.end(), i) == sub.end())
                            free_pos.push_back(i);
                    size_t completions = 1;
                    for (size_t i = 0; i < free_pos.size(); ++i)
                        completions *= static_cast<size_t>(k + 1);
                    for (size_t c = 0; c < completions; ++c) {
                        size_t idx = 0;
                        size_t cc = c;
                        std::vector<Label> f(static_cast<size_t>(m), 0);
                        for (int i = 0; i < t; ++i)
                            f[static_cast<size_t>(sub[static_cast<size_t>(i)])] =
                                want[static_cast<size_t>(i)];
                        for (int fp : free_pos) {
                            f[static_cast<size_t>(fp)] =
                                static_cast<Label>(cc % static_cast<size_t>(k + 1));
                            cc /= static_cast<size_t>(k + 1);
                        }
                        for (int i = m - 1; i >= 0; --i)
                            idx = idx * static_cast<size_t>(k + 1) +
                                  static_cast<size_t>(f[static_cast<size_t>(i)]);
                        excluded[idx] = true;
                    }
                    --pos;
                    if (pos >= 0) ++pick[static_cast<size_t>(pos)];
                    continue;
                }
                if (pick[static_cast<size_t>(pos)] == pair_count) {
                    pick[static_cast<size_t>(pos)] = 0;
                    --pos;
                    if (pos >= 0) ++pick[static_cast<size_t>(pos)];
                    continue;
                }
                ++pos;
                if (pos < t) pick[static_cast<size_t>(pos)] = 0;
            }
            // next subset
            int i = t - 1;
            while (i >= 0 && sub[static_cast<size_t>(i)] == m - t + i) --i;
            if (i < 0) break;
            ++sub[static_cast<size_t>(i)];
            for (int j = i + 1; j < t; ++j)
                sub[static_cast<size_t>(j)] = sub[static_cast<size_t>(j - 1)] + 1;
        }
    }

    std::vector<Hypothesis> rows;
    for (size_t idx = 0; idx < total; ++idx) {
        if (excluded[idx]) continue;
        std::vector<int8_t> f(static_cast<size_t>(m));
        size_t v = idx;
        for (int i = 0; i < m; ++i) {
            f[static_cast<size_t>(i)] = static_cast<int8_t>(v % static_cast<size_t>(k + 1));
            v /= static_cast<size_t>(k + 1);
        }
        rows.emplace_back(std::move(f));
    }
    ConceptClass result(k, m, ClassMode::Total, std::move(rows));
    if (verify_ndim && natarajan_dim(result) >= t)
        throw std::logic_error("pattern-restricted class has Ndim >= t");
    return result;
}

} // namespace mclab
