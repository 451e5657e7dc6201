#include "mclab/games.hpp"

#include <algorithm>
#include <unordered_map>

#include "mclab/errors.hpp"

namespace mclab {

namespace {

void validate_exp_move(const ConceptClass& cls, const ExpMove& m) {
    if (m.x < 0 || m.x >= cls.domain_size()) throw InputError("move point out of range");
    if (m.y0 < 0 || m.y0 > cls.k() || m.y1 < 0 || m.y1 > cls.k())
        throw InputError("move label out of range");
    if (m.y0 == m.y1) throw InputError("exponential-game move needs y0 != y1");
}

void validate_nl_move(const ConceptClass& cls, const NlMove& m) {
    if (m.points.empty()) throw InputError("nl move needs at least one point");
    if (m.s0.size() != m.points.size() || m.s1.size() != m.points.size())
        throw InputError("nl move coloring sizes must match the point count");
    for (size_t i = 0; i < m.points.size(); ++i) {
        if (m.points[i] < 0 || m.points[i] >= cls.domain_size())
            throw InputError("nl move point out of range");
        if (m.s0[i] < 0 || m.s0[i] > cls.k() || m.s1[i] < 0 || m.s1[i] > cls.k())
            throw InputError("nl move label out of range");
        if (m.s0[i] == m.s1[i])
            throw InputError("nl move colorings must differ at every position");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Exponential game

struct ExpGameSolver::Impl {
    RestrictionIndex idx;
    mutable std::unordered_map<HypSet, int, HypSetHash> memo;

    explicit Impl(const ConceptClass& cls) : idx(cls) {}

    // Minimax: adversary maximizes over moves, learner minimizes over eta.
    int value(const HypSet& family) const {
        if (family.empty()) return -1;
        auto it = memo.find(family);
        if (it != memo.end()) return it->second;
        const ConceptClass& cls = idx.cls();
        int best = 0;
        for (int x = 0; x < cls.domain_size(); ++x) {
            for (Label a = 0; a <= cls.k(); ++a) {
                for (Label b = a + 1; b <= cls.k(); ++b) {
                    HypSet f0 = family & idx.mask(x, a);
                    HypSet f1 = family & idx.mask(x, b);
                    int v0 = f0.empty() ? 0 : 1 + value(f0);
                    int v1 = f1.empty() ? 0 : 1 + value(f1);
                    best = std::max(best, std::min(v0, v1));
                }
            }
        }
        memo.emplace(family, best);
        return best;
    }
};

ExpGameSolver::ExpGameSolver(const ConceptClass& cls) : impl_(std::make_unique<Impl>(cls)) {
    if (cls.partial()) throw InputError("the exponential game needs a total class");
}
ExpGameSolver::~ExpGameSolver() = default;
ExpGameSolver::ExpGameSolver(ExpGameSolver&&) noexcept = default;

const RestrictionIndex& ExpGameSolver::index() const { return impl_->idx; }
int ExpGameSolver::value() const { return impl_->value(impl_->idx.full()); }
int ExpGameSolver::value(const HypSet& family) const { return impl_->value(family); }

HypSet ExpGameSolver::family_after(const std::vector<ExpHistoryEntry>& history) const {
    HypSet f = impl_->idx.full();
    for (const ExpHistoryEntry& e : history) {
        validate_exp_move(impl_->idx.cls(), e.move);
        if (e.eta != 0 && e.eta != 1) throw InputError("eta must be 0 or 1");
        f &= impl_->idx.mask(e.move.x, e.eta ? e.move.y1 : e.move.y0);
    }
    return f;
}

int ExpGameSolver::strategy(const std::vector<ExpHistoryEntry>& history,
                            const ExpMove& move) const {
    validate_exp_move(impl_->idx.cls(), move);
    HypSet f = family_after(history);
    if (f.empty()) throw ProtocolError("game history already emptied the class");
    int v0 = impl_->value(f & impl_->idx.mask(move.x, move.y0));
    int v1 = impl_->value(f & impl_->idx.mask(move.x, move.y1));
    return v1 < v0 ? 1 : 0;
}

std::optional<ExpMove> ExpGameSolver::best_adversary_move(const HypSet& family) const {
    int v = impl_->value(family);
    if (v <= 0) return std::nullopt;
    const ConceptClass& cls = impl_->idx.cls();
    for (int x = 0; x < cls.domain_size(); ++x)
        for (Label a = 0; a <= cls.k(); ++a)
            for (Label b = a + 1; b <= cls.k(); ++b) {
                HypSet f0 = family & impl_->idx.mask(x, a);
                HypSet f1 = family & impl_->idx.mask(x, b);
                if (f0.empty() || f1.empty()) continue;
                if (std::min(impl_->value(f0), impl_->value(f1)) == v - 1)
                    return ExpMove{x, a, b};
            }
    return std::nullopt;  // unreachable for v >= 1
}

// ---------------------------------------------------------------------------
// NL game

namespace {

struct NlStateKey {
    HypSet family;
    int round;
    bool operator==(const NlStateKey& o) const {
        return round == o.round && family == o.family;
    }
};
struct NlStateHash {
    size_t operator()(const NlStateKey& k) const {
        return k.family.hash() * 1000003u + static_cast<size_t>(k.round);
    }
};

struct NlStrategyKey {
    HypSet family;
    std::vector<int32_t> move;  // points, s0, s1 flattened
    bool operator==(const NlStrategyKey& o) const {
        return move == o.move && family == o.family;
    }
};
struct NlStrategyHash {
    size_t operator()(const NlStrategyKey& k) const {
        size_t h = k.family.hash();
        for (int32_t v : k.move) h = h * 1000003u + static_cast<size_t>(v + 7);
        return h;
    }
};

} // namespace

struct NlGameSolver::Impl {
    RestrictionIndex idx;
    int horizon;
    mutable std::unordered_map<NlStateKey, int, NlStateHash> memo;
    mutable std::unordered_map<NlStrategyKey, Pattern, NlStrategyHash> strategy_cache;

    Impl(const ConceptClass& cls, int h) : idx(cls), horizon(h) {}

    HypSet apply_round(const HypSet& family, const NlMove& move, const Pattern& pat) const {
        HypSet f = family;
        for (size_t i = 0; i < move.points.size(); ++i) {
            f &= idx.mask(move.points[i], pat[i] ? move.s1[i] : move.s0[i]);
            if (f.empty()) break;
        }
        return f;
    }

    // Adversary maximizes over round-sized moves, learner minimizes over
    // patterns. Move enumeration uses distinct ascending point tuples and
    // per-position pairs a < b: repeats and swaps never help the adversary.
    int value(const HypSet& family, int round) const {
        if (family.empty()) return -1;
        const int n = idx.cls().domain_size();
        if (round > horizon || round > n) return 0;
        NlStateKey key{family, round};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        const int ceiling = std::min(horizon, n) - round + 1;
        int best = 0;

        std::vector<int> pts(static_cast<size_t>(round));
        std::vector<std::vector<std::pair<Label, Label>>> cands(static_cast<size_t>(round));
        std::vector<size_t> pick(static_cast<size_t>(round));
        NlMove move;
        move.points.resize(static_cast<size_t>(round));
        move.s0.resize(static_cast<size_t>(round));
        move.s1.resize(static_cast<size_t>(round));
        Pattern pat(static_cast<size_t>(round));

        // ascending point combinations
        for (int i = 0; i < round; ++i) pts[static_cast<size_t>(i)] = i;
        while (best < ceiling) {
            bool viable = true;
            for (int i = 0; i < round && viable; ++i) {
                cands[static_cast<size_t>(i)].clear();
                auto realized = idx.realized_labels(pts[static_cast<size_t>(i)], family);
                for (size_t a = 0; a < realized.size(); ++a)
                    for (size_t b = a + 1; b < realized.size(); ++b)
                        cands[static_cast<size_t>(i)].push_back({realized[a], realized[b]});
                if (cands[static_cast<size_t>(i)].empty()) viable = false;
            }
            if (viable) {
                std::fill(pick.begin(), pick.end(), 0);
                int pos = 0;
                while (pos >= 0 && best < ceiling) {
                    if (pos == round) {
                        for (int i = 0; i < round; ++i) {
                            move.points[static_cast<size_t>(i)] = pts[static_cast<size_t>(i)];
                            move.s0[static_cast<size_t>(i)] =
                                cands[static_cast<size_t>(i)][pick[static_cast<size_t>(i)]].first;
                            move.s1[static_cast<size_t>(i)] =
                                cands[static_cast<size_t>(i)][pick[static_cast<size_t>(i)]].second;
                        }
                        int move_val = ceiling;
                        for (uint64_t b = 0; b < (uint64_t{1} << round); ++b) {
                            for (int i = 0; i < round; ++i)
                                pat[static_cast<size_t>(i)] = (b >> i) & 1;
                            HypSet f = apply_round(family, move, pat);
                            if (f.empty()) {
                                move_val = 0;
                                break;
                            }
                            move_val = std::min(move_val, 1 + value(f, round + 1));
                            if (move_val <= best) break;
                        }
                        best = std::max(best, move_val);
                        --pos;
                        if (pos >= 0) ++pick[static_cast<size_t>(pos)];
                        continue;
                    }
                    if (pick[static_cast<size_t>(pos)] ==
                        cands[static_cast<size_t>(pos)].size()) {
                        pick[static_cast<size_t>(pos)] = 0;
                        --pos;
                        if (pos >= 0) ++pick[static_cast<size_t>(pos)];
                        continue;
                    }
                    ++pos;
                    if (pos < round) pick[static_cast<size_t>(pos)] = 0;
                }
            }
            // next combination
            int i = round - 1;
            while (i >= 0 && pts[static_cast<size_t>(i)] == n - round + i) --i;
            if (i < 0) break;
            ++pts[static_cast<size_t>(i)];
            for (int j = i + 1; j < round; ++j)
                pts[static_cast<size_t>(j)] = pts[static_cast<size_t>(j - 1)] + 1;
        }
        memo.emplace(key, best);
        return best;
    }
};

NlGameSolver::NlGameSolver(const ConceptClass& cls, int horizon)
    : impl_(std::make_unique<Impl>(cls, horizon)) {
    if (horizon < 1) throw InputError("horizon must be >= 1");
    if (horizon > kMaxTreeDepth)
        throw LimitError("nl game horizon cap is " + std::to_string(kMaxTreeDepth));
}
NlGameSolver::~NlGameSolver() = default;
NlGameSolver::NlGameSolver(NlGameSolver&&) noexcept = default;

const RestrictionIndex& NlGameSolver::index() const { return impl_->idx; }
int NlGameSolver::horizon() const { return impl_->horizon; }

int NlGameSolver::value() const {
    if (impl_->idx.cls().empty()) return -1;
    return impl_->value(impl_->idx.full(), 1);
}
int NlGameSolver::value(const HypSet& family, int round) const {
    return impl_->value(family, round);
}

HypSet NlGameSolver::apply_round(const HypSet& family, const NlMove& move,
                                 const Pattern& pattern) const {
    validate_nl_move(impl_->idx.cls(), move);
    if (pattern.size() != move.points.size())
        throw InputError("pattern size must match the move size");
    return impl_->apply_round(family, move, pattern);
}

HypSet NlGameSolver::family_after(const std::vector<NlHistoryEntry>& history) const {
    HypSet f = impl_->idx.full();
    size_t round = 1;
    for (const NlHistoryEntry& e : history) {
        validate_nl_move(impl_->idx.cls(), e.move);
        if (e.move.points.size() != round)
            throw InputError("history round " + std::to_string(round) + " carries " +
                             std::to_string(e.move.points.size()) + " points");
        if (e.pattern.size() != round) throw InputError("history pattern size mismatch");
        f = impl_->apply_round(f, e.move, e.pattern);
        ++round;
    }
    return f;
}

Pattern NlGameSolver::strategy(const std::vector<NlHistoryEntry>& history,
                               const NlMove& move) const {
    validate_nl_move(impl_->idx.cls(), move);
    const int round = static_cast<int>(history.size()) + 1;
    if (static_cast<int>(move.points.size()) != round)
        throw InputError("round " + std::to_string(round) + " move must carry " +
                         std::to_string(round) + " points");
    if (round > impl_->horizon) throw LimitError("nl game round exceeds the horizon");
    HypSet f = family_after(history);
    if (f.empty()) throw ProtocolError("game history already emptied the class");

    NlStrategyKey key{f, {}};
    key.move.reserve(3 * move.points.size());
    for (PointId x : move.points) key.move.push_back(x);
    for (Label y : move.s0) key.move.push_back(y);
    for (Label y : move.s1) key.move.push_back(y);
    auto it = impl_->strategy_cache.find(key);
    if (it != impl_->strategy_cache.end()) return it->second;

    Pattern best_pat(static_cast<size_t>(round), 0);
    int best_val = 0;
    bool first = true;
    Pattern pat(static_cast<size_t>(round));
    // b ascending visits patterns in lexicographic order: position 0 is the
    // most significant bit, so ties go to the lexicographically smallest.
    for (uint64_t b = 0; b < (uint64_t{1} << round); ++b) {
        for (int i = 0; i < round; ++i)
            pat[static_cast<size_t>(i)] = (b >> (round - 1 - i)) & 1;
        HypSet child = impl_->apply_round(f, move, pat);
        int v = child.empty() ? -1 : impl_->value(child, round + 1);
        if (first || v < best_val) {
            first = false;
            best_val = v;
            best_pat = pat;
        }
    }
    impl_->strategy_cache.emplace(std::move(key), best_pat);
    return best_pat;
}

} // namespace mclab
