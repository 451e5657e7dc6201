#include "mclab/online.hpp"

#include <string>

#include "mclab/errors.hpp"

namespace mclab {

SoaLearner::SoaLearner(std::shared_ptr<const LittlestoneSolver> solver)
    : solver_(std::move(solver)), version_(solver_->index().full()) {}

Label SoaLearner::predict(PointId x) const {
    if (version_.empty()) throw ProtocolError("soa version space is empty");
    const RestrictionIndex& idx = solver_->index();
    Label best = 0;
    int best_dim = -2;
    for (Label y = 0; y <= idx.cls().k(); ++y) {
        int d = solver_->dim(version_ & idx.mask(x, y));
        if (d > best_dim) {
            best_dim = d;
            best = y;
        }
    }
    return best;
}

void SoaLearner::observe(PointId x, Label truth) {
    version_ &= solver_->index().mask(x, truth);
    if (version_.empty()) throw ProtocolError("unrealizable feed emptied the version space");
}

TournamentLearner::TournamentLearner(std::shared_ptr<const ExpGameSolver> solver)
    : solver_(std::move(solver)) {}

Label TournamentLearner::predict(PointId x) const {
    const int k = solver_->index().cls().k();
    std::vector<int> outdeg(static_cast<size_t>(k) + 1, 0);
    for (Label a = 0; a <= k; ++a)
        for (Label b = a + 1; b <= k; ++b) {
            int eta = solver_->strategy(history_, ExpMove{x, a, b});
            // The strategy keeps the label whose subclass is closer to empty;
            // the other label wins the duel.
            Label winner = eta == 0 ? b : a;
            ++outdeg[static_cast<size_t>(winner)];
        }
    Label best = 0;
    for (Label y = 1; y <= k; ++y)
        if (outdeg[static_cast<size_t>(y)] > outdeg[static_cast<size_t>(best)]) best = y;
    return best;
}

void TournamentLearner::observe(PointId x, Label predicted, Label truth) {
    if (predicted == truth) return;
    // Couple the game: y0 = predicted guess, y1 = revealed truth, eta = 1.
    history_.push_back({ExpMove{x, predicted, truth}, 1});
}

OptimalAdversary::OptimalAdversary(std::shared_ptr<const ExpGameSolver> solver)
    : solver_(std::move(solver)), family_(solver_->index().full()) {
    move_ = solver_->best_adversary_move(family_);
}

PointId OptimalAdversary::next_point() const {
    if (!move_) throw ProtocolError("adversary exhausted its tree");
    return move_->x;
}

Label OptimalAdversary::answer(Label predicted) {
    if (!move_) throw ProtocolError("adversary exhausted its tree");
    Label truth = move_->y0 != predicted ? move_->y0 : move_->y1;
    family_ &= solver_->index().mask(move_->x, truth);
    move_ = solver_->best_adversary_move(family_);
    return truth;
}

namespace {

struct AnyLearner {
    std::unique_ptr<SoaLearner> soa;
    std::unique_ptr<TournamentLearner> tournament;

    static AnyLearner make(const ConceptClass& cls, OnlineLearnerKind kind) {
        AnyLearner l;
        if (kind == OnlineLearnerKind::Soa)
            l.soa = std::make_unique<SoaLearner>(std::make_shared<LittlestoneSolver>(cls));
        else
            l.tournament =
                std::make_unique<TournamentLearner>(std::make_shared<ExpGameSolver>(cls));
        return l;
    }
    Label predict(PointId x) const {
        return soa ? soa->predict(x) : tournament->predict(x);
    }
    void observe(PointId x, Label predicted, Label truth) {
        if (soa)
            soa->observe(x, truth);
        else
            tournament->observe(x, predicted, truth);
    }
};

} // namespace

OnlineTranscript run_online(const ConceptClass& cls, const LabeledSample& sequence,
                            OnlineLearnerKind kind) {
    validate_sample(cls, sequence);
    RestrictionIndex idx(cls);
    HypSet consistent = idx.full();
    AnyLearner learner = AnyLearner::make(cls, kind);
    OnlineTranscript t;
    int round = 0;
    for (const LabeledPair& p : sequence) {
        ++round;
        consistent &= idx.mask(p.x, p.y);
        if (consistent.empty())
            throw ProtocolError("sequence unrealizable at round " + std::to_string(round));
        Label predicted = learner.predict(p.x);
        learner.observe(p.x, predicted, p.y);
        t.rounds.push_back({p.x, predicted, p.y});
        if (predicted != p.y) ++t.mistake_count;
    }
    return t;
}

OnlineTranscript run_online_adversarial(const ConceptClass& cls, OnlineLearnerKind kind) {
    auto solver = std::make_shared<ExpGameSolver>(cls);
    OptimalAdversary adversary(solver);
    AnyLearner learner = AnyLearner::make(cls, kind);
    OnlineTranscript t;
    while (!adversary.done()) {
        PointId x = adversary.next_point();
        Label predicted = learner.predict(x);
        Label truth = adversary.answer(predicted);
        learner.observe(x, predicted, truth);
        t.rounds.push_back({x, predicted, truth});
        if (predicted != truth) ++t.mistake_count;
    }
    return t;
}

} // namespace mclab
