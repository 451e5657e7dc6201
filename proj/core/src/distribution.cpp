#include "mclab/distribution.hpp"

#include <cmath>
#include <map>

namespace mclab {

FiniteDistribution::FiniteDistribution(std::vector<Atom> atoms, int domain_size, int k)
    : atoms_(std::move(atoms)), n_(domain_size), k_(k) {
    if (atoms_.empty()) throw InputError("distribution needs at least one atom");
    double sum = 0.0;
    std::map<PointId, Label> support;
    for (const Atom& a : atoms_) {
        if (a.x < 0 || a.x >= n_) throw InputError("atom point id out of range");
        if (a.y < 0 || a.y > k_) throw InputError("atom label out of range");
        if (a.p < 0.0) throw InputError("atom probability negative");
        auto [it, inserted] = support.emplace(a.x, a.y);
        if (!inserted && it->second != a.y)
            throw InputError("distribution assigns two labels to one point (label noise rejected)");
        sum += a.p;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw InputError("atom probabilities do not sum to 1");
    cumulative_.reserve(atoms_.size());
    double acc = 0.0;
    for (const Atom& a : atoms_) {
        acc += a.p;
        cumulative_.push_back(acc);
    }
    cumulative_.back() = 1.0;
}

LabeledSample FiniteDistribution::target() const {
    LabeledSample s;
    s.reserve(atoms_.size());
    for (const Atom& a : atoms_) s.push_back({a.x, a.y});
    return s;
}

bool FiniteDistribution::realizable_for(const ConceptClass& cls) const {
    if (n_ > cls.domain_size() || k_ > cls.k()) return false;
    return is_realizable(cls, target());
}

double FiniteDistribution::error(const std::function<Label(PointId)>& predictor) const {
    double e = 0.0;
    for (const Atom& a : atoms_) {
        Label out = predictor(a.x);
        if (out != a.y) e += a.p;  // kStar never equals a real label
    }
    return e;
}

size_t FiniteDistribution::sample_index(SplitMix64& rng) const {
    double u = rng.next_double();
    for (size_t i = 0; i < cumulative_.size(); ++i)
        if (u < cumulative_[i]) return i;
    return cumulative_.size() - 1;
}

LabeledPair FiniteDistribution::sample(SplitMix64& rng) const {
    const Atom& a = atoms_[sample_index(rng)];
    return {a.x, a.y};
}

LabeledSample FiniteDistribution::sample_n(SplitMix64& rng, int n) const {
    LabeledSample s;
    s.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) s.push_back(sample(rng));
    return s;
}

} // namespace mclab
