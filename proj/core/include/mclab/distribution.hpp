#ifndef MCLAB_DISTRIBUTION_HPP
#define MCLAB_DISTRIBUTION_HPP

#include <functional>
#include <vector>

#include "mclab/rng.hpp"
#include "mclab/types.hpp"

namespace mclab {

struct Atom {
    PointId x;
    Label y;
    double p;
};

// Probability mass function over (point, label) pairs. The support is
// functional: each point carries at most one label, so a realizable target
// labeling always exists and er_P has an exact zero-error reference.
class FiniteDistribution {
public:
    // Validates: probabilities nonnegative, sum within 1e-9 of 1, one label
    // per point, labels/points in [0, k] x [0, domain_size).
    FiniteDistribution(std::vector<Atom> atoms, int domain_size, int k);

    const std::vector<Atom>& atoms() const { return atoms_; }
    int domain_size() const { return n_; }
    int k() const { return k_; }

    // The support labeling as pairs (x, y), one per atom.
    LabeledSample target() const;

    // True iff some hypothesis of cls matches every atom (zero error).
    bool realizable_for(const ConceptClass& cls) const;

    // Exact error of an arbitrary predictor: sum of masses of atoms where the
    // predictor output differs from the atom label. kStar output counts as a
    // mistake.
    double error(const std::function<Label(PointId)>& predictor) const;

    // Draw one atom index using the given stream.
    size_t sample_index(SplitMix64& rng) const;
    LabeledPair sample(SplitMix64& rng) const;
    LabeledSample sample_n(SplitMix64& rng, int n) const;

private:
    std::vector<Atom> atoms_;
    std::vector<double> cumulative_;
    int n_;
    int k_;
};

} // namespace mclab

#endif
