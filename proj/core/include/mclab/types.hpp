#ifndef MCLAB_TYPES_HPP
#define MCLAB_TYPES_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mclab/errors.hpp"

namespace mclab {

using Label = int;    // 0..k
using PointId = int;  // 0..domain_size-1

// Undefined marker for partial concepts.
constexpr Label kStar = -1;

inline bool is_star(Label y) { return y == kStar; }

// A hypothesis is a label vector indexed by point id; kStar marks points
// outside the support.
struct Hypothesis {
    std::vector<int8_t> labels;

    Hypothesis() = default;
    explicit Hypothesis(std::vector<int8_t> v) : labels(std::move(v)) {}

    Label at(PointId x) const { return labels[static_cast<size_t>(x)]; }
    bool defined(PointId x) const { return labels[static_cast<size_t>(x)] != kStar; }
    bool total() const {
        for (int8_t v : labels)
            if (v == kStar) return false;
        return true;
    }
    auto operator<=>(const Hypothesis&) const = default;
};

enum class ClassMode { Total, Partial };

// A finite multiclass (possibly partial) concept class over points 0..n-1
// with labels 0..k. Hypotheses are deduplicated and kept sorted so that a
// class compares and fingerprints by value.
class ConceptClass {
public:
    ConceptClass(int k, int domain_size, ClassMode mode,
                 std::vector<Hypothesis> hypotheses);

    int k() const { return k_; }
    int domain_size() const { return n_; }
    ClassMode mode() const { return mode_; }
    bool partial() const { return mode_ == ClassMode::Partial; }
    size_t size() const { return hyps_.size(); }
    bool empty() const { return hyps_.empty(); }
    const std::vector<Hypothesis>& hypotheses() const { return hyps_; }
    const Hypothesis& hypothesis(size_t i) const { return hyps_[i]; }

    Label value(size_t hyp_index, PointId x) const { return hyps_[hyp_index].at(x); }

private:
    int k_;
    int n_;
    ClassMode mode_;
    std::vector<Hypothesis> hyps_;
};

// A labeled sample: sequence of (point, label) pairs.
struct LabeledPair {
    PointId x;
    Label y;
    auto operator<=>(const LabeledPair&) const = default;
};

using LabeledSample = std::vector<LabeledPair>;

// Throws InputError unless every pair of the sample is in range for cls.
void validate_sample(const ConceptClass& cls, const LabeledSample& sample);

// True iff some h in cls has h(x_i) = y_i for all pairs, with every x_i in
// supp(h).
bool is_realizable(const ConceptClass& cls, const LabeledSample& sample);

// Index of the first (lexicographically smallest) consistent hypothesis, or
// nullopt.
std::optional<size_t> find_consistent(const ConceptClass& cls, const LabeledSample& sample);

// Set of fully-defined label vectors realized on the given distinct points.
// Vectors containing the undefined marker are dropped.
std::set<std::vector<int8_t>> project(const ConceptClass& cls,
                                      const std::vector<PointId>& points);

// Restriction of cls to the given distinct points as a class over
// 0..points.size()-1 (point i of the result is points[i]). Partial mode keeps
// partial rows; rows that collapse to duplicates merge.
ConceptClass restrict_to_points(const ConceptClass& cls, const std::vector<PointId>& points);

// Named canonical classes used across tests and the corpus generator.
ConceptClass full_cube_class(int domain_size, int k);
ConceptClass constant_class(int domain_size, int k);
ConceptClass singleton_class(int domain_size);          // binary indicators 1{x == i}
ConceptClass threshold_class(int domain_size);          // binary 1{x >= t}, t = 0..n

} // namespace mclab

#endif
