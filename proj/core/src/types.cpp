#include "mclab/types.hpp"

#include <algorithm>
#include <set>

namespace mclab {

ConceptClass::ConceptClass(int k, int domain_size, ClassMode mode,
                           std::vector<Hypothesis> hypotheses)
    : k_(k), n_(domain_size), mode_(mode), hyps_(std::move(hypotheses)) {
    if (k_ < 1) throw InputError("concept class needs k >= 1");
    if (n_ < 1) throw InputError("concept class needs domain_size >= 1");
    for (const Hypothesis& h : hyps_) {
        if (static_cast<int>(h.labels.size()) != n_)
            throw InputError("hypothesis length != domain size");
        for (int8_t v : h.labels) {
            if (v == kStar) {
                if (mode_ == ClassMode::Total)
                    throw InputError("undefined marker in a total-mode class");
            } else if (v < 0 || v > k_) {
                throw InputError("label out of range 0..k");
            }
        }
    }
    std::sort(hyps_.begin(), hyps_.end());
    hyps_.erase(std::unique(hyps_.begin(), hyps_.end()), hyps_.end());
}

void validate_sample(const ConceptClass& cls, const LabeledSample& sample) {
    for (const LabeledPair& p : sample) {
        if (p.x < 0 || p.x >= cls.domain_size())
            throw InputError("sample point id out of range");
        if (p.y < 0 || p.y > cls.k())
            throw InputError("sample label out of range");
    }
}

std::optional<size_t> find_consistent(const ConceptClass& cls, const LabeledSample& sample) {
    validate_sample(cls, sample);
    for (size_t i = 0; i < cls.size(); ++i) {
        const Hypothesis& h = cls.hypothesis(i);
        bool ok = true;
        for (const LabeledPair& p : sample) {
            if (!h.defined(p.x) || h.at(p.x) != p.y) {
                ok = false;
                break;
            }
        }
        if (ok) return i;
    }
    return std::nullopt;
}

bool is_realizable(const ConceptClass& cls, const LabeledSample& sample) {
    return find_consistent(cls, sample).has_value();
}

std::set<std::vector<int8_t>> project(const ConceptClass& cls,
                                      const std::vector<PointId>& points) {
    std::set<PointId> seen;
    for (PointId x : points) {
        if (x < 0 || x >= cls.domain_size()) throw InputError("projection point out of range");
        if (!seen.insert(x).second) throw InputError("duplicate projection point");
    }
    std::set<std::vector<int8_t>> out;
    for (const Hypothesis& h : cls.hypotheses()) {
        std::vector<int8_t> v;
        v.reserve(points.size());
        bool defined = true;
        for (PointId x : points) {
            if (!h.defined(x)) {
                defined = false;
                break;
            }
            v.push_back(static_cast<int8_t>(h.at(x)));
        }
        if (defined) out.insert(std::move(v));
    }
    return out;
}

ConceptClass restrict_to_points(const ConceptClass& cls, const std::vector<PointId>& points) {
    std::vector<Hypothesis> rows;
    rows.reserve(cls.size());
    for (const Hypothesis& h : cls.hypotheses()) {
        std::vector<int8_t> v;
        v.reserve(points.size());
        for (PointId x : points) {
            if (x < 0 || x >= cls.domain_size())
                throw InputError("restriction point out of range");
            v.push_back(h.labels[static_cast<size_t>(x)]);
        }
        rows.emplace_back(std::move(v));
    }
    return ConceptClass(cls.k(), static_cast<int>(points.size()), cls.mode(), std::move(rows));
}

ConceptClass full_cube_class(int domain_size, int k) {
    std::vector<Hypothesis> hyps;
    std::vector<int8_t> cur(static_cast<size_t>(domain_size), 0);
    while (true) {
        hyps.emplace_back(cur);
        int i = 0;
        while (i < domain_size && cur[static_cast<size_t>(i)] == k) {
            cur[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == domain_size) break;
        ++cur[static_cast<size_t>(i)];
    }
    return ConceptClass(k, domain_size, ClassMode::Total, std::move(hyps));
}

ConceptClass constant_class(int domain_size, int k) {
    std::vector<Hypothesis> hyps;
    for (int a = 0; a <= k; ++a)
        hyps.emplace_back(std::vector<int8_t>(static_cast<size_t>(domain_size),
                                              static_cast<int8_t>(a)));
    return ConceptClass(k, domain_size, ClassMode::Total, std::move(hyps));
}

ConceptClass singleton_class(int domain_size) {
    std::vector<Hypothesis> hyps;
    for (int i = 0; i < domain_size; ++i) {
        std::vector<int8_t> v(static_cast<size_t>(domain_size), 0);
        v[static_cast<size_t>(i)] = 1;
        hyps.emplace_back(std::move(v));
    }
    return ConceptClass(1, domain_size, ClassMode::Total, std::move(hyps));
}

ConceptClass threshold_class(int domain_size) {
    std::vector<Hypothesis> hyps;
    for (int t = 0; t <= domain_size; ++t) {
        std::vector<int8_t> v(static_cast<size_t>(domain_size), 0);
        for (int x = t; x < domain_size; ++x) v[static_cast<size_t>(x)] = 1;
        hyps.emplace_back(std::move(v));
    }
    return ConceptClass(1, domain_size, ClassMode::Total, std::move(hyps));
}

} // namespace mclab
