#ifndef MCLAB_HYPSET_HPP
#define MCLAB_HYPSET_HPP

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace mclab {

// Subset of the hypotheses of a fixed root class, used as the canonical
// fingerprint for restricted subfamilies in the dimension and game
// recursions (restrictions only ever remove hypotheses).
class HypSet {
public:
    HypSet() = default;
    explicit HypSet(int universe_size, bool full = false)
        : size_(universe_size), words_((universe_size + 63) / 64, 0) {
        if (full) {
            for (int i = 0; i < universe_size; ++i) set(i);
        }
    }

    int universe_size() const { return size_; }

    void set(int i) { words_[static_cast<size_t>(i) >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const {
        return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    // Index of the lowest set bit; -1 when empty.
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }

    HypSet operator&(const HypSet& o) const {
        HypSet r(size_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }
    HypSet& operator&=(const HypSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    bool intersects(const HypSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool operator==(const HypSet& o) const { return words_ == o.words_; }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                int b = __builtin_ctzll(w);
                f(static_cast<int>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    size_t hash() const {
        size_t h = 0xcbf29ce484222325ull;
        for (uint64_t w : words_) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return h;
    }

private:
    int size_ = 0;
    std::vector<uint64_t> words_;
};

struct HypSetHash {
    size_t operator()(const HypSet& s) const { return s.hash(); }
};

} // namespace mclab

#endif
