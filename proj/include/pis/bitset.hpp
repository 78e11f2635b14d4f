#pragma once

#include <cstdint>
#include <vector>

namespace pis {

// Fixed-width bitset over element indices of one ring (or vertices of one
// graph). Width is set at construction and never changes.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int width) : width_(width), words_((width + 63) / 64, 0) {}

    int width() const { return width_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool operator==(const Bitset&) const = default;

    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = 0; i < width_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    const std::vector<uint64_t>& words() const { return words_; }

private:
    int width_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace pis
