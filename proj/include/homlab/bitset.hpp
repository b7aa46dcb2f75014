#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace homlab {

// Dynamic fixed-capacity bitset used for adjacency rows and CSP domains.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set_all() {
        for (auto & w : words_) w = ~uint64_t{0};
        trim();
    }
    void clear() {
        for (auto & w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    // First set bit, or -1.
    int find_first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }

    // First set bit strictly after i, or -1.
    int find_next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        size_t wi = size_t(i) >> 6;
        uint64_t w = words_[wi] & (~uint64_t{0} << (i & 63));
        if (w) return int(wi * 64 + __builtin_ctzll(w));
        for (++wi; wi < words_.size(); ++wi)
            if (words_[wi]) return int(wi * 64 + __builtin_ctzll(words_[wi]));
        return -1;
    }

    Bitset & operator&=(const Bitset & o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset & operator|=(const Bitset & o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    bool intersects(const Bitset & o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool operator==(const Bitset & o) const { return words_ == o.words_; }

private:
    void trim() {
        if (nbits_ & 63) words_.back() &= (~uint64_t{0} >> (64 - (nbits_ & 63)));
    }

    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

}
