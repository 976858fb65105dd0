#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace unav {

// Fixed-size bitset sized at runtime. One row per vertex in the adjacency
// structures; all neighborhood work is word-parallel AND/ANDNOT + popcount.
class Bitset {
public:
    Bitset() : nbits_(0) {}
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size_bits() const { return nbits_; }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    void set_all() {
        for (auto& w : words_) w = ~uint64_t{0};
        trim();
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // true iff this is a subset of other
    bool subset_of(const Bitset& other) const {
        assert(nbits_ == other.nbits_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& and_not(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
    friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }

    int intersect_count(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    // lowest set bit index, or -1
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }
    // next set bit strictly after i, or -1
    int next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        size_t wi = size_t(i) >> 6;
        uint64_t w = words_[wi] >> (i & 63);
        if (w) return i + std::countr_zero(w);
        for (++wi; wi < words_.size(); ++wi)
            if (words_[wi]) return int(wi * 64 + std::countr_zero(words_[wi]));
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
        return out;
    }
    static Bitset from_vector(int nbits, const std::vector<int>& v) {
        Bitset b(nbits);
        for (int i : v) b.set(i);
        return b;
    }

    bool operator==(const Bitset& o) const = default;

private:
    void trim() {
        int rem = nbits_ & 63;
        if (rem && !words_.empty())
            words_.back() &= (uint64_t{1} << rem) - 1;
    }

    int nbits_;
    std::vector<uint64_t> words_;
};

} // namespace unav
