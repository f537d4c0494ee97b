#pragma once

#include <cstdint>
#include <vector>

namespace domh {

/// Fixed-size bit vector over 64-bit words. Used for vertex sets and the
/// closed-neighborhood matrix rows.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : words_((nbits + 63) / 64, 0), nbits_(nbits) {}

    int size() const { return nbits_; }

    void set(int i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void clear()
    {
        for (auto & w : words_)
            w = 0;
    }

    void or_with(const Bitset & other)
    {
        for (size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
    }

    int count() const
    {
        int c = 0;
        for (auto w : words_)
            c += __builtin_popcountll(w);
        return c;
    }

    /// True iff all nbits are set.
    bool all() const
    {
        if (nbits_ == 0)
            return true;
        size_t full = nbits_ / 64;
        for (size_t i = 0; i < full; ++i)
            if (words_[i] != ~uint64_t(0))
                return false;
        int rest = nbits_ & 63;
        if (rest != 0)
            return words_[full] == (uint64_t(1) << rest) - 1;
        return true;
    }

    bool none() const
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    friend bool operator==(const Bitset & a, const Bitset & b)
    {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

private:
    std::vector<uint64_t> words_;
    int nbits_ = 0;
};

} // namespace domh
