#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace polyguard {

// Fixed-capacity dynamic bitset, just enough for cover bookkeeping.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    void set(int i) { w_[i >> 6] |= (1ull << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ull; }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool all() const { return count() == n_; }

    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    int count_or(const Bits& o) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] | o.w_[i]);
        return c;
    }
    bool covers(const Bits& o) const {  // o subset of this
        for (size_t i = 0; i < w_.size(); ++i)
            if (o.w_[i] & ~w_[i]) return false;
        return true;
    }
    friend bool operator==(const Bits&, const Bits&) = default;

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace polyguard
