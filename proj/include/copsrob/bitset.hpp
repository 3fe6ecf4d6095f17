#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace copsrob {

// Fixed-size dynamic bitset over 64-bit words. Sized at construction to the
// vertex count of the host graph; all set algebra used by the solvers runs
// on whole words.
class Bitset {
public:
    Bitset() : n_(0) {}
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe_size() const { return n_; }

    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // set difference
    Bitset& operator-=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    // First set bit at index >= from, or -1.
    int next(int from = 0) const {
        if (from >= n_) return -1;
        size_t wi = from >> 6;
        uint64_t w = w_[wi] & (~uint64_t(0) << (from & 63));
        while (true) {
            if (w) {
                int i = int(wi * 64) + std::countr_zero(w);
                return i < n_ ? i : -1;
            }
            if (++wi >= w_.size()) return -1;
            w = w_[wi];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = next(); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

    static Bitset of(int n, std::initializer_list<int> vs) {
        Bitset b(n);
        for (int v : vs) b.set(v);
        return b;
    }

private:
    int n_;
    std::vector<uint64_t> w_;
};

}  // namespace copsrob
