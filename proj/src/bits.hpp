#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace relay::detail {

// Dynamic bitset over sensor indices, just enough for the cover solvers.
// All binary operations assume both operands were built with the same size.
class Bits {
public:
    Bits() = default;
    explicit Bits(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    static Bits from_indices(int nbits, const std::vector<int>& indices) {
        Bits b(nbits);
        for (int i : indices) b.set(i);
        return b;
    }

    static Bits full(int nbits) {
        Bits b(nbits);
        for (int i = 0; i < nbits; ++i) b.set(i);
        return b;
    }

    void set(int i) { w_[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63); }
    bool test(int i) const { return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }
    int size_bits() const { return n_; }

    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }

    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    int count_and(const Bits& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    int count_andnot(const Bits& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & ~o.w_[i]);
        return c;
    }

    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    void or_with(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    }

    void and_with(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    }

    void andnot_with(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace relay::detail
