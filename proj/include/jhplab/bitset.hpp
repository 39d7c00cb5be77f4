#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace jhplab {

// Fixed-size bitset with the handful of bulk operations the poset code needs.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool operator[](std::size_t i) const { return w_[i / 64] >> (i % 64) & 1; }
    void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { w_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto x : w_)
            c += std::popcount(x);
        return c;
    }
    bool none() const
    {
        for (auto x : w_)
            if (x)
                return false;
        return true;
    }
    // Largest set index, or size() if empty.
    std::size_t find_last() const
    {
        for (std::size_t k = w_.size(); k-- > 0;)
            if (w_[k])
                return k * 64 + 63 - std::countl_zero(w_[k]);
        return n_;
    }
    std::size_t find_first() const { return find_next_from(0); }
    std::size_t find_next(std::size_t i) const { return find_next_from(i + 1); }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t k = 0; k < w_.size(); ++k)
            w_[k] &= o.w_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t k = 0; k < w_.size(); ++k)
            w_[k] |= o.w_[k];
        return *this;
    }
    Bitset& subtract(const Bitset& o)
    {
        for (std::size_t k = 0; k < w_.size(); ++k)
            w_[k] &= ~o.w_[k];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    bool is_subset_of(const Bitset& o) const
    {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k])
                return false;
        return true;
    }
    bool operator==(const Bitset&) const = default;

private:
    std::size_t find_next_from(std::size_t i) const
    {
        if (i >= n_)
            return n_;
        std::size_t k = i / 64;
        std::uint64_t x = w_[k] & (~std::uint64_t{0} << (i % 64));
        while (true) {
            if (x)
                return k * 64 + std::countr_zero(x);
            if (++k == w_.size())
                return n_;
            x = w_[k];
        }
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace jhplab
