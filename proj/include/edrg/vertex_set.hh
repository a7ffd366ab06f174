#pragma once

#include <edrg/kernels.hh>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace edrg {

/// Fixed-capacity bitset over vertex ids 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64) {}

    int capacity() const noexcept { return n_; }

    void insert(int v) { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
    bool contains(int v) const { return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U; }

    std::size_t size() const
    {
        std::size_t s = 0;
        for (auto w : words_)
            s += static_cast<std::size_t>(std::popcount(w));
        return s;
    }

    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    /// |*this ∩ other|, through the dispatched popcount kernel.
    std::size_t count_common(const VertexSet & other) const
    {
        return kernels::popcount_and(words_, other.words_);
    }

    std::vector<int> members() const
    {
        std::vector<int> out;
        for (std::size_t w = 0; w < words_.size(); ++w)
            for (auto bits = words_[w]; bits; bits &= bits - 1)
                out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        return out;
    }

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace edrg
