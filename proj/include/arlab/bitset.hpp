#ifndef ARLAB_BITSET_HPP
#define ARLAB_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace arlab {

// Fixed-size dynamic bitset used for vertex sets and adjacency rows.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void clear() { for (auto& w : w_) w = 0; }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset and_not(const Bitset& o) const {
        Bitset r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    int find_first() const { return find_next(-1); }

    // First set bit with index > after, or -1.
    int find_next(int after) const {
        int start = after + 1;
        if (start >= n_) return -1;
        std::size_t word = static_cast<std::size_t>(start) >> 6;
        std::uint64_t cur = w_[word] & (~std::uint64_t{0} << (start & 63));
        while (true) {
            if (cur) {
                int bit = static_cast<int>(word * 64) + std::countr_zero(cur);
                return bit < n_ ? bit : -1;
            }
            if (++word >= w_.size()) return -1;
            cur = w_[word];
        }
    }

    template <class F>
    void for_each(F f) const {
        for (std::size_t word = 0; word < w_.size(); ++word) {
            std::uint64_t cur = w_[word];
            while (cur) {
                int bit = static_cast<int>(word * 64) + std::countr_zero(cur);
                f(bit);
                cur &= cur - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    bool operator==(const Bitset& o) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace arlab

#endif
