#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace gnb {

// Fixed-size dynamic bitset used for adjacency rows and candidate sets.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    // Index of the lowest set bit, or size() if empty.
    std::size_t first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return n_;
    }
    // Next set bit strictly after i, or size().
    std::size_t next(std::size_t i) const {
        ++i;
        if (i >= n_) return n_;
        std::size_t k = i >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size()) return n_;
            w = words_[k];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    // this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }
    std::size_t intersection_count(const Bitset& o) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
        return c;
    }

    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> out;
        for (std::size_t i = first(); i < n_; i = next(i)) out.push_back(i);
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace gnb
