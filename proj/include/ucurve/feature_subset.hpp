#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ucurve {

inline constexpr int kMaxDegree = 1024;

/**
 * A subset of the feature set W = {1..n}, stored as a fixed-width bit vector
 * packed into 64-bit words. Bit i (0-based) stands for feature i+1.
 *
 * The textual form writes feature 1 leftmost: "0111" with n = 4 means
 * features 2, 3 and 4 are present. Comparison (`operator<`) follows that
 * textual form lexicographically, which is the tie-break order used by
 * result lists.
 *
 * Operations between subsets of different widths throw std::invalid_argument:
 * all subsets taking part in one search must live on the same lattice.
 */
class FeatureSubset {
public:
    FeatureSubset() = default;

    explicit FeatureSubset(int n) : n_(n), words_((n + 63) / 64, 0) {
        if (n < 1 || n > kMaxDegree)
            throw std::invalid_argument("FeatureSubset: width must be in 1.." +
                                        std::to_string(kMaxDegree));
    }

    static FeatureSubset empty_set(int n) { return FeatureSubset(n); }

    static FeatureSubset full_set(int n) {
        FeatureSubset s(n);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static FeatureSubset from_string(std::string_view bits) {
        FeatureSubset s(static_cast<int>(bits.size()));
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1')
                s.set(static_cast<int>(i));
            else if (bits[i] != '0')
                throw std::invalid_argument("FeatureSubset: string must be over {0,1}");
        }
        return s;
    }

    int width() const { return n_; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool test(int i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        check_index(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        check_index(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    FeatureSubset with_bit(int i) const {
        FeatureSubset r = *this;
        r.set(i);
        return r;
    }

    FeatureSubset without_bit(int i) const {
        FeatureSubset r = *this;
        r.reset(i);
        return r;
    }

    bool none() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    bool all() const { return count() == n_; }

    FeatureSubset complement() const {
        FeatureSubset r = *this;
        for (auto& w : r.words_) w = ~w;
        r.trim();
        return r;
    }

    FeatureSubset operator|(const FeatureSubset& o) const {
        check_width(o);
        FeatureSubset r = *this;
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] |= o.words_[k];
        return r;
    }

    FeatureSubset operator&(const FeatureSubset& o) const {
        check_width(o);
        FeatureSubset r = *this;
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
        return r;
    }

    bool is_subset_of(const FeatureSubset& o) const {
        check_width(o);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    bool intersects(const FeatureSubset& o) const {
        check_width(o);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    std::string to_string() const {
        std::string s(static_cast<std::size_t>(n_), '0');
        for (int i = 0; i < n_; ++i)
            if ((words_[i >> 6] >> (i & 63)) & 1u) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

    bool operator==(const FeatureSubset& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }
    bool operator!=(const FeatureSubset& o) const { return !(*this == o); }

    // lexicographic on the textual form (feature 1 weighs heaviest)
    bool operator<(const FeatureSubset& o) const {
        check_width(o);
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t diff = words_[k] ^ o.words_[k];
            if (diff) {
                int bit = std::countr_zero(diff);
                return ((o.words_[k] >> bit) & 1u) != 0;
            }
        }
        return false;
    }

    struct Hash {
        std::size_t operator()(const FeatureSubset& s) const {
            std::size_t h = std::hash<int>{}(s.n_);
            for (auto w : s.words_)
                h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            return h;
        }
    };

private:
    void check_index(int i) const {
        if (i < 0 || i >= n_)
            throw std::out_of_range("FeatureSubset: bit index " + std::to_string(i) +
                                    " outside width " + std::to_string(n_));
    }

    void check_width(const FeatureSubset& o) const {
        if (n_ != o.n_)
            throw std::invalid_argument("FeatureSubset: width mismatch (" +
                                        std::to_string(n_) + " vs " + std::to_string(o.n_) + ")");
    }

    // keep bits past n zero so that word-wise comparisons stay exact
    void trim() {
        int tail = n_ & 63;
        if (tail) words_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Degree of the lattice the search runs on.
struct LatticeConfig {
    int n;
    explicit LatticeConfig(int degree) : n(degree) {
        if (n < 1 || n > kMaxDegree)
            throw std::invalid_argument("LatticeConfig: degree must be in 1.." +
                                        std::to_string(kMaxDegree));
    }
};

} // namespace ucurve
