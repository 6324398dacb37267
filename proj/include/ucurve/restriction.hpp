#pragma once

#include <vector>

#include "ucurve/feature_subset.hpp"
#include "ucurve/rng.hpp"

namespace ucurve {

enum class Side { lower, upper };

/**
 * Antichain of subsets describing a removed region of the lattice.
 *
 * A lower set with elements R covers the union of intervals [empty, R]; an
 * upper set covers the union of [R, full]. The insert operation keeps the
 * antichain invariant: a dominated candidate is rejected, a dominating
 * candidate absorbs the elements it covers.
 */
class RestrictionSet {
public:
    RestrictionSet(Side kind, int width) : kind_(kind), width_(width) {}

    Side kind() const { return kind_; }
    int width() const { return width_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    const std::vector<FeatureSubset>& elements() const { return elems_; }

    // True when the covered region includes `a`.
    bool covers(const FeatureSubset& a) const {
        int ca = a.count();
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (kind_ == Side::lower) {
                if (pops_[i] >= ca && a.is_subset_of(elems_[i])) return true;
            } else {
                if (pops_[i] <= ca && elems_[i].is_subset_of(a)) return true;
            }
        }
        return false;
    }

    // Antichain insert. Returns false when `a` is already covered.
    bool insert(const FeatureSubset& a) {
        if (covers(a)) return false;
        int ca = a.count();
        std::size_t kept = 0;
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            bool absorbed = kind_ == Side::lower
                                ? (pops_[i] <= ca && elems_[i].is_subset_of(a))
                                : (pops_[i] >= ca && a.is_subset_of(elems_[i]));
            if (!absorbed) {
                if (kept != i) {
                    elems_[kept] = std::move(elems_[i]);
                    pops_[kept] = pops_[i];
                }
                ++kept;
            }
        }
        elems_.resize(kept);
        pops_.resize(kept);
        elems_.push_back(a);
        pops_.push_back(ca);
        return true;
    }

    // One subset string per line, insertion order.
    std::string to_text() const {
        std::string out;
        for (const auto& e : elems_) {
            out += e.to_string();
            out += '\n';
        }
        return out;
    }

private:
    Side kind_;
    int width_;
    std::vector<FeatureSubset> elems_;
    std::vector<int> pops_;
};

// Membership in the space that survives a lower restriction set: A survives
// iff it intersects the complement of every restriction, which is the same as
// saying no restriction contains A.
inline bool in_lower_space(const FeatureSubset& a, const RestrictionSet& lower) {
    if (lower.kind() != Side::lower)
        throw std::invalid_argument("in_lower_space: restriction set has upper kind");
    return !lower.covers(a);
}

// Dual membership: A survives an upper restriction set iff no restriction is
// contained in A.
inline bool in_upper_space(const FeatureSubset& a, const RestrictionSet& upper) {
    if (upper.kind() != Side::upper)
        throw std::invalid_argument("in_upper_space: restriction set has lower kind");
    return !upper.covers(a);
}

// Update a lower restriction set with A: no-op when A is already covered,
// otherwise A replaces every restriction it dominates. Caller guarantees the
// covered interval [empty, A] holds no element cheaper than A.
inline bool update_lower_restriction(RestrictionSet& lower, const FeatureSubset& a) {
    if (lower.kind() != Side::lower)
        throw std::invalid_argument("update_lower_restriction: wrong kind");
    return lower.insert(a);
}

inline bool update_upper_restriction(RestrictionSet& upper, const FeatureSubset& a) {
    if (upper.kind() != Side::upper)
        throw std::invalid_argument("update_upper_restriction: wrong kind");
    return upper.insert(a);
}

/**
 * Returns a minimal element of the space left by `lower`. Starts from the
 * full set and tries to drop one feature at a time, visiting features in a
 * uniformly shuffled order drawn from `rng`; a feature stays out only when
 * the shrunken set still intersects the complement of every restriction.
 * When the full set itself is restricted the full set is returned and the
 * space is exhausted.
 */
inline FeatureSubset minimal_element(const RestrictionSet& lower, SeededRng& rng) {
    if (lower.kind() != Side::lower)
        throw std::invalid_argument("minimal_element: restriction set has upper kind");
    int n = lower.width();
    FeatureSubset c = FeatureSubset::full_set(n);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    rng.shuffle(order);
    for (int k : order) {
        FeatureSubset candidate = c.without_bit(k);
        bool ok = true;
        for (const auto& r : lower.elements()) {
            if (candidate.is_subset_of(r)) { ok = false; break; }
        }
        if (ok) c = candidate;
    }
    return c;
}

// Dual construction: grows from the empty set, adding a feature only when the
// complement of the grown set still intersects every upper restriction.
inline FeatureSubset maximal_element(const RestrictionSet& upper, SeededRng& rng) {
    if (upper.kind() != Side::upper)
        throw std::invalid_argument("maximal_element: restriction set has lower kind");
    int n = upper.width();
    FeatureSubset c = FeatureSubset::empty_set(n);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    rng.shuffle(order);
    for (int k : order) {
        FeatureSubset candidate = c.with_bit(k);
        bool ok = true;
        for (const auto& r : upper.elements()) {
            if (r.is_subset_of(candidate)) { ok = false; break; }
        }
        if (ok) c = candidate;
    }
    return c;
}

// The search space is exhausted once the full set joined the lower
// restrictions or the empty set joined the upper ones.
inline bool space_is_exhausted(const RestrictionSet& lower, const RestrictionSet& upper) {
    for (const auto& r : lower.elements())
        if (r.all()) return true;
    for (const auto& r : upper.elements())
        if (r.none()) return true;
    return false;
}

// Read-only view of the residual search space.
struct SearchSpaceView {
    const RestrictionSet* lower;
    const RestrictionSet* upper;

    bool contains(const FeatureSubset& a) const {
        return in_lower_space(a, *lower) && in_upper_space(a, *upper);
    }
};

// All one-bit neighbours of `t` on the given side that survive both
// restriction sets, in ascending feature order.
inline std::vector<FeatureSubset> adjacents_in_space(const FeatureSubset& t,
                                                     const SearchSpaceView& space,
                                                     Side side) {
    std::vector<FeatureSubset> out;
    int n = t.width();
    for (int i = 0; i < n; ++i) {
        if (side == Side::upper ? t.test(i) : !t.test(i)) continue;
        FeatureSubset a = side == Side::upper ? t.with_bit(i) : t.without_bit(i);
        if (space.contains(a)) out.push_back(std::move(a));
    }
    return out;
}

} // namespace ucurve
