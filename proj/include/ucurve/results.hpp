#pragma once

#include <utility>
#include <vector>

#include "ucurve/feature_subset.hpp"

namespace ucurve {

/**
 * Bounded list of the best subsets seen so far, sorted by cost ascending with
 * ties broken by the subset's bit string ascending. Re-inserting a subset is
 * a no-op (costs are deterministic within a run), so at most one entry per
 * subset exists.
 */
class ResultList {
public:
    struct Entry {
        FeatureSubset subset;
        double cost;
    };

    explicit ResultList(std::size_t capacity = 1) : capacity_(capacity) {
        if (capacity_ == 0)
            throw std::invalid_argument("ResultList: capacity must be at least 1");
    }

    std::size_t capacity() const { return capacity_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::vector<Entry>& entries() const { return entries_; }

    const Entry& best() const {
        if (entries_.empty())
            throw std::logic_error("ResultList: empty");
        return entries_.front();
    }

    // Returns true when the list changed.
    bool insert(const FeatureSubset& subset, double cost) {
        for (const auto& e : entries_)
            if (e.subset == subset) return false;
        std::size_t pos = entries_.size();
        while (pos > 0 && ranks_before(cost, subset, entries_[pos - 1])) --pos;
        if (pos == capacity_) return false;
        entries_.insert(entries_.begin() + static_cast<std::ptrdiff_t>(pos),
                        Entry{subset, cost});
        if (entries_.size() > capacity_) entries_.pop_back();
        return true;
    }

private:
    static bool ranks_before(double cost, const FeatureSubset& subset, const Entry& e) {
        if (cost != e.cost) return cost < e.cost;
        return subset < e.subset;
    }

    std::size_t capacity_;
    std::vector<Entry> entries_;
};

} // namespace ucurve
