#pragma once

// Label-to-hypervector codebook with exact nearest-neighbor cleanup. Ties are
// broken toward the earliest inserted entry, which keeps retrieval
// deterministic.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hdc/hypervector.hpp"

namespace hdc {

template <typename Label = std::string>
class ItemMemory {
public:
    struct Entry {
        Label label;
        Hypervector hv;
    };

    struct Match {
        Label label;
        double distance;
        std::size_t index;
    };

    explicit ItemMemory(std::uint32_t dimension) : dim_(dimension) {
        if (dimension == 0) throw std::invalid_argument("ItemMemory: dimension must be >= 1");
    }

    void add(Label label, Hypervector hv) {
        if (hv.dimension() != dim_) throw std::invalid_argument("ItemMemory::add: dimension mismatch");
        if (index_.contains(label)) throw std::invalid_argument("ItemMemory::add: duplicate label");
        index_.emplace(label, entries_.size());
        entries_.push_back(Entry{std::move(label), std::move(hv)});
    }

    bool contains(const Label& label) const { return index_.contains(label); }

    const Hypervector& get(const Label& label) const {
        const auto it = index_.find(label);
        if (it == index_.end()) throw std::invalid_argument("ItemMemory::get: unknown label");
        return entries_[it->second].hv;
    }

    /// Exact nearest neighbor by normalized Hamming distance.
    Match cleanup(const Hypervector& query) const {
        if (entries_.empty()) throw std::invalid_argument("ItemMemory::cleanup: memory is empty");
        if (query.dimension() != dim_)
            throw std::invalid_argument("ItemMemory::cleanup: dimension mismatch");
        std::size_t best = 0;
        double best_distance = hamming(query, entries_[0].hv);
        for (std::size_t i = 1; i < entries_.size(); ++i) {
            const double d = hamming(query, entries_[i].hv);
            if (d < best_distance) {
                best = i;
                best_distance = d;
            }
        }
        return Match{entries_[best].label, best_distance, best};
    }

    std::size_t size() const noexcept { return entries_.size(); }
    std::uint32_t dimension() const noexcept { return dim_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

private:
    std::uint32_t dim_;
    std::vector<Entry> entries_;
    std::unordered_map<Label, std::size_t> index_;
};

}  // namespace hdc
