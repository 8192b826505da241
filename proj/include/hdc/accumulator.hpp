#pragma once

// Signed per-position counters carrying the consensus sum exactly, so records
// can be inserted and deleted without loss before thresholding to a majority
// vector. counts[i] is (ones seen) - (zeros seen) at position i; |counts[i]|
// never exceeds total().

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hdc/hypervector.hpp"

namespace hdc {

class BundleAccumulator {
public:
    explicit BundleAccumulator(std::uint32_t dimension) : dim_(dimension), counts_(dimension, 0) {
        if (dimension == 0) throw std::invalid_argument("BundleAccumulator: dimension must be >= 1");
    }

    void add(const Hypervector& hv) {
        apply(hv, +1);
        ++total_;
    }

    /// Exact inverse of add for a vector previously added.
    void remove(const Hypervector& hv) {
        if (total_ == 0) throw std::invalid_argument("BundleAccumulator::remove: accumulator is empty");
        apply(hv, -1);
        --total_;
    }

    /// Majority with the same strict/tie rule as bundle(): counts > 0 give 1,
    /// counts < 0 give 0, exact zeroes take the tie_break bit.
    Hypervector threshold(const Hypervector& tie_break) const {
        if (total_ == 0) throw std::invalid_argument("BundleAccumulator::threshold: accumulator is empty");
        if (tie_break.dimension() != dim_)
            throw std::invalid_argument("BundleAccumulator::threshold: dimension mismatch");
        Hypervector out(dim_);
        const auto ow = out.raw_words();
        for (std::size_t j = 0; j < ow.size(); ++j) {
            const auto base = static_cast<std::uint32_t>(64 * j);
            const std::uint32_t lim = std::min<std::uint32_t>(64, dim_ - base);
            std::uint64_t word = 0;
            for (std::uint32_t b = 0; b < lim; ++b) {
                const std::int32_t c = counts_[base + b];
                const bool bit = c > 0 || (c == 0 && tie_break.bit(base + b));
                word |= static_cast<std::uint64_t>(bit) << b;
            }
            ow[j] = word;
        }
        return out;
    }

    std::int64_t total() const noexcept { return total_; }
    std::uint32_t dimension() const noexcept { return dim_; }
    std::span<const std::int32_t> counts() const noexcept { return counts_; }

    /// Rebuilds an accumulator from persisted state.
    static BundleAccumulator from_state(std::uint32_t dimension, std::vector<std::int32_t> counts,
                                        std::int64_t total) {
        if (counts.size() != dimension)
            throw std::invalid_argument("BundleAccumulator::from_state: counter count mismatch");
        if (total < 0) throw std::invalid_argument("BundleAccumulator::from_state: negative total");
        for (std::int32_t c : counts)
            if (c > total || -static_cast<std::int64_t>(c) > total)
                throw std::invalid_argument("BundleAccumulator::from_state: counter exceeds total");
        BundleAccumulator acc(dimension);
        acc.counts_ = std::move(counts);
        acc.total_ = total;
        return acc;
    }

    friend bool operator==(const BundleAccumulator&, const BundleAccumulator&) = default;

private:
    void apply(const Hypervector& hv, std::int32_t sign) {
        if (hv.dimension() != dim_)
            throw std::invalid_argument("BundleAccumulator: dimension mismatch");
        const auto w = hv.words();
        for (std::size_t j = 0; j < w.size(); ++j) {
            const std::uint64_t word = w[j];
            const auto base = static_cast<std::uint32_t>(64 * j);
            const std::uint32_t lim = std::min<std::uint32_t>(64, dim_ - base);
            for (std::uint32_t b = 0; b < lim; ++b)
                counts_[base + b] += sign * (2 * static_cast<std::int32_t>((word >> b) & 1u) - 1);
        }
    }

    std::uint32_t dim_;
    std::vector<std::int32_t> counts_;
    std::int64_t total_ = 0;
};

}  // namespace hdc
