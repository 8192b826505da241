#pragma once

// Similarity-preserving codebooks for bounded discrete scalars (pixel
// intensities, quantized velocities). Two constructions:
//
//  - linear: level i+1 flips a disjoint deterministic block of
//    floor(N / (2*(m-1))) positions of level i, so distance grows linearly in
//    the level difference and reaches ~0.5 between the endpoints.
//
//  - nonlinear: level i+1 flips every bit of level i independently with
//    probability lambda (the proximity parameter). Expected distance at level
//    offset d is (1 - (1-2*lambda)^d) / 2, which saturates toward 0.5.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hdc/hypervector.hpp"

namespace hdc {

enum class LevelMode { linear, nonlinear };

class LevelEncoder {
public:
    static LevelEncoder linear(std::uint32_t dimension, std::uint32_t levels, Rng& rng) {
        if (levels < 2) throw std::invalid_argument("LevelEncoder::linear: need at least 2 levels");
        std::vector<Hypervector> codebook;
        codebook.reserve(levels);
        codebook.push_back(random_hv(dimension, rng));
        const std::uint32_t block = dimension / (2 * (levels - 1));
        for (std::uint32_t step = 0; step + 1 < levels; ++step) {
            Hypervector next = codebook.back();
            for (std::uint32_t i = step * block; i < (step + 1) * block; ++i) next.flip_bit(i);
            codebook.push_back(std::move(next));
        }
        return LevelEncoder(LevelMode::linear, 0.0, std::move(codebook));
    }

    static LevelEncoder nonlinear(std::uint32_t dimension, std::uint32_t levels, double lambda,
                                  Rng& rng) {
        if (levels < 2) throw std::invalid_argument("LevelEncoder::nonlinear: need at least 2 levels");
        if (!(lambda > 0.0 && lambda <= 0.5))
            throw std::invalid_argument("LevelEncoder::nonlinear: lambda must be in (0, 0.5]");
        std::vector<Hypervector> codebook;
        codebook.reserve(levels);
        codebook.push_back(random_hv(dimension, rng));
        for (std::uint32_t step = 0; step + 1 < levels; ++step)
            codebook.push_back(flip_noise(codebook.back(), lambda, rng));
        return LevelEncoder(LevelMode::nonlinear, lambda, std::move(codebook));
    }

    const Hypervector& encode(std::uint32_t level) const {
        if (level >= codebook_.size())
            throw std::invalid_argument("LevelEncoder::encode: level out of range");
        return codebook_[level];
    }

    std::uint32_t levels() const noexcept { return static_cast<std::uint32_t>(codebook_.size()); }
    std::uint32_t dimension() const noexcept { return codebook_.front().dimension(); }
    LevelMode mode() const noexcept { return mode_; }
    /// Per-step flip probability; zero in linear mode.
    double proximity() const noexcept { return lambda_; }

private:
    LevelEncoder(LevelMode mode, double lambda, std::vector<Hypervector> codebook)
        : mode_(mode), lambda_(lambda), codebook_(std::move(codebook)) {}

    LevelMode mode_;
    double lambda_;
    std::vector<Hypervector> codebook_;
};

inline std::vector<std::vector<double>> pairwise_distances(const LevelEncoder& encoder) {
    const std::uint32_t m = encoder.levels();
    std::vector<std::vector<double>> d(m, std::vector<double>(m, 0.0));
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = i + 1; j < m; ++j)
            d[i][j] = d[j][i] = hamming(encoder.encode(i), encoder.encode(j));
    return d;
}

/// Closed-form expected distance of the nonlinear chain at a given offset.
inline double chain_flip_expected_distance(double lambda, std::uint32_t offset) {
    double factor = 1.0;
    for (std::uint32_t i = 0; i < offset; ++i) factor *= 1.0 - 2.0 * lambda;
    return 0.5 * (1.0 - factor);
}

}  // namespace hdc
