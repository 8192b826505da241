#pragma once

// Bit-packed dense binary hypervectors and the operations everything else is
// built from: XOR binding, strict-majority bundling, cyclic-rotation
// permutation, Bernoulli bit-flip noise and the normalized Hamming distance.
//
// Packing: element j lives in word j/64 at bit j%64, least significant bit
// first, so byte i of the serialized payload holds elements 8i..8i+7. Bits at
// positions >= dimension() are kept zero and never contribute to distances.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hdc/detail/io.hpp"

namespace hdc {

/// Deterministic generator used throughout; seeded with a 64-bit value.
using Rng = std::mt19937_64;

class Hypervector {
public:
    explicit Hypervector(std::uint32_t dimension)
        : dim_(dimension), words_((static_cast<std::size_t>(dimension) + 63) / 64, 0) {
        if (dimension == 0) throw std::invalid_argument("Hypervector: dimension must be >= 1");
    }

    std::uint32_t dimension() const noexcept { return dim_; }
    std::size_t word_count() const noexcept { return words_.size(); }

    bool bit(std::uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set_bit(std::uint32_t i, bool value) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip_bit(std::uint32_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    /// Low-level write access; bits at positions >= dimension() must stay zero.
    std::span<std::uint64_t> raw_words() noexcept { return words_; }

    std::uint64_t count_ones() const noexcept {
        std::uint64_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
        return c;
    }

    /// Zeroes the unused bits of the final word.
    void clear_tail() noexcept {
        if (dim_ & 63) words_.back() &= (std::uint64_t{1} << (dim_ & 63)) - 1;
    }

    friend bool operator==(const Hypervector&, const Hypervector&) = default;

private:
    std::uint32_t dim_;
    std::vector<std::uint64_t> words_;
};

namespace detail {

inline void check_same_dimension(const Hypervector& a, const Hypervector& b, const char* op) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

// 64 bits starting at bit position `pos`; positions past the stored words read
// as zero (the tail of the final word is zero by invariant).
inline std::uint64_t read_bits64(std::span<const std::uint64_t> words, std::uint64_t pos) {
    const std::size_t wi = static_cast<std::size_t>(pos >> 6);
    const unsigned off = static_cast<unsigned>(pos & 63);
    std::uint64_t w = words[wi] >> off;
    if (off != 0 && wi + 1 < words.size()) w |= words[wi + 1] << (64 - off);
    return w;
}

// dst ^= rotate_left(src, shift) over the N-bit ring, shift in [0, N).
inline void xor_rotate_into(Hypervector& dst, const Hypervector& src, std::uint64_t shift) {
    check_same_dimension(dst, src, "xor_rotate_into");
    const std::uint64_t n = src.dimension();
    const auto in = src.words();
    const auto out = dst.raw_words();
    if (shift == 0) {
        for (std::size_t j = 0; j < out.size(); ++j) out[j] ^= in[j];
        return;
    }
    for (std::size_t j = 0; j < out.size(); ++j) {
        const std::uint64_t out_base = std::uint64_t{64} * j;
        const std::uint64_t out_bits = std::min<std::uint64_t>(64, n - out_base);
        const std::uint64_t pos = (out_base + n - shift) % n;
        const std::uint64_t avail = n - pos;
        std::uint64_t chunk;
        if (avail >= 64) {
            chunk = read_bits64(in, pos);
        } else {
            // Wraps past the end of the ring at most once per output word.
            chunk = (read_bits64(in, pos) & ((std::uint64_t{1} << avail) - 1)) | (in[0] << avail);
        }
        if (out_bits < 64) chunk &= (std::uint64_t{1} << out_bits) - 1;
        out[j] ^= chunk;
    }
}

}  // namespace detail

/// Each bit independently 0 or 1 with probability 1/2.
inline Hypervector random_hv(std::uint32_t dimension, Rng& rng) {
    Hypervector hv(dimension);
    for (auto& w : hv.raw_words()) w = rng();
    hv.clear_tail();
    return hv;
}

/// Elementwise XOR; self-inverse, so bind(bind(a, b), b) == a.
inline Hypervector bind(const Hypervector& a, const Hypervector& b) {
    detail::check_same_dimension(a, b, "bind");
    Hypervector out = a;
    const auto bw = b.words();
    const auto ow = out.raw_words();
    for (std::size_t i = 0; i < ow.size(); ++i) ow[i] ^= bw[i];
    return out;
}

inline Hypervector complement(const Hypervector& a) {
    Hypervector out = a;
    for (auto& w : out.raw_words()) w = ~w;
    out.clear_tail();
    return out;
}

/// Normalized Hamming distance: fraction of positions where a and b differ.
inline double hamming(const Hypervector& a, const Hypervector& b) {
    detail::check_same_dimension(a, b, "hamming");
    const auto aw = a.words();
    const auto bw = b.words();
    std::uint64_t diff = 0;
    for (std::size_t i = 0; i < aw.size(); ++i)
        diff += static_cast<std::uint64_t>(std::popcount(aw[i] ^ bw[i]));
    return static_cast<double>(diff) / a.dimension();
}

/// Cyclic rotation: result[(i + shift) mod N] = a[i]. Inverted by -shift.
inline Hypervector permute(const Hypervector& a, std::int64_t shift) {
    const auto n = static_cast<std::int64_t>(a.dimension());
    const auto s = static_cast<std::uint64_t>(((shift % n) + n) % n);
    if (s == 0) return a;
    Hypervector out(a.dimension());
    detail::xor_rotate_into(out, a, s);
    return out;
}

/// Strict elementwise majority; exact ties (even input count) take the
/// corresponding bit of tie_break.
inline Hypervector bundle(std::span<const Hypervector> vectors, const Hypervector& tie_break) {
    if (vectors.empty()) throw std::invalid_argument("bundle: empty input list");
    const Hypervector& first = vectors.front();
    for (const auto& v : vectors) detail::check_same_dimension(first, v, "bundle");
    detail::check_same_dimension(first, tie_break, "bundle");

    const std::uint32_t n = first.dimension();
    std::vector<std::uint32_t> ones(n, 0);
    for (const auto& v : vectors) {
        const auto w = v.words();
        for (std::size_t j = 0; j < w.size(); ++j) {
            const std::uint64_t word = w[j];
            if (word == 0) continue;
            const auto base = static_cast<std::uint32_t>(64 * j);
            const std::uint32_t lim = std::min<std::uint32_t>(64, n - base);
            for (std::uint32_t b = 0; b < lim; ++b) ones[base + b] += (word >> b) & 1u;
        }
    }

    const auto total = static_cast<std::uint64_t>(vectors.size());
    Hypervector out(n);
    const auto ow = out.raw_words();
    for (std::size_t j = 0; j < ow.size(); ++j) {
        const auto base = static_cast<std::uint32_t>(64 * j);
        const std::uint32_t lim = std::min<std::uint32_t>(64, n - base);
        std::uint64_t word = 0;
        for (std::uint32_t b = 0; b < lim; ++b) {
            const std::uint64_t twice = 2ull * ones[base + b];
            const bool bit = twice > total || (twice == total && tie_break.bit(base + b));
            word |= static_cast<std::uint64_t>(bit) << b;
        }
        ow[j] = word;
    }
    return out;
}

/// Bundle with a fresh tie-break vector drawn from rng.
inline Hypervector bundle(std::span<const Hypervector> vectors, Rng& rng) {
    if (vectors.empty()) throw std::invalid_argument("bundle: empty input list");
    const Hypervector tie_break = random_hv(vectors.front().dimension(), rng);
    return bundle(vectors, tie_break);
}

/// Each bit independently flipped with probability p.
inline Hypervector flip_noise(const Hypervector& a, double p, Rng& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("flip_noise: p must be in [0, 1]");
    if (p == 0.0) return a;
    if (p == 1.0) return complement(a);
    Hypervector out = a;
    // Geometric gaps between flips are an exact sampling of the Bernoulli
    // process and cost O(N*p) draws instead of N.
    std::geometric_distribution<std::uint64_t> gap(p);
    for (std::uint64_t i = gap(rng); i < out.dimension(); i += gap(rng) + 1)
        out.flip_bit(static_cast<std::uint32_t>(i));
    return out;
}

// Serialization: "HDHV", version byte, dimension as u32 LE, packed payload
// (element j in byte j/8 at bit j%8, least significant first).

inline void save_hypervector(const Hypervector& hv, std::ostream& os) {
    detail::write_bytes(os, "HDHV", 4);
    detail::write_u8(os, 1);
    detail::write_u32le(os, hv.dimension());
    const std::uint32_t nbytes = (hv.dimension() + 7) / 8;
    const auto words = hv.words();
    for (std::uint32_t i = 0; i < nbytes; ++i)
        detail::write_u8(os, static_cast<std::uint8_t>((words[i >> 3] >> (8 * (i & 7))) & 0xff));
}

inline Hypervector load_hypervector(std::istream& is) {
    detail::expect_magic(is, "HDHV", "hypervector");
    const std::uint8_t version = detail::read_u8(is);
    if (version != 1)
        throw std::runtime_error("hdc: unsupported hypervector format version " + std::to_string(version));
    const std::uint32_t dim = detail::read_u32le(is);
    if (dim == 0) throw std::runtime_error("hdc: hypervector stream has zero dimension");
    Hypervector hv(dim);
    const auto words = hv.raw_words();
    const std::uint32_t nbytes = (dim + 7) / 8;
    for (std::uint32_t i = 0; i < nbytes; ++i)
        words[i >> 3] |= static_cast<std::uint64_t>(detail::read_u8(is)) << (8 * (i & 7));
    hv.clear_tail();
    return hv;
}

inline void save_hypervector(const Hypervector& hv, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("hdc: cannot open file for writing: " + path);
    save_hypervector(hv, os);
    if (!os.flush()) throw std::runtime_error("hdc: write failed: " + path);
}

inline Hypervector load_hypervector(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("hdc: cannot open file for reading: " + path);
    return load_hypervector(is);
}

}  // namespace hdc
