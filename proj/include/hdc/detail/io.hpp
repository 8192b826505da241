#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hdc::detail {

inline void write_bytes(std::ostream& os, const void* data, std::size_t len) {
    os.write(static_cast<const char*>(data), static_cast<std::streamsize>(len));
    if (!os) throw std::runtime_error("hdc: write failed");
}

inline void read_bytes(std::istream& is, void* data, std::size_t len) {
    is.read(static_cast<char*>(data), static_cast<std::streamsize>(len));
    if (!is || static_cast<std::size_t>(is.gcount()) != len)
        throw std::runtime_error("hdc: unexpected end of stream");
}

inline void write_u8(std::ostream& os, std::uint8_t v) { write_bytes(os, &v, 1); }

inline std::uint8_t read_u8(std::istream& is) {
    std::uint8_t v = 0;
    read_bytes(is, &v, 1);
    return v;
}

inline void write_u32le(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff), static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    write_bytes(os, b, 4);
}

inline std::uint32_t read_u32le(std::istream& is) {
    unsigned char b[4];
    read_bytes(is, b, 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

inline void write_u64le(std::ostream& os, std::uint64_t v) {
    write_u32le(os, static_cast<std::uint32_t>(v & 0xffffffffu));
    write_u32le(os, static_cast<std::uint32_t>(v >> 32));
}

inline std::uint64_t read_u64le(std::istream& is) {
    const std::uint64_t lo = read_u32le(is);
    const std::uint64_t hi = read_u32le(is);
    return lo | (hi << 32);
}

inline void write_i32le(std::ostream& os, std::int32_t v) {
    write_u32le(os, static_cast<std::uint32_t>(v));
}

inline std::int32_t read_i32le(std::istream& is) { return static_cast<std::int32_t>(read_u32le(is)); }

inline void expect_magic(std::istream& is, const char (&magic)[5], const char* what) {
    char buf[4];
    read_bytes(is, buf, 4);
    if (buf[0] != magic[0] || buf[1] != magic[1] || buf[2] != magic[2] || buf[3] != magic[3])
        throw std::runtime_error(std::string("hdc: bad magic, not a ") + what + " stream");
}

}  // namespace hdc::detail
