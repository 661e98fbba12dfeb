#pragma once

// Little-endian primitives shared by the binary file formats.

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "surfit/error.hpp"

namespace surfit::detail {

template <typename T>
void put_le(std::ostream& out, T value) {
    static_assert(std::is_trivially_copyable_v<T> && (sizeof(T) == 2 || sizeof(T) == 4));
    using U = std::conditional_t<sizeof(T) == 2, std::uint16_t, std::uint32_t>;
    const U bits = std::bit_cast<U>(value);
    unsigned char b[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), sizeof b);
}

template <typename T>
T get_le(std::istream& in, const char* what) {
    static_assert(std::is_trivially_copyable_v<T> && (sizeof(T) == 2 || sizeof(T) == 4));
    using U = std::conditional_t<sizeof(T) == 2, std::uint16_t, std::uint32_t>;
    unsigned char b[sizeof(T)];
    if (!in.read(reinterpret_cast<char*>(b), sizeof b)) {
        throw Error(ErrorCode::parse_error, std::string("truncated file while reading ") + what);
    }
    U bits = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) bits |= static_cast<U>(static_cast<U>(b[i]) << (8 * i));
    return std::bit_cast<T>(bits);
}

inline void expect_magic(std::istream& in, const char (&magic)[9]) {
    char buf[8];
    if (!in.read(buf, 8) || std::memcmp(buf, magic, 8) != 0) {
        throw Error(ErrorCode::parse_error, std::string("bad magic; expected ") + magic);
    }
}

}  // namespace surfit::detail
