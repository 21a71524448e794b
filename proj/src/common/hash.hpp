#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace janus {

inline constexpr std::uint64_t kFnvOffset = 0xCBF29CE484222325ull;
inline constexpr std::uint64_t kFnvPrime = 0x100000001B3ull;

constexpr std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = kFnvOffset) noexcept {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

/// Hashes 64-bit words as 8 little-endian bytes each.
constexpr std::uint64_t fnv1a64_words(std::span<const std::uint64_t> words, std::uint64_t h = kFnvOffset) noexcept {
    for (std::uint64_t w : words)
        for (int i = 0; i < 8; ++i) {
            h ^= (w >> (8 * i)) & 0xFFu;
            h *= kFnvPrime;
        }
    return h;
}

}  // namespace janus
