#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>

namespace garside {

// Largest strand count any built-in structure accepts.
inline constexpr int kMaxStrands = 16;

/// Opaque canonical encoding of a simple element (a divisor of the Garside
/// element). The meaning of the bytes belongs to the structure that produced
/// it: a one-line permutation for Artin, a block-label array for BKL. Unused
/// trailing bytes are always zero so that equality, ordering and hashing are
/// plain byte operations.
struct Simple {
  std::array<std::uint8_t, kMaxStrands> bytes{};

  constexpr std::uint8_t  operator[](std::size_t i) const { return bytes[i]; }
  constexpr std::uint8_t& operator[](std::size_t i) { return bytes[i]; }

  friend constexpr bool operator==(const Simple&, const Simple&) = default;
  friend constexpr auto operator<=>(const Simple&, const Simple&) = default;
};

struct SimpleHash {
  std::size_t operator()(const Simple& s) const noexcept {
    std::uint64_t lo, hi;
    std::memcpy(&lo, s.bytes.data(), 8);
    std::memcpy(&hi, s.bytes.data() + 8, 8);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ull;
    h ^= (hi + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2));
    h ^= h >> 31;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace garside

template <>
struct std::hash<garside::Simple> : garside::SimpleHash {};
