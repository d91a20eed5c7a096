#pragma once

#include <cstdint>
#include <limits>

namespace mdhc {

/// Element widths supported by the headers. Storage is byte aligned, so only
/// the native unsigned integer sizes are allowed.
enum class Width : std::uint8_t { k8 = 8, k16 = 16, k32 = 32, k64 = 64 };

constexpr unsigned bits(Width w) noexcept { return static_cast<unsigned>(w); }
constexpr unsigned bytes(Width w) noexcept { return bits(w) / 8; }

/// Largest value representable at width `w` (2^w - 1).
constexpr std::uint64_t max_value(Width w) noexcept {
  return w == Width::k64 ? std::numeric_limits<std::uint64_t>::max()
                         : (std::uint64_t{1} << bits(w)) - 1;
}

constexpr bool fits(std::uint64_t v, Width w) noexcept { return v <= max_value(w); }

/// Smallest of {8, 16, 32, 64} that holds `v`.
constexpr Width smallest_width_for(std::uint64_t v) noexcept {
  if (v <= max_value(Width::k8)) return Width::k8;
  if (v <= max_value(Width::k16)) return Width::k16;
  if (v <= max_value(Width::k32)) return Width::k32;
  return Width::k64;
}

/// Throws InvalidArgumentError unless `b` is 8, 16, 32 or 64.
Width width_from_bits(unsigned b);

}  // namespace mdhc
