#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mdhc {

/// Header compression scheme; the numeric value is the on-disk tag.
enum class Method : std::uint8_t { kSchc = 1, kLpc = 2, kBoc = 3, kDsc = 4 };

std::string_view to_string(Method m);
/// Accepts "schc", "lpc", "boc", "dsc"; InvalidArgumentError otherwise.
Method parse_method(std::string_view name);
/// InvalidArgumentError for tags outside 1..4.
Method method_from_tag(unsigned tag);

/// Width and layout parameters, in bits where applicable. Fields a method
/// does not use are zero.
struct HeaderParams {
  unsigned iota = 0;            // logical position / base / jump width
  unsigned theta = 0;           // BOC offset width
  std::uint32_t bucket_len = 0; // BOC l
  unsigned diff = 0;            // DSC difference width s
  std::uint32_t stride = 0;     // DSC accelerator stride n

  friend bool operator==(const HeaderParams&, const HeaderParams&) = default;
};

/// Element counts a size model needs.
struct HeaderCounts {
  std::uint64_t cells = 0;  // N
  std::uint64_t runs = 0;   // nu (SCHC)
  std::uint64_t jumps = 0;  // M (DSC)

  friend bool operator==(const HeaderCounts&, const HeaderCounts&) = default;
};

/// Per-lookup work counters. header_steps counts in-memory header element
/// comparisons and walk steps; positioned_reads counts file reads.
struct ProbeStats {
  std::uint64_t header_steps = 0;
  std::uint64_t positioned_reads = 0;

  ProbeStats& operator+=(const ProbeStats& o) noexcept {
    header_steps += o.header_steps;
    positioned_reads += o.positioned_reads;
    return *this;
  }
  friend bool operator==(const ProbeStats&, const ProbeStats&) = default;
};

}  // namespace mdhc
