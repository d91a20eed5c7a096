#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "mdhc/bytes.hpp"
#include "mdhc/width.hpp"

namespace mdhc {

/// Fixed-width unsigned integer array. The in-memory footprint is exactly
/// size() * bytes(width()), matching the on-disk encoding.
class UIntArray {
 public:
  UIntArray() : UIntArray(Width::k8, 0) {}
  UIntArray(Width width, std::size_t n);

  /// Copies `values`; throws WidthOverflowError if any value exceeds the width.
  static UIntArray from(Width width, std::span<const std::uint64_t> values);

  Width width() const noexcept { return width_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  std::size_t byte_size() const noexcept { return size_ * bytes(width_); }

  std::uint64_t operator[](std::size_t i) const noexcept {
    switch (width_) {
      case Width::k8: return std::get<0>(data_)[i];
      case Width::k16: return std::get<1>(data_)[i];
      case Width::k32: return std::get<2>(data_)[i];
      case Width::k64: return std::get<3>(data_)[i];
    }
    return 0;
  }

  /// Caller guarantees fits(v, width()).
  void set(std::size_t i, std::uint64_t v) noexcept;

  std::vector<std::uint64_t> to_vector() const;

  void encode(ByteWriter& out) const;
  static UIntArray decode(ByteReader& in, Width width, std::size_t n);

  friend bool operator==(const UIntArray&, const UIntArray&) = default;

 private:
  Width width_;
  std::size_t size_;
  std::variant<std::vector<std::uint8_t>, std::vector<std::uint16_t>, std::vector<std::uint32_t>,
               std::vector<std::uint64_t>>
      data_;
};

}  // namespace mdhc
