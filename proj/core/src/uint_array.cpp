#include "mdhc/uint_array.hpp"

#include <string>

#include "mdhc/errors.hpp"

namespace mdhc {

UIntArray::UIntArray(Width width, std::size_t n) : width_(width), size_(n) {
  switch (width) {
    case Width::k8: data_.emplace<0>(n); break;
    case Width::k16: data_.emplace<1>(n); break;
    case Width::k32: data_.emplace<2>(n); break;
    case Width::k64: data_.emplace<3>(n); break;
  }
}

UIntArray UIntArray::from(Width width, std::span<const std::uint64_t> values) {
  UIntArray out(width, values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!fits(values[i], width)) {
      throw WidthOverflowError("value " + std::to_string(values[i]) + " at index " + std::to_string(i) +
                               " does not fit in " + std::to_string(bits(width)) + " bits");
    }
    out.set(i, values[i]);
  }
  return out;
}

void UIntArray::set(std::size_t i, std::uint64_t v) noexcept {
  std::visit([&](auto& vec) { vec[i] = static_cast<typename std::decay_t<decltype(vec)>::value_type>(v); }, data_);
}

std::vector<std::uint64_t> UIntArray::to_vector() const {
  std::vector<std::uint64_t> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = (*this)[i];
  return out;
}

void UIntArray::encode(ByteWriter& out) const {
  const unsigned nb = bytes(width_);
  for (std::size_t i = 0; i < size_; ++i) out.uint((*this)[i], nb);
}

UIntArray UIntArray::decode(ByteReader& in, Width width, std::size_t n) {
  const unsigned nb = bytes(width);
  if (n > in.remaining() / nb) {
    throw CorruptionError("truncated array: " + std::to_string(n) + " elements of " + std::to_string(nb) +
                          " bytes exceed remaining input");
  }
  UIntArray out(width, n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, in.uint(nb));
  return out;
}

}  // namespace mdhc
