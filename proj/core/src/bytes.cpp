#include "mdhc/bytes.hpp"

#include "mdhc/errors.hpp"
#include "mdhc/width.hpp"

namespace mdhc {

Width width_from_bits(unsigned b) {
  switch (b) {
    case 8: return Width::k8;
    case 16: return Width::k16;
    case 32: return Width::k32;
    case 64: return Width::k64;
    default: throw InvalidArgumentError("unsupported width " + std::to_string(b) + " (expected 8, 16, 32 or 64)");
  }
}

void ByteReader::need(std::size_t n) const {
  if (n > remaining()) {
    throw CorruptionError("truncated input: need " + std::to_string(n) + " bytes at offset " +
                          std::to_string(pos_) + ", have " + std::to_string(remaining()));
  }
}

std::uint64_t ByteReader::get(unsigned n) {
  need(n);
  std::uint64_t v = 0;
  for (unsigned i = 0; i < n; ++i) v |= std::uint64_t{data_[pos_ + i]} << (8 * i);
  pos_ += n;
  return v;
}

std::span<const std::uint8_t> ByteReader::raw(std::size_t n) {
  need(n);
  auto out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

std::string ByteReader::str(std::size_t n) {
  auto r = raw(n);
  return std::string(r.begin(), r.end());
}

}  // namespace mdhc
