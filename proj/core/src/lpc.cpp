#include "codec_util.hpp"
#include "mdhc/codecs.hpp"

namespace mdhc {

LpcHeader LpcHeader::build(const LogicalPositionSeq& seq, Width iota) {
  detail::require_buildable(seq, iota, "LPC");
  LpcHeader h;
  h.positions_ = UIntArray::from(iota, seq.view());
  return h;
}

PhysicalPos LpcHeader::physical(std::uint64_t logical, ProbeStats* stats) const {
  std::size_t lo = 0, hi = positions_.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    detail::count(stats);
    if (positions_[mid] < logical) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < positions_.size() && positions_[lo] == logical) return lo;
  return std::nullopt;
}

std::uint64_t LpcHeader::logical(std::uint64_t physical) const {
  detail::require_physical(physical, cell_count());
  return positions_[physical];
}

void LpcHeader::encode(ByteWriter& out) const { positions_.encode(out); }

LpcHeader LpcHeader::decode(ByteReader& in, const HeaderParams& params, const HeaderCounts& counts) {
  if (counts.cells == 0) throw CorruptionError("LPC: empty header");
  LpcHeader h;
  h.positions_ = UIntArray::decode(in, width_from_bits(params.iota), counts.cells);
  for (std::size_t j = 1; j < h.positions_.size(); ++j) {
    if (h.positions_[j] <= h.positions_[j - 1]) throw CorruptionError("LPC: positions not increasing");
  }
  return h;
}

}  // namespace mdhc
