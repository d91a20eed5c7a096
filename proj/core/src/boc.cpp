#include <algorithm>

#include "codec_util.hpp"
#include "mdhc/codecs.hpp"

namespace mdhc {

BocHeader BocHeader::build(const LogicalPositionSeq& seq, std::uint32_t bucket_len, Width theta, Width iota) {
  if (bucket_len == 0) throw InvalidArgumentError("BOC bucket length must be at least 1");
  detail::require_buildable(seq, iota, "BOC");
  const std::size_t n = seq.size();
  const std::size_t buckets = (n - 1) / bucket_len + 1;

  BocHeader h;
  h.bucket_len_ = bucket_len;
  h.base_ = UIntArray(iota, buckets);
  h.offsets_ = UIntArray(theta, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t k = j / bucket_len;
    if (j % bucket_len == 0) h.base_.set(k, seq[j]);
    const std::uint64_t off = seq[j] - seq[k * bucket_len];
    if (!fits(off, theta)) {
      throw OffsetOverflowError("BOC: offset " + std::to_string(off) + " at index " + std::to_string(j) +
                                " does not fit in " + std::to_string(bits(theta)) + " bits");
    }
    h.offsets_.set(j, off);
  }
  return h;
}

PhysicalPos BocHeader::physical(std::uint64_t logical, ProbeStats* stats) const {
  // bucket k: greatest k with B_k <= logical
  std::size_t lo = 0, hi = base_.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    detail::count(stats);
    if (base_[mid] <= logical) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == 0) return std::nullopt;
  const std::size_t k = lo - 1;
  const std::uint64_t target = logical - base_[k];
  if (!fits(target, theta())) return std::nullopt;

  std::size_t first = k * std::size_t{bucket_len_};
  std::size_t end = std::min<std::size_t>(first + bucket_len_, offsets_.size());
  while (first < end) {
    const std::size_t mid = first + (end - first) / 2;
    detail::count(stats);
    if (offsets_[mid] < target) {
      first = mid + 1;
    } else {
      end = mid;
    }
  }
  const std::size_t bucket_end = std::min<std::size_t>((k + 1) * std::size_t{bucket_len_}, offsets_.size());
  if (first < bucket_end && offsets_[first] == target) return first;
  return std::nullopt;
}

std::uint64_t BocHeader::logical(std::uint64_t physical) const {
  detail::require_physical(physical, cell_count());
  return base_[physical / bucket_len_] + offsets_[physical];
}

void BocHeader::encode(ByteWriter& out) const {
  base_.encode(out);
  offsets_.encode(out);
}

BocHeader BocHeader::decode(ByteReader& in, const HeaderParams& params, const HeaderCounts& counts) {
  if (counts.cells == 0) throw CorruptionError("BOC: empty header");
  if (params.bucket_len == 0) throw CorruptionError("BOC: zero bucket length");
  BocHeader h;
  h.bucket_len_ = params.bucket_len;
  h.base_ = UIntArray::decode(in, width_from_bits(params.iota), (counts.cells - 1) / params.bucket_len + 1);
  h.offsets_ = UIntArray::decode(in, width_from_bits(params.theta), counts.cells);
  for (std::size_t j = 0; j < h.offsets_.size(); ++j) {
    const bool bucket_start = j % h.bucket_len_ == 0;
    if (bucket_start ? h.offsets_[j] != 0 : h.offsets_[j] <= h.offsets_[j - 1]) {
      throw CorruptionError("BOC: malformed offset sequence");
    }
  }
  for (std::size_t k = 1; k < h.base_.size(); ++k) {
    const std::size_t prev_last = k * std::size_t{h.bucket_len_} - 1;
    if (h.base_[k] <= h.base_[k - 1] + h.offsets_[prev_last]) throw CorruptionError("BOC: bases not increasing");
  }
  return h;
}

}  // namespace mdhc
