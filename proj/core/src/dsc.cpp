#include <algorithm>
#include <limits>

#include "codec_util.hpp"
#include "mdhc/codecs.hpp"

namespace mdhc {

namespace {

void require_stride(std::uint32_t stride) {
  if (stride == 0 || stride > std::numeric_limits<std::uint16_t>::max()) {
    throw InvalidArgumentError("accelerator stride must be in [1, 65535], got " + std::to_string(stride));
  }
}

}  // namespace

std::vector<std::uint32_t> build_accelerator(const UIntArray& difference, std::uint32_t stride) {
  if (stride == 0) throw InvalidArgumentError("accelerator stride must be at least 1");
  if (difference.empty() || difference[0] != 0) {
    throw InvalidArgumentError("difference sequence must be nonempty and start with zero");
  }
  if (difference.size() > std::uint64_t{std::numeric_limits<std::uint32_t>::max()} + 1) {
    throw InvalidArgumentError("difference sequence too long for 32-bit accelerator entries");
  }
  std::vector<std::uint32_t> acc;
  std::uint64_t zeros = 0;
  for (std::size_t i = 0; i < difference.size(); ++i) {
    if (difference[i] != 0) continue;
    if (zeros % stride == 0) acc.push_back(static_cast<std::uint32_t>(i));
    ++zeros;
  }
  return acc;
}

DscHeader::DscHeader(UIntArray difference, UIntArray jumps, std::uint32_t stride)
    : difference_(std::move(difference)), jumps_(std::move(jumps)), stride_(stride) {
  accelerator_ = build_accelerator(difference_, stride_);
}

DscHeader DscHeader::build(const LogicalPositionSeq& seq, Width diff, Width iota, std::uint32_t stride) {
  if (diff == Width::k64) throw InvalidArgumentError("DSC difference width must be 8, 16 or 32 bits");
  require_stride(stride);
  detail::require_buildable(seq, iota, "DSC");
  if (seq.size() > std::uint64_t{std::numeric_limits<std::uint32_t>::max()} + 1) {
    throw InvalidArgumentError("DSC supports at most 2^32 cells");
  }

  const std::uint64_t d_max = max_value(diff);
  UIntArray difference(diff, seq.size());
  std::vector<std::uint64_t> jumps{seq[0]};
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const std::uint64_t gap = seq[i] - seq[i - 1];
    if (gap <= d_max) {
      difference.set(i, gap);
    } else {
      jumps.push_back(seq[i]);  // difference[i] stays 0
    }
  }
  return DscHeader(std::move(difference), UIntArray::from(iota, jumps), stride);
}

PhysicalPos DscHeader::physical(std::uint64_t logical, ProbeStats* stats) const {
  const std::size_t n = stride_;
  const std::size_t anchors = accelerator_.size();

  // greatest anchor m with J_{m*n} <= logical
  std::size_t lo = 0, hi = anchors;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    detail::count(stats);
    if (jumps_[mid * n] <= logical) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == 0) return std::nullopt;  // logical < J_0
  const std::size_t m = lo - 1;

  std::size_t k = m * n;
  std::size_t j = accelerator_[m];
  std::uint64_t decomp = jumps_[k];
  const std::size_t last = difference_.size() - 1;
  while (decomp < logical && j < last) {
    ++j;
    detail::count(stats);
    const std::uint64_t d = difference_[j];
    if (d == 0) {
      decomp = jumps_[++k];
    } else {
      decomp += d;
    }
  }
  if (decomp == logical) return j;
  return std::nullopt;
}

std::uint64_t DscHeader::logical(std::uint64_t physical) const {
  detail::require_physical(physical, cell_count());
  // greatest anchor whose zero index is <= physical; accelerator_[0] == 0
  auto it = std::upper_bound(accelerator_.begin(), accelerator_.end(), physical);
  const std::size_t m = static_cast<std::size_t>(it - accelerator_.begin()) - 1;

  std::size_t k = m * stride_;
  std::uint64_t decomp = jumps_[k];
  for (std::size_t j = accelerator_[m] + 1; j <= physical; ++j) {
    const std::uint64_t d = difference_[j];
    if (d == 0) {
      decomp = jumps_[++k];
    } else {
      decomp += d;
    }
  }
  return decomp;
}

std::vector<std::uint64_t> DscHeader::decompress() const {
  std::vector<std::uint64_t> out(cell_count());
  std::size_t k = 0;
  std::uint64_t decomp = 0;
  for (std::size_t j = 0; j < out.size(); ++j) {
    const std::uint64_t d = difference_[j];
    decomp = d == 0 ? jumps_[k++] : decomp + d;
    out[j] = decomp;
  }
  return out;
}

void DscHeader::encode(ByteWriter& out) const {
  jumps_.encode(out);
  difference_.encode(out);
}

DscHeader DscHeader::decode(ByteReader& in, const HeaderParams& params, const HeaderCounts& counts) {
  if (counts.cells == 0 || counts.jumps == 0 || counts.jumps > counts.cells) {
    throw CorruptionError("DSC: inconsistent cell/jump counts");
  }
  const Width diff = width_from_bits(params.diff);
  if (diff == Width::k64) throw FormatError("DSC: 64-bit difference width is not supported");
  if (params.stride == 0 || params.stride > std::numeric_limits<std::uint16_t>::max()) {
    throw CorruptionError("DSC: bad accelerator stride");
  }
  auto jumps = UIntArray::decode(in, width_from_bits(params.iota), counts.jumps);
  auto difference = UIntArray::decode(in, diff, counts.cells);

  std::uint64_t zeros = 0;
  for (std::size_t i = 0; i < difference.size(); ++i) zeros += difference[i] == 0;
  if (difference[0] != 0 || zeros != counts.jumps) throw CorruptionError("DSC: zero/jump count mismatch");
  for (std::size_t k = 1; k < jumps.size(); ++k) {
    if (jumps[k] <= jumps[k - 1]) throw CorruptionError("DSC: jumps not increasing");
  }
  return DscHeader(std::move(difference), std::move(jumps), params.stride);
}

}  // namespace mdhc
