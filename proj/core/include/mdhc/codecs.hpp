#pragma once

#include <cstdint>
#include <vector>

#include "mdhc/bytes.hpp"
#include "mdhc/method.hpp"
#include "mdhc/runs.hpp"
#include "mdhc/uint_array.hpp"
#include "mdhc/width.hpp"

namespace mdhc {

/// Single count header compression: one (last position, cumulative empties)
/// pair per run.
class SchcHeader {
 public:
  static constexpr Method kMethod = Method::kSchc;

  /// WidthOverflowError if the last position does not fit `iota`.
  static SchcHeader build(const LogicalPositionSeq& seq, Width iota);

  PhysicalPos physical(std::uint64_t logical, ProbeStats* stats = nullptr) const;
  /// RangeError unless physical < cell_count().
  std::uint64_t logical(std::uint64_t physical) const;

  std::uint64_t cell_count() const noexcept { return cells_; }
  std::uint64_t run_count() const noexcept { return last_.size(); }
  std::uint64_t run_last(std::size_t j) const { return last_[j]; }
  std::uint64_t run_empties(std::size_t j) const { return empties_[j]; }
  Width iota() const noexcept { return last_.width(); }
  std::uint64_t size_bits() const noexcept { return 2 * run_count() * bits(iota()); }
  HeaderParams params() const noexcept { return {bits(iota()), 0, 0, 0, 0}; }
  HeaderCounts counts() const noexcept { return {cells_, run_count(), 0}; }

  /// Pairs interleaved: L_0, V_0, L_1, V_1, ...
  void encode(ByteWriter& out) const;
  static SchcHeader decode(ByteReader& in, const HeaderParams& params, const HeaderCounts& counts);

  friend bool operator==(const SchcHeader&, const SchcHeader&) = default;

 private:
  UIntArray last_;
  UIntArray empties_;
  std::uint64_t cells_ = 0;
};

/// Logical position compression: the full sorted position list.
class LpcHeader {
 public:
  static constexpr Method kMethod = Method::kLpc;

  static LpcHeader build(const LogicalPositionSeq& seq, Width iota);

  PhysicalPos physical(std::uint64_t logical, ProbeStats* stats = nullptr) const;
  std::uint64_t logical(std::uint64_t physical) const;

  std::uint64_t cell_count() const noexcept { return positions_.size(); }
  Width iota() const noexcept { return positions_.width(); }
  std::uint64_t size_bits() const noexcept { return cell_count() * bits(iota()); }
  HeaderParams params() const noexcept { return {bits(iota()), 0, 0, 0, 0}; }
  HeaderCounts counts() const noexcept { return {cell_count(), 0, 0}; }

  void encode(ByteWriter& out) const;
  static LpcHeader decode(ByteReader& in, const HeaderParams& params, const HeaderCounts& counts);

  friend bool operator==(const LpcHeader&, const LpcHeader&) = default;

 private:
  UIntArray positions_;
};

/// Base-offset compression: every l-th position at full width, all positions
/// as offsets from their bucket's base.
class BocHeader {
 public:
  static constexpr Method kMethod = Method::kBoc;

  /// OffsetOverflowError if a bucket spans more than theta can hold;
  /// InvalidArgumentError if bucket_len == 0.
  static BocHeader build(const LogicalPositionSeq& seq, std::uint32_t bucket_len, Width theta, Width iota);

  PhysicalPos physical(std::uint64_t logical, ProbeStats* stats = nullptr) const;
  std::uint64_t logical(std::uint64_t physical) const;

  std::uint64_t cell_count() const noexcept { return offsets_.size(); }
  std::uint64_t base_count() const noexcept { return base_.size(); }
  std::uint32_t bucket_len() const noexcept { return bucket_len_; }
  Width iota() const noexcept { return base_.width(); }
  Width theta() const noexcept { return offsets_.width(); }
  const UIntArray& base() const noexcept { return base_; }
  const UIntArray& offsets() const noexcept { return offsets_; }
  std::uint64_t size_bits() const noexcept { return base_count() * bits(iota()) + cell_count() * bits(theta()); }
  HeaderParams params() const noexcept { return {bits(iota()), bits(theta()), bucket_len_, 0, 0}; }
  HeaderCounts counts() const noexcept { return {cell_count(), 0, 0}; }

  /// Base sequence, then offset sequence.
  void encode(ByteWriter& out) const;
  static BocHeader decode(ByteReader& in, const HeaderParams& params, const HeaderCounts& counts);

  friend bool operator==(const BocHeader&, const BocHeader&) = default;

 private:
  UIntArray base_;
  UIntArray offsets_;
  std::uint32_t bucket_len_ = 1;
};

/// Index in `difference` of every `stride`-th zero element (the 0th, n-th,
/// 2n-th jump). InvalidArgumentError if difference is empty, does not start
/// with zero, or stride is zero.
std::vector<std::uint32_t> build_accelerator(const UIntArray& difference, std::uint32_t stride);

/// Difference sequence compression: narrow gaps, with a zero marking each
/// position that is stored at full width in the jump sequence instead.
class DscHeader {
 public:
  static constexpr Method kMethod = Method::kDsc;
  static constexpr std::uint32_t kDefaultStride = 16;

  /// `diff` must be 8, 16 or 32 bits; stride in [1, 65535].
  static DscHeader build(const LogicalPositionSeq& seq, Width diff, Width iota,
                         std::uint32_t stride = kDefaultStride);

  /// Point lookup: binary search over the anchored jumps, then a forward
  /// walk through the differences.
  PhysicalPos physical(std::uint64_t logical, ProbeStats* stats = nullptr) const;
  std::uint64_t logical(std::uint64_t physical) const;

  std::uint64_t cell_count() const noexcept { return difference_.size(); }
  std::uint64_t jump_count() const noexcept { return jumps_.size(); }
  std::uint32_t stride() const noexcept { return stride_; }
  Width diff_width() const noexcept { return difference_.width(); }
  Width iota() const noexcept { return jumps_.width(); }
  const UIntArray& difference() const noexcept { return difference_; }
  const UIntArray& jumps() const noexcept { return jumps_; }
  const std::vector<std::uint32_t>& accelerator() const noexcept { return accelerator_; }
  /// Persisted bits; the accelerator is rebuilt on load and not counted.
  std::uint64_t size_bits() const noexcept { return jump_count() * bits(iota()) + cell_count() * bits(diff_width()); }
  HeaderParams params() const noexcept { return {bits(iota()), 0, 0, bits(diff_width()), stride_}; }
  HeaderCounts counts() const noexcept { return {cell_count(), 0, jump_count()}; }

  /// Jump sequence, then difference sequence.
  void encode(ByteWriter& out) const;
  static DscHeader decode(ByteReader& in, const HeaderParams& params, const HeaderCounts& counts);

  /// Full reconstruction of the logical positions.
  std::vector<std::uint64_t> decompress() const;

  friend bool operator==(const DscHeader&, const DscHeader&) = default;

 private:
  DscHeader(UIntArray difference, UIntArray jumps, std::uint32_t stride);

  UIntArray difference_;
  UIntArray jumps_;
  std::vector<std::uint32_t> accelerator_;
  std::uint32_t stride_ = kDefaultStride;
};

}  // namespace mdhc
