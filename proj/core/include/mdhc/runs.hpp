#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mdhc {

/// Physical position of a cell, or nullopt when the cell is empty.
using PhysicalPos = std::optional<std::uint64_t>;

/// Strictly increasing sequence of logical positions of the nonempty cells.
class LogicalPositionSeq {
 public:
  LogicalPositionSeq() = default;
  /// Throws InvalidArgumentError unless `positions` is strictly increasing.
  explicit LogicalPositionSeq(std::vector<std::uint64_t> positions);

  std::size_t size() const noexcept { return positions_.size(); }
  bool empty() const noexcept { return positions_.empty(); }
  std::uint64_t operator[](std::size_t i) const noexcept { return positions_[i]; }
  std::uint64_t front() const { return positions_.front(); }
  std::uint64_t back() const { return positions_.back(); }
  std::span<const std::uint64_t> view() const noexcept { return positions_; }
  auto begin() const noexcept { return positions_.begin(); }
  auto end() const noexcept { return positions_.end(); }

  friend bool operator==(const LogicalPositionSeq&, const LogicalPositionSeq&) = default;

 private:
  std::vector<std::uint64_t> positions_;
};

/// Maximal stretch of consecutive nonempty positions. `empties` is the number
/// of empty cells at logical positions <= last.
struct Run {
  std::uint64_t first;
  std::uint64_t last;
  std::uint64_t empties;

  std::uint64_t length() const noexcept { return last - first + 1; }
  friend bool operator==(const Run&, const Run&) = default;
};

std::vector<Run> detect_runs(const LogicalPositionSeq& seq);

/// Reference logical -> physical mapping: index of L in seq, if present.
PhysicalPos oracle_lookup(const LogicalPositionSeq& seq, std::uint64_t logical);

}  // namespace mdhc
