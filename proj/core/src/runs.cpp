#include "mdhc/runs.hpp"

#include <algorithm>
#include <string>

#include "mdhc/errors.hpp"

namespace mdhc {

LogicalPositionSeq::LogicalPositionSeq(std::vector<std::uint64_t> positions) : positions_(std::move(positions)) {
  auto it = std::adjacent_find(positions_.begin(), positions_.end(), std::greater_equal<>());
  if (it != positions_.end()) {
    throw InvalidArgumentError("logical positions must be strictly increasing (index " +
                               std::to_string(it - positions_.begin() + 1) + ")");
  }
}

std::vector<Run> detect_runs(const LogicalPositionSeq& seq) {
  std::vector<Run> runs;
  if (seq.empty()) return runs;
  std::uint64_t first = seq[0];
  for (std::size_t j = 1; j <= seq.size(); ++j) {
    if (j < seq.size() && seq[j] == seq[j - 1] + 1) continue;
    const std::uint64_t last = seq[j - 1];
    // j cells are nonempty at positions <= last
    runs.push_back(Run{first, last, last + 1 - j});
    if (j < seq.size()) first = seq[j];
  }
  return runs;
}

PhysicalPos oracle_lookup(const LogicalPositionSeq& seq, std::uint64_t logical) {
  auto it = std::lower_bound(seq.begin(), seq.end(), logical);
  if (it == seq.end() || *it != logical) return std::nullopt;
  return static_cast<std::uint64_t>(it - seq.begin());
}

}  // namespace mdhc
