#pragma once

#include <string>

#include "mdhc/errors.hpp"
#include "mdhc/method.hpp"
#include "mdhc/runs.hpp"
#include "mdhc/width.hpp"

namespace mdhc::detail {

inline void require_buildable(const LogicalPositionSeq& seq, Width iota, const char* what) {
  if (seq.empty()) throw EmptySequenceError(std::string(what) + " header needs at least one position");
  if (!fits(seq.back(), iota)) {
    throw WidthOverflowError(std::string(what) + ": last logical position " + std::to_string(seq.back()) +
                             " does not fit in " + std::to_string(bits(iota)) + " bits");
  }
}

inline void require_physical(std::uint64_t p, std::uint64_t n) {
  if (p >= n) {
    throw RangeError("physical position " + std::to_string(p) + " out of range (N = " + std::to_string(n) + ")");
  }
}

inline void count(ProbeStats* stats) noexcept {
  if (stats) ++stats->header_steps;
}

}  // namespace mdhc::detail
