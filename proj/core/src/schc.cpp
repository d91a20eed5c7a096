#include "codec_util.hpp"
#include "mdhc/codecs.hpp"

namespace mdhc {

SchcHeader SchcHeader::build(const LogicalPositionSeq& seq, Width iota) {
  detail::require_buildable(seq, iota, "SCHC");
  const auto runs = detect_runs(seq);
  SchcHeader h;
  h.last_ = UIntArray(iota, runs.size());
  h.empties_ = UIntArray(iota, runs.size());
  for (std::size_t j = 0; j < runs.size(); ++j) {
    h.last_.set(j, runs[j].last);
    h.empties_.set(j, runs[j].empties);
  }
  h.cells_ = seq.size();
  return h;
}

PhysicalPos SchcHeader::physical(std::uint64_t logical, ProbeStats* stats) const {
  // least j with L_j >= logical
  std::size_t lo = 0, hi = run_count();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    detail::count(stats);
    if (last_[mid] < logical) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == run_count()) return std::nullopt;

  const std::uint64_t v = empties_[lo];
  // Virtual predecessor (L_{-1}, V_{-1}) = (-1, 0); the condition
  // L_{j-1} + V_j - V_{j-1} < L is rewritten as (L_{j-1} + 1) + V_j - V_{j-1} <= L.
  const std::uint64_t prev_last_plus_one = lo == 0 ? 0 : last_[lo - 1] + 1;
  const std::uint64_t prev_v = lo == 0 ? 0 : empties_[lo - 1];
  if (prev_last_plus_one + (v - prev_v) <= logical) return logical - v;
  return std::nullopt;
}

std::uint64_t SchcHeader::logical(std::uint64_t physical) const {
  detail::require_physical(physical, cells_);
  // L_j - V_j is the physical position of run j's last cell; least j with
  // L_j - V_j >= P
  std::size_t lo = 0, hi = run_count();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (last_[mid] - empties_[mid] < physical) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return physical + empties_[lo];
}

void SchcHeader::encode(ByteWriter& out) const {
  const unsigned nb = bytes(iota());
  for (std::size_t j = 0; j < run_count(); ++j) {
    out.uint(last_[j], nb);
    out.uint(empties_[j], nb);
  }
}

SchcHeader SchcHeader::decode(ByteReader& in, const HeaderParams& params, const HeaderCounts& counts) {
  const Width iota = width_from_bits(params.iota);
  const unsigned nb = bytes(iota);
  if (counts.runs == 0 || counts.runs > counts.cells) throw CorruptionError("SCHC: inconsistent run count");
  if (counts.runs > in.remaining() / (2 * nb)) throw CorruptionError("SCHC: truncated header");
  SchcHeader h;
  h.last_ = UIntArray(iota, counts.runs);
  h.empties_ = UIntArray(iota, counts.runs);
  for (std::size_t j = 0; j < counts.runs; ++j) {
    const std::uint64_t l = in.uint(nb);
    const std::uint64_t v = in.uint(nb);
    if (v > l) throw CorruptionError("SCHC: empty count exceeds position");
    if (j > 0 && (l <= h.last_[j - 1] || v <= h.empties_[j - 1] ||
                  l - v <= h.last_[j - 1] - h.empties_[j - 1])) {
      throw CorruptionError("SCHC: pairs out of order");
    }
    h.last_.set(j, l);
    h.empties_.set(j, v);
  }
  h.cells_ = counts.cells;
  const std::size_t last = counts.runs - 1;
  if (h.last_[last] - h.empties_[last] + 1 != counts.cells) throw CorruptionError("SCHC: cell count mismatch");
  return h;
}

}  // namespace mdhc
