#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "mdhc/relation.hpp"

namespace mdhc {

/// Run-length shape of a synthetic relation.
///  - singleton: every run has exactly one cell (no two cells adjacent)
///  - longrun:   every run has at least min_run cells (time-series like)
///  - uniform:   cells scattered at random, runs of any length
enum class Profile { kSingleton, kLongrun, kUniform };

std::string_view to_string(Profile p);
Profile parse_profile(std::string_view name);

struct WorkloadSpec {
  Profile profile = Profile::kUniform;
  std::vector<std::uint64_t> dims;
  double density = 0.1;
  std::uint64_t min_run = 17;
  std::uint64_t seed = 1;
  std::uint32_t payload_len = 8;
};

/// Deterministic synthetic relation with round(density * cells) nonempty
/// cells. SpecError when the profile cannot reach the density (singleton
/// above 1/2, longrun with too few cells for one run, ...).
Relation generate(const WorkloadSpec& spec);

/// Just the sorted logical positions of generate(spec).
LogicalPositionSeq generate_positions(const WorkloadSpec& spec);

/// Payload bytes for the cell at `logical`, derived from the seed.
void fill_payload(std::uint64_t seed, std::uint64_t logical, std::span<std::uint8_t> out);

}  // namespace mdhc
