#include "mdhc/workload.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mdhc/errors.hpp"

namespace mdhc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// std distributions are not portable across standard libraries; these are.
double unit_open(std::mt19937_64& rng) { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; }
double exponential(std::mt19937_64& rng) { return -std::log(unit_open(rng)); }

// Splits `free_cells` empty cells over `slots` slots with exponential weights.
std::vector<std::uint64_t> spread(std::uint64_t free_cells, std::size_t slots, std::mt19937_64& rng) {
  std::vector<double> w(slots);
  double total = 0;
  for (auto& x : w) total += (x = exponential(rng));
  std::vector<std::uint64_t> out(slots);
  std::uint64_t used = 0;
  for (std::size_t i = 0; i + 1 < slots; ++i) {
    const double share = std::floor(w[i] / total * static_cast<double>(free_cells));
    auto g = share >= 18446744073709549568.0 ? free_cells : static_cast<std::uint64_t>(share);
    g = std::min(g, free_cells - used);
    out[i] = g;
    used += g;
  }
  if (slots) out.back() = free_cells - used;
  return out;
}

std::uint64_t target_cells(const WorkloadSpec& spec, std::uint64_t space) {
  if (!(spec.density > 0.0 && spec.density <= 1.0)) throw SpecError("density must be in (0, 1]");
  const long double n = std::llround(static_cast<long double>(space) * spec.density);
  const auto cells = static_cast<std::uint64_t>(std::clamp<long double>(n, 1, static_cast<long double>(space)));
  return cells;
}

}  // namespace

std::string_view to_string(Profile p) {
  switch (p) {
    case Profile::kSingleton: return "singleton";
    case Profile::kLongrun: return "longrun";
    case Profile::kUniform: return "uniform";
  }
  return "unknown";
}

Profile parse_profile(std::string_view name) {
  if (name == "singleton") return Profile::kSingleton;
  if (name == "longrun") return Profile::kLongrun;
  if (name == "uniform") return Profile::kUniform;
  throw SpecError("unknown profile '" + std::string(name) + "'");
}

void fill_payload(std::uint64_t seed, std::uint64_t logical, std::span<std::uint8_t> out) {
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i % 8 == 0) word = splitmix64(seed ^ splitmix64(logical + i / 8));
    out[i] = static_cast<std::uint8_t>(word >> (8 * (i % 8)));
  }
}

LogicalPositionSeq generate_positions(const WorkloadSpec& spec) {
  if (spec.dims.empty()) throw SpecError("workload needs at least one dimension");
  std::uint64_t space = 1;
  for (auto d : spec.dims) {
    if (d == 0) throw SpecError("dimension cardinality must be at least 1");
    if (__builtin_mul_overflow(space, d, &space)) throw SpecError("logical space overflows 64 bits");
  }
  const std::uint64_t cells = target_cells(spec, space);
  const std::uint64_t empties = space - cells;
  std::mt19937_64 rng(spec.seed);

  // Run lengths; inner gaps get one mandatory empty cell each for the
  // singleton/longrun profiles so runs stay separate.
  std::vector<std::uint64_t> run_len;
  std::uint64_t mandatory_gap = 1;
  switch (spec.profile) {
    case Profile::kUniform:
      run_len.assign(cells, 1);
      mandatory_gap = 0;
      break;
    case Profile::kSingleton:
      if (spec.density > 0.5) throw SpecError("singleton profile cannot exceed density 0.5");
      run_len.assign(cells, 1);
      break;
    case Profile::kLongrun: {
      if (spec.min_run == 0) throw SpecError("min_run must be at least 1");
      if (cells < spec.min_run) throw SpecError("too few cells for a single run of min_run");
      std::uint64_t placed = 0;
      while (placed < cells) {
        auto len = spec.min_run + static_cast<std::uint64_t>(exponential(rng) * static_cast<double>(spec.min_run));
        const std::uint64_t left = cells - placed;
        if (len > left) len = left;
        if (left - len < spec.min_run && left - len > 0) len = left;  // absorb a short tail
        run_len.push_back(len);
        placed += len;
      }
      break;
    }
  }

  const std::uint64_t inner = run_len.size() - 1;
  if (empties < inner * mandatory_gap) throw SpecError("density too high for the requested profile");
  const auto extra = spread(empties - inner * mandatory_gap, run_len.size() + 1, rng);

  std::vector<std::uint64_t> positions;
  positions.reserve(cells);
  std::uint64_t pos = extra[0];
  for (std::size_t r = 0; r < run_len.size(); ++r) {
    if (r > 0) pos += mandatory_gap + extra[r];
    for (std::uint64_t i = 0; i < run_len[r]; ++i) positions.push_back(pos++);
  }
  return LogicalPositionSeq(std::move(positions));
}

Relation generate(const WorkloadSpec& spec) {
  auto positions = generate_positions(spec);
  RelationSchema schema = RelationSchema::numbered(spec.dims, spec.payload_len);
  std::vector<std::uint8_t> payloads(positions.size() * spec.payload_len);
  for (std::size_t j = 0; j < positions.size(); ++j) {
    fill_payload(spec.seed, positions[j],
                 std::span<std::uint8_t>(payloads).subspan(j * spec.payload_len, spec.payload_len));
  }
  return Relation{std::move(schema), std::move(positions), std::move(payloads)};
}

}  // namespace mdhc
