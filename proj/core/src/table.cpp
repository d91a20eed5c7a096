#include <cstring>
#include <fstream>
#include <limits>

#include "mdhc/errors.hpp"
#include "mdhc/store.hpp"

namespace mdhc {

std::vector<std::uint8_t> encode_table(const Relation& rel) {
  for (std::size_t k = 0; k < rel.schema.arity(); ++k) {
    if (rel.schema.cardinality(k) > std::numeric_limits<std::uint32_t>::max()) {
      throw InvalidArgumentError("table ordinals are 32-bit");
    }
  }
  ByteWriter out;
  out.raw(std::string_view(kTableMagic, 4));
  out.u16(kFormatVersion);
  encode_schema(out, rel.schema);
  out.u64(rel.size());
  // Row-major linearization is monotone in the coordinate tuple, so
  // physical order is primary-key order.
  for (std::size_t j = 0; j < rel.size(); ++j) {
    for (auto c : rel.schema.delinearize(rel.positions[j])) out.u32(static_cast<std::uint32_t>(c));
    out.raw(rel.payload(j));
  }
  return out.release();
}

std::uint64_t write_table(const std::filesystem::path& path, const Relation& rel) {
  const auto image = encode_table(rel);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(image.data()), static_cast<std::streamsize>(image.size()));
  if (!out.flush()) throw IoError("write failed for " + path.string());
  return image.size();
}

TableStore TableStore::open(const std::filesystem::path& path) {
  File file = File::open_read(path);
  std::uint64_t want = std::min<std::uint64_t>(file.size(), 4096);
  while (true) {
    std::vector<std::uint8_t> buf(static_cast<std::size_t>(want));
    file.read_at(0, buf);
    try {
      ByteReader in(buf);
      auto m = in.raw(4);
      if (std::memcmp(m.data(), kTableMagic, 4) != 0) throw FormatError("not a table file (bad magic)");
      const std::uint16_t version = in.u16();
      if (version != kFormatVersion) throw FormatError("unsupported table version " + std::to_string(version));
      RelationSchema schema = decode_schema(in);
      const std::uint64_t records = in.u64();
      const std::uint64_t offset = in.offset();
      const std::uint64_t record_size = 4 * schema.arity() + schema.payload_len();
      std::uint64_t body = 0;
      if (__builtin_mul_overflow(records, record_size, &body) || offset + body != file.size()) {
        throw CorruptionError("table size does not match its record count");
      }
      return TableStore(std::move(file), std::move(schema), records, offset);
    } catch (const CorruptionError&) {
      if (want >= file.size()) throw;
      want = std::min(file.size(), want * 4);
    }
  }
}

std::optional<std::vector<std::uint8_t>> TableStore::point_query(std::span<const std::uint64_t> coords,
                                                                 ProbeStats* stats) const {
  schema_.linearize(coords);  // arity and range checks
  const std::size_t arity = schema_.arity();
  std::vector<std::uint8_t> rec(record_size_);

  auto compare = [&](std::uint64_t index) {
    file_.read_at(records_offset_ + index * record_size_, rec);
    if (stats) {
      ++stats->positioned_reads;
      ++stats->header_steps;
    }
    ByteReader in(rec);
    for (std::size_t k = 0; k < arity; ++k) {
      const std::uint64_t c = in.u32();
      if (c != coords[k]) return c < coords[k] ? -1 : 1;
    }
    return 0;
  };

  std::uint64_t lo = 0, hi = records_;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    const int c = compare(mid);
    if (c == 0) {
      return std::vector<std::uint8_t>(rec.begin() + static_cast<std::ptrdiff_t>(4 * arity), rec.end());
    }
    if (c < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return std::nullopt;
}

}  // namespace mdhc
