#include "mdhc/store.hpp"

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <string_view>

#include "mdhc/errors.hpp"
#include "mdhc/size_tuner.hpp"

namespace mdhc {

File File::open_read(const std::filesystem::path& path) {
  const int fd = ::open(path.c_str(), O_RDONLY | O_CLOEXEC);
  if (fd < 0) throw IoError("cannot open " + path.string() + ": " + std::strerror(errno));
  struct stat st {};
  if (::fstat(fd, &st) != 0) {
    ::close(fd);
    throw IoError("cannot stat " + path.string());
  }
  return File(fd, static_cast<std::uint64_t>(st.st_size));
}

File::File(File&& other) noexcept : fd_(other.fd_), size_(other.size_) { other.fd_ = -1; }

File& File::operator=(File&& other) noexcept {
  if (this != &other) {
    if (fd_ >= 0) ::close(fd_);
    fd_ = other.fd_;
    size_ = other.size_;
    other.fd_ = -1;
  }
  return *this;
}

File::~File() {
  if (fd_ >= 0) ::close(fd_);
}

void File::read_at(std::uint64_t offset, std::span<std::uint8_t> out) const {
  std::size_t done = 0;
  while (done < out.size()) {
    const ssize_t n = ::pread(fd_, out.data() + done, out.size() - done, static_cast<off_t>(offset + done));
    if (n < 0) {
      if (errno == EINTR) continue;
      throw IoError(std::string("read failed: ") + std::strerror(errno));
    }
    if (n == 0) throw CorruptionError("unexpected end of file at offset " + std::to_string(offset + done));
    done += static_cast<std::size_t>(n);
  }
}

void encode_schema(ByteWriter& out, const RelationSchema& schema) {
  out.u16(static_cast<std::uint16_t>(schema.arity()));
  for (const auto& d : schema.dimensions()) {
    if (d.name.size() > 0xffff) throw InvalidArgumentError("dimension name too long");
    out.u16(static_cast<std::uint16_t>(d.name.size()));
    out.raw(d.name);
    out.u32(static_cast<std::uint32_t>(d.values.size()));
    for (const auto& v : d.values) {
      if (v.size() > 0xffff) throw InvalidArgumentError("dimension label too long");
      out.u16(static_cast<std::uint16_t>(v.size()));
      out.raw(v);
    }
  }
  out.u32(schema.payload_len());
}

RelationSchema decode_schema(ByteReader& in) {
  const std::uint16_t arity = in.u16();
  std::vector<DimensionDecl> dims(arity);
  for (auto& d : dims) {
    d.name = in.str(in.u16());
    const std::uint32_t count = in.u32();
    if (count > in.remaining() / 2) throw CorruptionError("dimension value count exceeds file size");
    d.values.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) d.values.push_back(in.str(in.u16()));
  }
  const std::uint32_t payload_len = in.u32();
  try {
    return RelationSchema(std::move(dims), payload_len);
  } catch (const SchemaError& e) {
    throw CorruptionError(std::string("invalid schema block: ") + e.what());
  }
}

namespace {

void check_magic(ByteReader& in, const char (&magic)[4], std::string_view what) {
  auto m = in.raw(4);
  if (std::memcmp(m.data(), magic, 4) != 0) throw FormatError("not a " + std::string(what) + " file (bad magic)");
  const std::uint16_t version = in.u16();
  if (version != kFormatVersion) {
    throw FormatError("unsupported " + std::string(what) + " version " + std::to_string(version));
  }
}

// Fixed-size prefix readers: read only what is needed, growing as required.
std::vector<std::uint8_t> read_prefix(const File& f, std::uint64_t n) {
  std::vector<std::uint8_t> buf(static_cast<std::size_t>(std::min(n, f.size())));
  f.read_at(0, buf);
  return buf;
}

}  // namespace

std::vector<std::uint8_t> encode_store(const RelationSchema& schema, const Header& header,
                                       std::span<const std::uint8_t> payloads) {
  const auto params = params_of(header);
  const auto counts = counts_of(header);
  if (payloads.size() != counts.cells * schema.payload_len()) {
    throw InvalidArgumentError("payload block has " + std::to_string(payloads.size()) + " bytes, expected N * " +
                               std::to_string(schema.payload_len()));
  }
  ByteWriter out;
  out.raw(std::string_view(kStoreMagic, 4));
  out.u16(kFormatVersion);
  encode_schema(out, schema);
  out.u8(static_cast<std::uint8_t>(method_of(header)));
  out.u8(static_cast<std::uint8_t>(params.iota));
  out.u8(static_cast<std::uint8_t>(params.theta));
  out.u32(params.bucket_len);
  out.u8(static_cast<std::uint8_t>(params.diff));
  out.u16(static_cast<std::uint16_t>(params.stride));
  out.u64(counts.cells);
  out.u64(counts.runs);
  out.u64(counts.jumps);
  std::visit([&](const auto& h) { h.encode(out); }, header);
  out.raw(payloads);
  return out.release();
}

std::uint64_t write_store(const std::filesystem::path& path, const RelationSchema& schema, const Header& header,
                          std::span<const std::uint8_t> payloads) {
  const auto image = encode_store(schema, header, payloads);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(image.data()), static_cast<std::streamsize>(image.size()));
  if (!out.flush()) throw IoError("write failed for " + path.string());
  return image.size();
}

namespace {

struct Envelope {
  RelationSchema schema;
  Method method;
  HeaderParams params;
  HeaderCounts counts;
  std::uint64_t header_offset;
};

Envelope parse_envelope(ByteReader& in) {
  check_magic(in, kStoreMagic, "store");
  RelationSchema schema = decode_schema(in);
  Method method;
  try {
    method = method_from_tag(in.u8());
  } catch (const InvalidArgumentError& e) {
    throw FormatError(e.what());
  }
  HeaderParams params;
  params.iota = in.u8();
  params.theta = in.u8();
  params.bucket_len = in.u32();
  params.diff = in.u8();
  params.stride = in.u16();
  HeaderCounts counts;
  counts.cells = in.u64();
  counts.runs = in.u64();
  counts.jumps = in.u64();
  return Envelope{std::move(schema), method, params, counts, in.offset()};
}

// Reads a growing prefix until the envelope parses; the cell block is never
// read here.
Envelope read_envelope(const File& file) {
  std::uint64_t want = std::min<std::uint64_t>(file.size(), 4096);
  while (true) {
    auto buf = read_prefix(file, want);
    try {
      ByteReader in(buf);
      return parse_envelope(in);
    } catch (const CorruptionError&) {
      if (want >= file.size()) throw;
      want = std::min(file.size(), want * 4);
    }
  }
}

}  // namespace

Store Store::open(const std::filesystem::path& path) {
  File file = File::open_read(path);
  Envelope env = read_envelope(file);
  const auto& counts = env.counts;

  const std::uint64_t limit = file.size();
  if (counts.runs > limit || counts.jumps > limit || (env.method != Method::kSchc && counts.cells > limit)) {
    throw CorruptionError("header counts exceed file size");
  }
  std::uint64_t header_bytes = 0;
  try {
    for (unsigned b : {env.params.iota, env.params.theta, env.params.diff}) {
      if (b != 0) width_from_bits(b);
    }
    header_bytes = model_size_bits(env.method, env.params, counts) / 8;
  } catch (const InvalidArgumentError& e) {
    throw FormatError(std::string("bad header parameters: ") + e.what());
  }
  if (env.header_offset + header_bytes > file.size()) throw CorruptionError("truncated header payload");

  std::vector<std::uint8_t> buf(static_cast<std::size_t>(header_bytes));
  file.read_at(env.header_offset, buf);
  ByteReader in(buf);
  Header header = [&]() -> Header {
    try {
      return decode_payload(in, env.method, env.params, counts);
    } catch (const InvalidArgumentError& e) {
      throw FormatError(std::string("bad header parameters: ") + e.what());
    }
  }();

  const std::uint64_t cells_offset = env.header_offset + header_bytes;
  std::uint64_t cell_bytes = 0;
  if (__builtin_mul_overflow(counts.cells, std::uint64_t{env.schema.payload_len()}, &cell_bytes) ||
      file.size() != cells_offset + cell_bytes) {
    throw CorruptionError("store size " + std::to_string(file.size()) + " does not match its header");
  }
  return Store(std::move(file), std::move(env.schema), std::move(header), env.header_offset, cells_offset);
}

std::vector<std::uint8_t> Store::payload(std::uint64_t physical, ProbeStats* stats) const {
  if (physical >= cell_count()) throw RangeError("physical position out of range");
  std::vector<std::uint8_t> out(schema_.payload_len());
  if (!out.empty()) file_.read_at(cells_offset_ + physical * schema_.payload_len(), out);
  if (stats) ++stats->positioned_reads;
  return out;
}

std::optional<std::vector<std::uint8_t>> Store::point_query(std::span<const std::uint64_t> coords,
                                                            ProbeStats* stats) const {
  const std::uint64_t l = schema_.linearize(coords);
  const auto p = physical(header_, l, stats);
  if (!p) return std::nullopt;
  return payload(*p, stats);
}

FileKind detect_file_kind(const std::filesystem::path& path) {
  File f = File::open_read(path);
  if (f.size() < 4) throw FormatError(path.string() + " is too short to be a store or table file");
  std::uint8_t m[4];
  f.read_at(0, m);
  if (std::memcmp(m, kStoreMagic, 4) == 0) return FileKind::kStore;
  if (std::memcmp(m, kTableMagic, 4) == 0) return FileKind::kTable;
  throw FormatError(path.string() + " has unknown magic");
}

}  // namespace mdhc
