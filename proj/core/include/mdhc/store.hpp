#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdhc/bytes.hpp"
#include "mdhc/header.hpp"
#include "mdhc/relation.hpp"
#include "mdhc/schema.hpp"

namespace mdhc {

inline constexpr char kStoreMagic[4] = {'M', 'D', 'H', 'C'};
inline constexpr char kTableMagic[4] = {'M', 'D', 'T', 'B'};
inline constexpr std::uint16_t kFormatVersion = 1;

/// Read-only file handle performing positioned reads.
class File {
 public:
  static File open_read(const std::filesystem::path& path);
  File(File&& other) noexcept;
  File& operator=(File&& other) noexcept;
  File(const File&) = delete;
  File& operator=(const File&) = delete;
  ~File();

  std::uint64_t size() const noexcept { return size_; }
  /// Reads exactly out.size() bytes at `offset`; CorruptionError on short read.
  void read_at(std::uint64_t offset, std::span<std::uint8_t> out) const;

 private:
  File(int fd, std::uint64_t size) : fd_(fd), size_(size) {}
  int fd_ = -1;
  std::uint64_t size_ = 0;
};

/// Schema block shared by both file kinds: dims, labels and payload_len.
void encode_schema(ByteWriter& out, const RelationSchema& schema);
RelationSchema decode_schema(ByteReader& in);

/// Complete store file image. InvalidArgumentError when the payload byte
/// count is not N * payload_len.
std::vector<std::uint8_t> encode_store(const RelationSchema& schema, const Header& header,
                                       std::span<const std::uint8_t> payloads);

/// Writes the store atomically enough for a single writer; returns bytes written.
std::uint64_t write_store(const std::filesystem::path& path, const RelationSchema& schema, const Header& header,
                          std::span<const std::uint8_t> payloads);

/// Multidimensional representation opened for point queries. The schema and
/// header are loaded into memory; payload records stay on disk and are
/// fetched with one positioned read each.
class Store {
 public:
  /// FormatError on bad magic/version/tag, CorruptionError on truncation.
  static Store open(const std::filesystem::path& path);

  const RelationSchema& schema() const noexcept { return schema_; }
  const Header& header() const noexcept { return header_; }
  std::uint64_t cell_count() const noexcept { return mdhc::cell_count(header_); }
  /// Byte offset of the header payload and of the cell block.
  std::uint64_t header_offset() const noexcept { return header_offset_; }
  std::uint64_t cells_offset() const noexcept { return cells_offset_; }

  /// Payload of physical record P (one positioned read).
  std::vector<std::uint8_t> payload(std::uint64_t physical, ProbeStats* stats = nullptr) const;

  /// linearize -> header lookup -> payload read; nullopt for empty cells
  /// without touching the file.
  std::optional<std::vector<std::uint8_t>> point_query(std::span<const std::uint64_t> coords,
                                                       ProbeStats* stats = nullptr) const;

 private:
  Store(File file, RelationSchema schema, Header header, std::uint64_t header_offset, std::uint64_t cells_offset)
      : file_(std::move(file)),
        schema_(std::move(schema)),
        header_(std::move(header)),
        header_offset_(header_offset),
        cells_offset_(cells_offset) {}

  File file_;
  RelationSchema schema_;
  Header header_;
  std::uint64_t header_offset_;
  std::uint64_t cells_offset_;
};

/// Baseline table representation: records sorted by the coordinate tuple,
/// each record = one 32-bit ordinal per dimension + payload.
std::vector<std::uint8_t> encode_table(const Relation& rel);
std::uint64_t write_table(const std::filesystem::path& path, const Relation& rel);

/// Table opened for point queries by binary search over the on-disk records;
/// every comparison reads one record.
class TableStore {
 public:
  static TableStore open(const std::filesystem::path& path);

  const RelationSchema& schema() const noexcept { return schema_; }
  std::uint64_t record_count() const noexcept { return records_; }
  std::uint64_t record_size() const noexcept { return record_size_; }

  std::optional<std::vector<std::uint8_t>> point_query(std::span<const std::uint64_t> coords,
                                                       ProbeStats* stats = nullptr) const;

 private:
  TableStore(File file, RelationSchema schema, std::uint64_t records, std::uint64_t records_offset)
      : file_(std::move(file)),
        schema_(std::move(schema)),
        records_(records),
        records_offset_(records_offset),
        record_size_(4 * schema_.arity() + schema_.payload_len()) {}

  File file_;
  RelationSchema schema_;
  std::uint64_t records_;
  std::uint64_t records_offset_;
  std::uint64_t record_size_;
};

/// Which kind of file `path` is, by magic; FormatError if neither.
enum class FileKind { kStore, kTable };
FileKind detect_file_kind(const std::filesystem::path& path);

}  // namespace mdhc
