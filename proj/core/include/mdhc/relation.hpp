#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdhc/runs.hpp"
#include "mdhc/schema.hpp"

namespace mdhc {

/// A relation in multidimensional form: schema, the sorted logical positions
/// of its nonempty cells, and their payloads packed in the same order.
struct Relation {
  RelationSchema schema;
  LogicalPositionSeq positions;
  std::vector<std::uint8_t> payloads;  // positions.size() * schema.payload_len() bytes

  std::size_t size() const noexcept { return positions.size(); }
  std::span<const std::uint8_t> payload(std::size_t physical) const {
    const std::size_t len = schema.payload_len();
    return std::span<const std::uint8_t>(payloads).subspan(physical * len, len);
  }
};

/// Schema text: one `name:label,label,...` line per dimension.
RelationSchema parse_schema_text(std::string_view text);
std::string format_schema_text(const RelationSchema& schema);

/// Cell text: one line per nonempty cell, tab-separated labels followed by
/// the payload in hex. All payloads must have the same length; that length
/// becomes the schema's payload_len. Duplicate cells are a FormatError.
Relation parse_cells_text(const RelationSchema& schema, std::string_view text);
std::string format_cells_text(const Relation& rel);

Relation load_relation(const std::filesystem::path& schema_path, const std::filesystem::path& cells_path);
void save_relation(const Relation& rel, const std::filesystem::path& schema_path,
                   const std::filesystem::path& cells_path);

/// Builds a relation from unsorted (logical position, payload) pairs.
Relation make_relation(RelationSchema schema, std::vector<std::uint64_t> positions,
                       std::vector<std::uint8_t> payloads);

std::string to_hex(std::span<const std::uint8_t> bytes);
/// FormatError on odd length or non-hex digits.
std::vector<std::uint8_t> from_hex(std::string_view hex);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace mdhc
