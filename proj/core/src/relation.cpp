#include "mdhc/relation.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "mdhc/errors.hpp"

namespace mdhc {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw FormatError("hex payload has odd length");
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = hex_digit(hex[2 * i]), lo = hex_digit(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw FormatError("invalid hex digit in payload");
    out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return out;
}

RelationSchema parse_schema_text(std::string_view text) {
  std::vector<DimensionDecl> dims;
  std::size_t line_no = 0;
  for (auto raw : split(text, '\n')) {
    ++line_no;
    auto line = strip_cr(raw);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw FormatError("schema line " + std::to_string(line_no) + ": expected 'name:label,label,...'");
    }
    DimensionDecl d{std::string(line.substr(0, colon)), {}};
    for (auto label : split(line.substr(colon + 1), ',')) d.values.emplace_back(label);
    dims.push_back(std::move(d));
  }
  return RelationSchema(std::move(dims), 0);
}

std::string format_schema_text(const RelationSchema& schema) {
  std::string out;
  for (const auto& d : schema.dimensions()) {
    out += d.name;
    out += ':';
    for (std::size_t i = 0; i < d.values.size(); ++i) {
      if (i) out += ',';
      out += d.values[i];
    }
    out += '\n';
  }
  return out;
}

Relation make_relation(RelationSchema schema, std::vector<std::uint64_t> positions,
                       std::vector<std::uint8_t> payloads) {
  const std::size_t len = schema.payload_len();
  if (payloads.size() != positions.size() * len) throw FormatError("payload bytes do not match cell count");
  for (auto p : positions) {
    if (p >= schema.logical_size()) throw CoordinateRangeError("logical position outside the schema's space");
  }

  std::vector<std::size_t> order(positions.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return positions[a] < positions[b]; });

  std::vector<std::uint64_t> sorted(positions.size());
  std::vector<std::uint8_t> packed(payloads.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted[i] = positions[order[i]];
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw FormatError("duplicate cell at logical position " + std::to_string(sorted[i]));
    }
    std::copy_n(payloads.begin() + static_cast<std::ptrdiff_t>(order[i] * len), len,
                packed.begin() + static_cast<std::ptrdiff_t>(i * len));
  }
  return Relation{std::move(schema), LogicalPositionSeq(std::move(sorted)), std::move(packed)};
}

Relation parse_cells_text(const RelationSchema& schema, std::string_view text) {
  std::vector<std::uint64_t> positions;
  std::vector<std::uint8_t> payloads;
  std::optional<std::size_t> payload_len;
  std::size_t line_no = 0;
  std::vector<std::uint64_t> coords(schema.arity());

  for (auto raw : split(text, '\n')) {
    ++line_no;
    auto line = strip_cr(raw);
    if (line.empty()) continue;
    auto fields = split(line, '\t');
    if (fields.size() != schema.arity() + 1) {
      throw FormatError("cell line " + std::to_string(line_no) + ": expected " + std::to_string(schema.arity()) +
                        " labels and a payload");
    }
    for (std::size_t k = 0; k < schema.arity(); ++k) coords[k] = schema.ordinal(k, std::string(fields[k]));
    auto bytes = from_hex(fields.back());
    if (!payload_len) payload_len = bytes.size();
    if (bytes.size() != *payload_len) {
      throw FormatError("cell line " + std::to_string(line_no) + ": payload length differs from earlier cells");
    }
    positions.push_back(schema.linearize(coords));
    payloads.insert(payloads.end(), bytes.begin(), bytes.end());
  }
  return make_relation(schema.with_payload_len(static_cast<std::uint32_t>(payload_len.value_or(0))),
                       std::move(positions), std::move(payloads));
}

std::string format_cells_text(const Relation& rel) {
  std::string out;
  for (std::size_t j = 0; j < rel.size(); ++j) {
    const auto coords = rel.schema.delinearize(rel.positions[j]);
    for (std::size_t k = 0; k < coords.size(); ++k) {
      out += rel.schema.dimension(k).values[coords[k]];
      out += '\t';
    }
    out += to_hex(rel.payload(j));
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

Relation load_relation(const std::filesystem::path& schema_path, const std::filesystem::path& cells_path) {
  const auto schema = parse_schema_text(read_text_file(schema_path));
  return parse_cells_text(schema, read_text_file(cells_path));
}

void save_relation(const Relation& rel, const std::filesystem::path& schema_path,
                   const std::filesystem::path& cells_path) {
  write_text_file(schema_path, format_schema_text(rel.schema));
  write_text_file(cells_path, format_cells_text(rel));
}

}  // namespace mdhc
