#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "mdhc/errors.hpp"
#include "mdhc/relation.hpp"

namespace mdhc {
namespace {

const char* kSchemaText =
    "region:north,south\n"
    "month:jan,feb,mar\n";

TEST(RelationText, SchemaRoundTrip) {
  const auto s = parse_schema_text(kSchemaText);
  ASSERT_EQ(s.arity(), 2u);
  EXPECT_EQ(s.dimension(0).name, "region");
  EXPECT_EQ(s.cardinality(1), 3u);
  EXPECT_EQ(s.logical_size(), 6u);
  EXPECT_EQ(parse_schema_text(format_schema_text(s)), s);
}

TEST(RelationText, SchemaErrors) {
  EXPECT_THROW(parse_schema_text("no colon here\n"), FormatError);
  EXPECT_THROW(parse_schema_text(""), SchemaError);
  EXPECT_THROW(parse_schema_text("a:x,x\n"), SchemaError);
}

TEST(RelationText, CellsParseSortAndRoundTrip) {
  const auto s = parse_schema_text(kSchemaText);
  const auto rel = parse_cells_text(s, "south\tfeb\tbeef\nnorth\tmar\t00ff\n\n");
  EXPECT_EQ(rel.schema.payload_len(), 2u);
  ASSERT_EQ(rel.size(), 2u);
  EXPECT_EQ(rel.positions[0], 2u);  // north, mar
  EXPECT_EQ(rel.positions[1], 4u);  // south, feb
  EXPECT_EQ(to_hex(rel.payload(0)), "00ff");
  EXPECT_EQ(to_hex(rel.payload(1)), "beef");

  const auto again = parse_cells_text(s, format_cells_text(rel));
  EXPECT_EQ(again.positions, rel.positions);
  EXPECT_EQ(again.payloads, rel.payloads);
}

TEST(RelationText, CellErrors) {
  const auto s = parse_schema_text(kSchemaText);
  EXPECT_THROW(parse_cells_text(s, "north\tjan\t00\nnorth\tjan\t01\n"), FormatError);
  EXPECT_THROW(parse_cells_text(s, "north\tjan\t00\nsouth\tjan\t0102\n"), FormatError);
  EXPECT_THROW(parse_cells_text(s, "north\t00\n"), FormatError);
  EXPECT_THROW(parse_cells_text(s, "east\tjan\t00\n"), CoordinateRangeError);
  EXPECT_THROW(parse_cells_text(s, "north\tjan\tzz\n"), FormatError);
}

TEST(RelationText, EmptyPayloads) {
  const auto s = parse_schema_text(kSchemaText);
  const auto rel = parse_cells_text(s, "north\tjan\t\n");
  EXPECT_EQ(rel.schema.payload_len(), 0u);
  EXPECT_EQ(rel.size(), 1u);
  EXPECT_TRUE(rel.payloads.empty());
}

TEST(RelationText, Hex) {
  EXPECT_EQ(to_hex(std::vector<std::uint8_t>{0x00, 0xab, 0x7f}), "00ab7f");
  EXPECT_EQ(from_hex("00AB7f"), (std::vector<std::uint8_t>{0x00, 0xab, 0x7f}));
  EXPECT_THROW(from_hex("abc"), FormatError);
}

TEST(MakeRelation, SortsPairsAndRejectsBadInput) {
  const auto s = RelationSchema::numbered(std::vector<std::uint64_t>{10}, 1);
  const auto rel = make_relation(s, {7, 2, 5}, {70, 20, 50});
  EXPECT_EQ(std::vector<std::uint64_t>(rel.positions.begin(), rel.positions.end()),
            (std::vector<std::uint64_t>{2, 5, 7}));
  EXPECT_EQ(rel.payloads, (std::vector<std::uint8_t>{20, 50, 70}));
  EXPECT_THROW(make_relation(s, {1, 1}, {0, 0}), FormatError);
  EXPECT_THROW(make_relation(s, {1}, {0, 0}), FormatError);
  EXPECT_THROW(make_relation(s, {10}, {0}), CoordinateRangeError);
}

TEST(RelationFiles, SaveAndLoad) {
  const auto dir = std::filesystem::temp_directory_path() / "mdhc_relation_test";
  std::filesystem::create_directories(dir);
  const auto s = parse_schema_text(kSchemaText);
  const auto rel = parse_cells_text(s, "south\tmar\t0a0b\n");
  save_relation(rel, dir / "schema.txt", dir / "cells.tsv");
  const auto back = load_relation(dir / "schema.txt", dir / "cells.tsv");
  EXPECT_EQ(back.schema, rel.schema);
  EXPECT_EQ(back.payloads, rel.payloads);
  EXPECT_THROW(load_relation(dir / "missing.txt", dir / "cells.tsv"), IoError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace mdhc
