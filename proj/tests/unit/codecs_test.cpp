#include <gtest/gtest.h>

#include <vector>

#include "mdhc/codecs.hpp"
#include "mdhc/errors.hpp"
#include "mdhc/header.hpp"
#include "oracle.hpp"

namespace mdhc {
namespace {

const LogicalPositionSeq kSparse({0, 5, 9, 300, 305, 1000});
const LogicalPositionSeq kTwoRuns({2, 3, 4, 10, 11});

UIntArray u8s(std::vector<std::uint64_t> v) { return UIntArray::from(Width::k8, v); }

// ---- SCHC ---------------------------------------------------------------

TEST(SchcTest, BuildTwoRuns) {
  const auto h = SchcHeader::build(kTwoRuns, Width::k32);
  ASSERT_EQ(h.run_count(), 2u);
  EXPECT_EQ(h.run_last(0), 4u);
  EXPECT_EQ(h.run_empties(0), 2u);
  EXPECT_EQ(h.run_last(1), 11u);
  EXPECT_EQ(h.run_empties(1), 7u);
  EXPECT_EQ(h.size_bits(), 2u * 2 * 32);
}

TEST(SchcTest, BuildSingletonsAndDense) {
  const auto h = SchcHeader::build(kSparse, Width::k32);
  ASSERT_EQ(h.run_count(), 6u);
  const std::vector<std::uint64_t> v{0, 4, 7, 297, 301, 995};
  for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(h.run_empties(j), v[j]);
  EXPECT_EQ(h.size_bits(), 2u * 6 * 32);  // worst case: 2 * N * iota

  const auto dense = SchcHeader::build(LogicalPositionSeq({0, 1, 2}), Width::k8);
  ASSERT_EQ(dense.run_count(), 1u);
  EXPECT_EQ(dense.run_last(0), 2u);
  EXPECT_EQ(dense.run_empties(0), 0u);
}

TEST(SchcTest, PhysicalExamples) {
  const auto h = SchcHeader::build(kTwoRuns, Width::k32);
  EXPECT_EQ(h.physical(10), 3u);
  EXPECT_EQ(h.physical(5), std::nullopt);
  EXPECT_EQ(h.physical(0), std::nullopt);  // virtual predecessor: 1 < 0 fails
  EXPECT_EQ(h.physical(2), 0u);
  EXPECT_EQ(h.physical(12), std::nullopt);  // beyond the last run
}

TEST(SchcTest, LogicalExamples) {
  const auto h = SchcHeader::build(kTwoRuns, Width::k32);
  EXPECT_EQ(h.logical(3), 10u);
  EXPECT_EQ(h.logical(4), 11u);
  EXPECT_EQ(SchcHeader::build(LogicalPositionSeq({0, 1, 2}), Width::k8).logical(0), 0u);
  EXPECT_THROW(h.logical(5), RangeError);
}

TEST(SchcTest, WidthOverflow) {
  EXPECT_THROW(SchcHeader::build(LogicalPositionSeq({1, 256}), Width::k8), WidthOverflowError);
  EXPECT_NO_THROW(SchcHeader::build(LogicalPositionSeq({1, 255}), Width::k8));
}

// ---- LPC ----------------------------------------------------------------

TEST(LpcTest, BuildAndSize) {
  const auto h = LpcHeader::build(LogicalPositionSeq({0, 5, 9}), Width::k8);
  EXPECT_EQ(h.size_bits(), 24u);
  EXPECT_EQ(LpcHeader::build(kSparse, Width::k32).size_bits(), 192u);
  EXPECT_THROW(LpcHeader::build(LogicalPositionSeq(), Width::k32), EmptySequenceError);
}

TEST(LpcTest, Lookups) {
  const auto h = LpcHeader::build(kSparse, Width::k32);
  EXPECT_EQ(h.physical(300), 3u);
  EXPECT_EQ(h.physical(4), std::nullopt);
  EXPECT_EQ(h.physical(0), 0u);
  EXPECT_EQ(h.logical(0), 0u);
  EXPECT_EQ(h.logical(5), 1000u);
  EXPECT_THROW(h.logical(6), RangeError);
}

// ---- BOC ----------------------------------------------------------------

TEST(BocTest, BuildExample) {
  const auto h = BocHeader::build(kSparse, 3, Width::k16, Width::k32);
  EXPECT_EQ(h.base().to_vector(), (std::vector<std::uint64_t>{0, 300}));
  EXPECT_EQ(h.offsets().to_vector(), (std::vector<std::uint64_t>{0, 5, 9, 0, 5, 700}));
  EXPECT_EQ(h.size_bits(), 2u * 32 + 6u * 16);
}

TEST(BocTest, OffsetOverflow) {
  EXPECT_THROW(BocHeader::build(kSparse, 3, Width::k8, Width::k32), OffsetOverflowError);
  EXPECT_THROW(BocHeader::build(kSparse, 0, Width::k16, Width::k32), InvalidArgumentError);
}

TEST(BocTest, Singleton) {
  const auto h = BocHeader::build(LogicalPositionSeq({7}), 1, Width::k8, Width::k32);
  EXPECT_EQ(h.base().to_vector(), (std::vector<std::uint64_t>{7}));
  EXPECT_EQ(h.offsets().to_vector(), (std::vector<std::uint64_t>{0}));
  EXPECT_EQ(h.physical(7), 0u);
  EXPECT_EQ(h.physical(6), std::nullopt);
}

TEST(BocTest, Lookups) {
  const auto h = BocHeader::build(kSparse, 3, Width::k16, Width::k32);
  EXPECT_EQ(h.logical(4), 305u);
  EXPECT_EQ(h.physical(305), 4u);
  EXPECT_EQ(h.physical(299), std::nullopt);
  EXPECT_EQ(h.physical(1000), 5u);
  EXPECT_EQ(h.physical(1001), std::nullopt);
}

// ---- DSC ----------------------------------------------------------------

TEST(DscTest, BuildNarrowDifferences) {
  // gaps 5, 4, 291, 5, 695: the two above 255 become jumps
  const auto h = DscHeader::build(kSparse, Width::k8, Width::k32);
  EXPECT_EQ(h.difference().to_vector(), (std::vector<std::uint64_t>{0, 5, 4, 0, 5, 0}));
  EXPECT_EQ(h.jumps().to_vector(), (std::vector<std::uint64_t>{0, 300, 1000}));
  EXPECT_EQ(h.jump_count(), 3u);
  EXPECT_EQ(testing::count_jumps({0, 5, 9, 300, 305, 1000}, 8), 3u);
  EXPECT_EQ(h.size_bits(), 144u);
}

TEST(DscTest, BuildWideDifferences) {
  const auto h = DscHeader::build(kSparse, Width::k16, Width::k32);
  EXPECT_EQ(h.difference().to_vector(), (std::vector<std::uint64_t>{0, 5, 4, 291, 5, 695}));
  EXPECT_EQ(h.jumps().to_vector(), (std::vector<std::uint64_t>{0}));
  EXPECT_EQ(h.size_bits(), 128u);
}

TEST(DscTest, BuildSingleCell) {
  for (Width s : {Width::k8, Width::k16, Width::k32}) {
    const auto h = DscHeader::build(LogicalPositionSeq({42}), s, Width::k8);
    EXPECT_EQ(h.difference().to_vector(), (std::vector<std::uint64_t>{0}));
    EXPECT_EQ(h.jumps().to_vector(), (std::vector<std::uint64_t>{42}));
    EXPECT_EQ(h.physical(42), 0u);
    EXPECT_EQ(h.physical(41), std::nullopt);
    EXPECT_EQ(h.physical(43), std::nullopt);
  }
}

TEST(DscTest, BuildErrors) {
  EXPECT_THROW(DscHeader::build(kSparse, Width::k64, Width::k32), InvalidArgumentError);
  EXPECT_THROW(DscHeader::build(kSparse, Width::k8, Width::k8), WidthOverflowError);
  EXPECT_THROW(DscHeader::build(kSparse, Width::k8, Width::k32, 0), InvalidArgumentError);
  EXPECT_THROW(DscHeader::build(LogicalPositionSeq(), Width::k8, Width::k32), EmptySequenceError);
}

TEST(AcceleratorTest, Examples) {
  const auto d = u8s({0, 5, 4, 0, 5, 0});
  EXPECT_EQ(build_accelerator(d, 1), (std::vector<std::uint32_t>{0, 3, 5}));
  EXPECT_EQ(build_accelerator(d, 2), (std::vector<std::uint32_t>{0, 5}));
  EXPECT_EQ(build_accelerator(u8s({0}), 16), (std::vector<std::uint32_t>{0}));
  EXPECT_THROW(build_accelerator(u8s({1, 0}), 1), InvalidArgumentError);
  EXPECT_THROW(build_accelerator(UIntArray(Width::k8, 0), 1), InvalidArgumentError);
}

TEST(DscTest, FindHeaderTraces) {
  const auto h = DscHeader::build(kSparse, Width::k8, Width::k32, 2);
  ProbeStats stats;
  // anchor J_0, walk 5, 9, zero -> 300, 305
  EXPECT_EQ(h.physical(305, &stats), 4u);
  EXPECT_EQ(h.physical(7), std::nullopt);  // walk reaches 9 > 7
  EXPECT_EQ(h.physical(0), 0u);            // equals J_0
  EXPECT_EQ(h.physical(1000), 5u);         // anchor J_2
  EXPECT_EQ(h.physical(1001), std::nullopt);
  EXPECT_EQ(h.physical(300), 3u);  // non-anchored jump reached by walking
}

TEST(DscTest, LogicalExamples) {
  const auto h = DscHeader::build(kSparse, Width::k8, Width::k32);
  EXPECT_EQ(h.logical(4), 305u);  // J_1 + D_4
  EXPECT_EQ(h.logical(1), 5u);    // J_0 + D_1
  EXPECT_EQ(h.logical(5), 1000u);
  EXPECT_THROW(h.logical(6), RangeError);
}

TEST(DscTest, DecompressIsLossless) {
  for (Width s : {Width::k8, Width::k16, Width::k32}) {
    const auto h = DscHeader::build(kSparse, s, Width::k32);
    EXPECT_EQ(h.decompress(), (std::vector<std::uint64_t>(kSparse.begin(), kSparse.end())));
  }
}

// ---- variant facade -----------------------------------------------------

TEST(HeaderTest, BuildByMethodAndDispatch) {
  const HeaderParams p{32, 16, 3, 8, 16};
  for (Method m : {Method::kSchc, Method::kLpc, Method::kBoc, Method::kDsc}) {
    const Header h = build_header(m, kSparse, p);
    EXPECT_EQ(method_of(h), m);
    EXPECT_EQ(cell_count(h), 6u);
    EXPECT_EQ(physical(h, 305), 4u);
    EXPECT_EQ(logical(h, 4), 305u);
    EXPECT_EQ(encode_payload(h).size() * 8, size_bits(h));
  }
}

TEST(HeaderTest, MethodNames) {
  EXPECT_EQ(parse_method("dsc"), Method::kDsc);
  EXPECT_EQ(to_string(Method::kBoc), "boc");
  EXPECT_THROW(parse_method("zip"), InvalidArgumentError);
  EXPECT_THROW(method_from_tag(5), InvalidArgumentError);
}

}  // namespace
}  // namespace mdhc
