#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "mdhc/codecs.hpp"
#include "mdhc/errors.hpp"
#include "mdhc/size_tuner.hpp"
#include "oracle.hpp"

namespace mdhc {
namespace {

const LogicalPositionSeq kSparse({0, 5, 9, 300, 305, 1000});

std::vector<std::uint64_t> arithmetic(std::uint64_t start, std::uint64_t step, std::size_t n) {
  std::vector<std::uint64_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = start + i * step;
  return v;
}

// Direct DSC total size from a brute-force jump count.
std::uint64_t dsc_bits_direct(const std::vector<std::uint64_t>& p, unsigned s, unsigned iota) {
  return testing::count_jumps(p, s) * iota + p.size() * s;
}

TEST(ModelSize, Examples) {
  EXPECT_EQ(model_size_bits(Method::kDsc, {32, 0, 0, 8, 16}, {6, 0, 3}), 144u);
  EXPECT_EQ(model_size_bits(Method::kBoc, {32, 16, 3, 0, 0}, {6, 0, 0}), 160u);
  EXPECT_EQ(model_size_bits(Method::kLpc, {32, 0, 0, 0, 0}, {6, 0, 0}), 192u);
  EXPECT_EQ(model_size_bits(Method::kSchc, {32, 0, 0, 0, 0}, {6, 2, 0}), 128u);
  EXPECT_THROW(model_size_bits(Method::kSchc, {32, 0, 0, 0, 0}, {6, 7, 0}), InvalidArgumentError);
  EXPECT_THROW(model_size_bits(static_cast<Method>(9), {32, 0, 0, 0, 0}, {6, 0, 0}), InvalidArgumentError);
}

TEST(EmpiricalCdf, Examples) {
  const auto d = empirical_cdf(kSparse);
  EXPECT_EQ(d.gap_count(), 5u);
  EXPECT_DOUBLE_EQ(d.cdf(256), 3.0 / 5.0);
  EXPECT_DOUBLE_EQ(d.cdf(1u << 16), 1.0);
  EXPECT_DOUBLE_EQ(d.cdf(1), 0.0);
  EXPECT_DOUBLE_EQ(d.cdf(d.max_gap() + 1), 1.0);
  EXPECT_EQ(d.min_gap(), 4u);
  EXPECT_EQ(d.max_gap(), 695u);
  EXPECT_DOUBLE_EQ(empirical_cdf(LogicalPositionSeq({0, 1, 2, 3})).cdf(2), 1.0);
  EXPECT_THROW(empirical_cdf(LogicalPositionSeq({4})), DegenerateDistributionError);
}

TEST(EmpiricalCdf, MonotoneOnRandomData) {
  std::mt19937_64 rng(11);
  const auto p = testing::random_sequence(rng, testing::SeqShape::kHeavyTail, 500, 1000);
  const auto d = empirical_cdf(LogicalPositionSeq(p));
  double prev = 0;
  for (unsigned e = 0; e <= 64; ++e) {
    const double f = d.cdf_pow2(e);
    EXPECT_GE(f, prev);
    prev = f;
  }
  EXPECT_DOUBLE_EQ(d.cdf_pow2(64), 1.0);
}

TEST(PredictJumps, Examples) {
  const auto d = empirical_cdf(kSparse);
  EXPECT_DOUBLE_EQ(predict_jumps(d, Width::k8, 6), 3.0);
  EXPECT_DOUBLE_EQ(predict_jumps(d, Width::k16, 6), 1.0);
  EXPECT_DOUBLE_EQ(predict_jumps(d, Width::k32, 6), 1.0);
  EXPECT_DOUBLE_EQ(model_jump_estimate(d, Width::k8, 6), 0.4 * 6);
  EXPECT_EQ(exact_jump_count(d, 8), 3u);
}

TEST(PredictJumps, MatchesBuiltHeaders) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const auto shape = static_cast<testing::SeqShape>(i % 4);
    const auto p = testing::random_sequence(rng, shape, 2 + i, 70000);
    const LogicalPositionSeq seq(p);
    const auto d = empirical_cdf(seq);
    for (Width s : {Width::k8, Width::k16, Width::k32}) {
      const auto h = DscHeader::build(seq, s, Width::k64);
      EXPECT_EQ(exact_jump_count(d, bits(s)), h.jump_count());
      EXPECT_NEAR(predict_jumps(d, s, p.size()), static_cast<double>(h.jump_count()), 1e-9);
    }
  }
}

TEST(WidthVerdictTest, Examples) {
  const auto d = empirical_cdf(kSparse);
  const auto v = width_change_verdict(d, 16, 8, 32, 6);
  EXPECT_EQ(v.decision, WidthDecision::kKeep);
  EXPECT_EQ(v.benefit_bits, 48u);
  EXPECT_EQ(v.cost_bits, 64u);
  EXPECT_DOUBLE_EQ(v.slope, 0.05);
  EXPECT_FALSE(v.slope_condition);

  const LogicalPositionSeq small(arithmetic(0, 3, 50));
  const auto vs = width_change_verdict(empirical_cdf(small), 16, 8, 32, 50);
  EXPECT_EQ(vs.decision, WidthDecision::kShrink);
  EXPECT_EQ(vs.cost_bits, 0u);

  EXPECT_THROW(width_change_verdict(d, 8, 8, 32, 6), InvalidArgumentError);
  EXPECT_THROW(width_change_verdict(d, 8, 16, 32, 6), InvalidArgumentError);
}

TEST(WidthVerdictTest, EveryGapOverflows) {
  for (std::size_t n : {2u, 3u, 5u, 10u, 100u}) {
    const auto p = arithmetic(7, 1u << 12, n);
    for (unsigned iota : {8u, 9u, 16u, 32u, 64u}) {
      const auto v = width_change_verdict(empirical_cdf(LogicalPositionSeq(p)), 16, 8, iota, n);
      const bool smaller = dsc_bits_direct(p, 8, iota) < dsc_bits_direct(p, 16, iota);
      EXPECT_EQ(v.decision == WidthDecision::kShrink, smaller) << n << " " << iota;
      EXPECT_EQ(v.cost_bits, (n - 1) * iota);
      EXPECT_EQ(v.benefit_bits, 8 * n);
    }
  }
}

TEST(WidthVerdictTest, ConsistentWithDirectSizes) {
  std::mt19937_64 rng(13);
  const std::pair<unsigned, unsigned> pairs[] = {{16, 8}, {32, 16}, {32, 8}};
  for (int i = 0; i < 300; ++i) {
    const auto p = testing::random_sequence(rng, static_cast<testing::SeqShape>(i % 4), 2 + i % 97, 1u << (i % 20 + 1));
    const auto d = empirical_cdf(LogicalPositionSeq(p));
    for (auto [z1, z2] : pairs) {
      for (unsigned iota : {32u, 64u}) {
        const auto v = width_change_verdict(d, z1, z2, iota, p.size());
        const bool smaller = dsc_bits_direct(p, z2, iota) < dsc_bits_direct(p, z1, iota);
        ASSERT_EQ(v.decision == WidthDecision::kShrink, smaller);
        if (v.exact_slope_condition) ASSERT_EQ(v.decision, WidthDecision::kShrink);
      }
    }
  }
}

TEST(SelectWidth, Examples) {
  const auto sel = select_dsc_width(kSparse, Width::k32);
  EXPECT_EQ(sel.best, Width::k16);
  ASSERT_EQ(sel.candidates.size(), 3u);
  EXPECT_EQ(sel.candidates[0].model_bits, 144u);
  EXPECT_EQ(sel.candidates[1].model_bits, 128u);
  EXPECT_EQ(sel.candidates[2].model_bits, 224u);

  EXPECT_EQ(select_dsc_width(LogicalPositionSeq(arithmetic(0, 1, 100)), Width::k32).best, Width::k8);
  EXPECT_EQ(select_dsc_width(LogicalPositionSeq(arithmetic(0, 300, 100)), Width::k32).best, Width::k16);
}

TEST(SelectWidth, TieGoesToNarrower) {
  // iota=16, one gap of 256: s=8 -> 2*16 + 2*8 = 48, s=16 -> 16 + 2*16 = 48
  const auto tie = select_dsc_width(LogicalPositionSeq({0, 256}), Width::k16);
  EXPECT_EQ(tie.candidates[0].model_bits, 48u);
  EXPECT_EQ(tie.candidates[1].model_bits, 48u);
  EXPECT_EQ(tie.best, Width::k8);
}

TEST(SelectWidth, IsArgminOverEnumeration) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 200; ++i) {
    const auto p = testing::random_sequence(rng, static_cast<testing::SeqShape>(i % 4), 2 + i, 1u << (i % 18 + 1));
    const auto sel = select_dsc_width(LogicalPositionSeq(p), Width::k64);
    unsigned best = 0;
    std::uint64_t best_bits = ~0ull;
    for (unsigned s : {8u, 16u, 32u}) {
      const auto b = dsc_bits_direct(p, s, 64);
      if (b < best_bits) best_bits = b, best = s;
    }
    ASSERT_EQ(bits(sel.best), best);
  }
}

TEST(LpcVsBoc, Examples) {
  EXPECT_EQ(lpc_vs_boc(32, 16, 16), HeaderPreference::kBoc);
  EXPECT_EQ(lpc_vs_boc(32, 1, 8), HeaderPreference::kLpc);
  EXPECT_EQ(lpc_vs_boc(64, 16, 32), HeaderPreference::kBoc);
  EXPECT_EQ(lpc_vs_boc(32, 2, 16), HeaderPreference::kLpc);  // 16 + 16 = 32, not strictly less
}

TEST(AccelOverhead, Examples) {
  EXPECT_DOUBLE_EQ(accel_overhead_ratio(1, 16, 32, 32), 1.0);
  EXPECT_DOUBLE_EQ(accel_overhead_limit(16, 32, 64), 0.03125);
  EXPECT_DOUBLE_EQ(accel_overhead_limit(16, 32, 32), 0.0625);
  EXPECT_NEAR(accel_overhead_ratio(1000000, 16, 32, 64), 0.03125, 1e-5);
  EXPECT_NEAR(accel_overhead_ratio(1000000, 16, 32, 32), 0.0625, 1e-5);
  EXPECT_DOUBLE_EQ(accel_overhead_ratio(17, 16, 32, 32), 2.0 * 32 / (17.0 * 32));
}

TEST(JumpsVsBases, Examples) {
  const auto c = check_jumps_vs_bases(kSparse, 3, Width::k16, Width::k16);
  EXPECT_EQ(c.jumps, 1u);
  EXPECT_EQ(c.base_count, 2u);
  EXPECT_TRUE(c.holds);
  EXPECT_THROW(check_jumps_vs_bases(kSparse, 3, Width::k16, Width::k8), InvalidArgumentError);
  EXPECT_THROW(check_jumps_vs_bases(kSparse, 3, Width::k8, Width::k8), OffsetOverflowError);
}

TEST(JumpsVsBases, RandomSuiteAlwaysHolds) {
  std::mt19937_64 rng(15);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto p = testing::random_sequence(rng, static_cast<testing::SeqShape>(i % 4), 1 + i % 200, 1u << (i % 12 + 1));
    const LogicalPositionSeq seq(p);
    for (std::uint32_t l : {1u, 2u, 8u, 64u}) {
      for (Width theta : {Width::k8, Width::k16, Width::k32}) {
        if (max_bucket_span(seq, l) > max_value(theta)) continue;
        for (Width zeta : {Width::k8, Width::k16, Width::k32}) {
          if (bits(zeta) < bits(theta)) continue;
          ASSERT_TRUE(check_jumps_vs_bases(seq, l, theta, zeta).holds);
          ++checked;
        }
        ASSERT_TRUE(compare_dsc_boc(seq, l, theta, Width::k64).holds);
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(SizeReportTest, ModelEqualsSerialized) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 100; ++i) {
    const auto p = testing::random_sequence(rng, static_cast<testing::SeqShape>(i % 4), 1 + i * 3, 500);
    const LogicalPositionSeq seq(p);
    for (Method m : {Method::kSchc, Method::kLpc, Method::kBoc, Method::kDsc}) {
      const auto params = resolve_params(m, seq, {});
      const auto r = size_report(build_header(m, seq, params));
      EXPECT_EQ(r.model_bits, r.measured_bits);
      EXPECT_EQ(r.model_bits, model_size_bits(m, r.params, r.counts));
    }
  }
}

TEST(ResolveParams, FillsDefaults) {
  const auto dsc = resolve_params(Method::kDsc, kSparse, {});
  EXPECT_EQ(dsc.iota, 16u);
  EXPECT_EQ(dsc.diff, 8u);  // 3*16 + 6*8 = 96 < 16 + 6*16
  EXPECT_EQ(dsc.stride, 16u);
  const auto boc = resolve_params(Method::kBoc, kSparse, {});
  EXPECT_GT(boc.bucket_len, 0u);
  EXPECT_LE(boc.theta, boc.iota);
  EXPECT_EQ(resolve_params(Method::kLpc, kSparse, {32, 0, 0, 0, 0}).iota, 32u);
}

}  // namespace
}  // namespace mdhc
