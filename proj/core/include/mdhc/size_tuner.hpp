#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdhc/header.hpp"
#include "mdhc/method.hpp"
#include "mdhc/runs.hpp"
#include "mdhc/width.hpp"

namespace mdhc {

/// Closed-form header size in bits:
///   SCHC 2*nu*iota, LPC N*iota, BOC (floor((N-1)/l)+1)*iota + N*theta,
///   DSC M*iota + N*s.
/// InvalidArgumentError for an unknown method, missing parameters or
/// inconsistent counts.
std::uint64_t model_size_bits(Method m, const HeaderParams& params, const HeaderCounts& counts);

/// Number of BOC base elements for N cells and bucket length l.
constexpr std::uint64_t boc_base_count(std::uint64_t cells, std::uint64_t bucket_len) {
  return cells == 0 ? 0 : (cells - 1) / bucket_len + 1;
}

struct SizeReport {
  Method method = Method::kLpc;
  HeaderParams params;
  HeaderCounts counts;
  std::uint64_t model_bits = 0;
  std::uint64_t measured_bits = 0;  // bytes of the encoded payload * 8, once serialized
};

/// Model and measured size of a built header.
SizeReport size_report(const Header& h);

/// `method,N,nu,M,iota,theta,l,s,model_bits,measured_bits`
std::string size_report_csv_header();
std::string to_csv_row(const SizeReport& r);

/// Empirical distribution of the gaps L_j - L_{j-1}, j >= 1.
class DifferenceDistribution {
 public:
  explicit DifferenceDistribution(std::vector<std::uint64_t> gaps);

  std::uint64_t gap_count() const noexcept { return gaps_.size(); }
  std::span<const std::uint64_t> sorted_gaps() const noexcept { return gaps_; }
  /// |{gaps < x}|
  std::uint64_t count_below(std::uint64_t x) const;
  /// |{gaps >= 2^e}|; zero for e >= 64.
  std::uint64_t count_at_least_pow2(unsigned e) const;
  /// Fraction of gaps strictly below x.
  double cdf(std::uint64_t x) const;
  /// cdf(2^e), with cdf(2^64) = 1.
  double cdf_pow2(unsigned e) const;
  std::uint64_t min_gap() const { return gaps_.front(); }
  std::uint64_t max_gap() const { return gaps_.back(); }
  /// Gap at the q-quantile (nearest rank), q in [0, 1].
  std::uint64_t quantile(double q) const;

 private:
  std::vector<std::uint64_t> gaps_;
};

/// DegenerateDistributionError when seq has fewer than two positions.
DifferenceDistribution empirical_cdf(const LogicalPositionSeq& seq);

/// Exact DSC jump count at difference width `s_bits`: the mandatory first
/// jump plus one per gap >= 2^s_bits.
std::uint64_t exact_jump_count(const DifferenceDistribution& dist, unsigned s_bits);

/// 1 + (1 - F(2^s)) * (N - 1); equals the built jump count when the
/// distribution came from the same N-element sequence.
double predict_jumps(const DifferenceDistribution& dist, Width s, std::uint64_t cells);

/// Continuous estimate (1 - F(2^s)) * N; ignores the mandatory first jump.
double model_jump_estimate(const DifferenceDistribution& dist, Width s, std::uint64_t cells);

enum class WidthDecision { kShrink, kKeep };
std::string_view to_string(WidthDecision d);

/// Cost/benefit of narrowing the difference width from zeta_wide to zeta_narrow.
struct WidthVerdict {
  WidthDecision decision = WidthDecision::kKeep;
  unsigned zeta_wide = 0;
  unsigned zeta_narrow = 0;
  unsigned iota = 0;
  std::uint64_t cells = 0;
  std::uint64_t jumps_wide = 0;    // M_1
  std::uint64_t jumps_narrow = 0;  // M_2
  std::uint64_t benefit_bits = 0;  // N * (zeta_wide - zeta_narrow)
  std::uint64_t cost_bits = 0;     // (M_2 - M_1) * iota
  double slope = 0;                // (F(2^z1) - F(2^z2)) / (z1 - z2), empirical F
  double exact_slope = 0;          // (M_2 - M_1) / (N * (z1 - z2))
  double inverse_iota = 0;
  bool slope_condition = false;        // slope < 1/iota
  bool exact_slope_condition = false;  // exact_slope < 1/iota
};

/// InvalidArgumentError unless 64 >= zeta_wide > zeta_narrow > 0 and iota > 0.
WidthVerdict width_change_verdict(const DifferenceDistribution& dist, unsigned zeta_wide, unsigned zeta_narrow,
                                  unsigned iota, std::uint64_t cells);

struct WidthSelection {
  Width best = Width::k8;
  std::vector<SizeReport> candidates;  // model sizes with exact jump counts
};

/// Picks the difference width minimising M*iota + N*s over `candidates`;
/// ties go to the narrower width.
WidthSelection select_dsc_width(const LogicalPositionSeq& seq, Width iota,
                                std::initializer_list<Width> candidates = {Width::k8, Width::k16, Width::k32});

enum class HeaderPreference { kLpc, kBoc };

/// BOC iff iota/l + theta < iota (asymptotic per-cell cost).
HeaderPreference lpc_vs_boc(unsigned iota, std::uint32_t bucket_len, unsigned theta);

/// (floor((M-1)/n) + 1) * alpha / (M * iota): accelerator bits over jump bits.
double accel_overhead_ratio(std::uint64_t jumps, std::uint32_t stride, unsigned alpha, unsigned iota);
/// alpha / (n * iota), the M -> infinity limit.
double accel_overhead_limit(std::uint32_t stride, unsigned alpha, unsigned iota);

struct JumpBaseCheck {
  std::uint64_t jumps = 0;
  std::uint64_t base_count = 0;
  bool holds = false;  // jumps <= base_count
};

/// Builds BOC(l, theta) and DSC(zeta) over seq and compares jump and base
/// counts. OffsetOverflowError if BOC is not buildable; InvalidArgumentError
/// if theta > zeta.
JumpBaseCheck check_jumps_vs_bases(const LogicalPositionSeq& seq, std::uint32_t bucket_len, Width theta, Width zeta);

struct SizeComparison {
  std::uint64_t dsc_bits = 0;
  std::uint64_t boc_bits = 0;
  bool holds = false;  // dsc_bits <= boc_bits
};

/// DSC with s = theta against BOC(l, theta), both at width iota.
SizeComparison compare_dsc_boc(const LogicalPositionSeq& seq, std::uint32_t bucket_len, Width theta, Width iota);

/// Largest in-bucket offset for bucket length l (the BOC feasibility bound).
std::uint64_t max_bucket_span(const LogicalPositionSeq& seq, std::uint32_t bucket_len);

/// Smallest-model BOC configuration over theta in {8,16,32,64} (theta <= iota)
/// and l in powers of two up to N; nullopt if nothing is buildable.
std::optional<HeaderParams> best_boc_params(const LogicalPositionSeq& seq, Width iota);

/// Fills unset (zero) fields: iota = smallest width holding the last
/// position; BOC theta/l by best_boc_params (or the narrowest feasible theta
/// for a given l, or the best l for a given theta); DSC s by
/// select_dsc_width; DSC stride 16.
HeaderParams resolve_params(Method m, const LogicalPositionSeq& seq, HeaderParams params);

}  // namespace mdhc
