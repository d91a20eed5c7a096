#include "mdhc/size_tuner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mdhc/errors.hpp"

namespace mdhc {

namespace {

void require_bits(unsigned b, const char* what) {
  if (b == 0) throw InvalidArgumentError(std::string("missing parameter: ") + what);
}

std::uint64_t count_gaps_at_least_pow2(const LogicalPositionSeq& seq, unsigned e) {
  if (e >= 64) return 0;
  const std::uint64_t threshold = std::uint64_t{1} << e;
  std::uint64_t n = 0;
  for (std::size_t i = 1; i < seq.size(); ++i) n += seq[i] - seq[i - 1] >= threshold;
  return n;
}

}  // namespace

std::uint64_t model_size_bits(Method m, const HeaderParams& p, const HeaderCounts& c) {
  require_bits(p.iota, "iota");
  switch (m) {
    case Method::kSchc:
      if (c.runs > c.cells || (c.cells > 0 && c.runs == 0)) throw InvalidArgumentError("run count inconsistent with N");
      return 2 * c.runs * p.iota;
    case Method::kLpc:
      return c.cells * p.iota;
    case Method::kBoc:
      require_bits(p.theta, "theta");
      if (p.bucket_len == 0) throw InvalidArgumentError("missing parameter: l");
      return boc_base_count(c.cells, p.bucket_len) * p.iota + c.cells * p.theta;
    case Method::kDsc:
      require_bits(p.diff, "s");
      if (c.jumps == 0 || c.jumps > c.cells) throw InvalidArgumentError("jump count inconsistent with N");
      return c.jumps * p.iota + c.cells * p.diff;
  }
  throw InvalidArgumentError("unknown method tag " + std::to_string(static_cast<unsigned>(m)));
}

SizeReport size_report(const Header& h) {
  SizeReport r;
  r.method = method_of(h);
  r.params = params_of(h);
  r.counts = counts_of(h);
  r.model_bits = model_size_bits(r.method, r.params, r.counts);
  r.measured_bits = encode_payload(h).size() * 8;
  return r;
}

std::string size_report_csv_header() { return "method,N,nu,M,iota,theta,l,s,model_bits,measured_bits"; }

std::string to_csv_row(const SizeReport& r) {
  std::ostringstream os;
  os << to_string(r.method) << ',' << r.counts.cells << ',' << r.counts.runs << ',' << r.counts.jumps << ','
     << r.params.iota << ',' << r.params.theta << ',' << r.params.bucket_len << ',' << r.params.diff << ','
     << r.model_bits << ',' << r.measured_bits;
  return os.str();
}

DifferenceDistribution::DifferenceDistribution(std::vector<std::uint64_t> gaps) : gaps_(std::move(gaps)) {
  if (gaps_.empty()) throw DegenerateDistributionError("gap distribution needs at least one gap");
  std::sort(gaps_.begin(), gaps_.end());
}

std::uint64_t DifferenceDistribution::count_below(std::uint64_t x) const {
  return static_cast<std::uint64_t>(std::lower_bound(gaps_.begin(), gaps_.end(), x) - gaps_.begin());
}

std::uint64_t DifferenceDistribution::count_at_least_pow2(unsigned e) const {
  if (e >= 64) return 0;
  return gap_count() - count_below(std::uint64_t{1} << e);
}

double DifferenceDistribution::cdf(std::uint64_t x) const {
  return static_cast<double>(count_below(x)) / static_cast<double>(gap_count());
}

double DifferenceDistribution::cdf_pow2(unsigned e) const {
  return 1.0 - static_cast<double>(count_at_least_pow2(e)) / static_cast<double>(gap_count());
}

std::uint64_t DifferenceDistribution::quantile(double q) const {
  q = std::clamp(q, 0.0, 1.0);
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(gaps_.size())));
  return gaps_[rank == 0 ? 0 : rank - 1];
}

DifferenceDistribution empirical_cdf(const LogicalPositionSeq& seq) {
  if (seq.size() < 2) throw DegenerateDistributionError("gap distribution needs at least two positions");
  std::vector<std::uint64_t> gaps(seq.size() - 1);
  for (std::size_t i = 1; i < seq.size(); ++i) gaps[i - 1] = seq[i] - seq[i - 1];
  return DifferenceDistribution(std::move(gaps));
}

std::uint64_t exact_jump_count(const DifferenceDistribution& dist, unsigned s_bits) {
  return 1 + dist.count_at_least_pow2(s_bits);
}

double predict_jumps(const DifferenceDistribution& dist, Width s, std::uint64_t cells) {
  return 1.0 + (1.0 - dist.cdf_pow2(bits(s))) * static_cast<double>(cells - 1);
}

double model_jump_estimate(const DifferenceDistribution& dist, Width s, std::uint64_t cells) {
  return (1.0 - dist.cdf_pow2(bits(s))) * static_cast<double>(cells);
}

std::string_view to_string(WidthDecision d) { return d == WidthDecision::kShrink ? "SHRINK" : "KEEP"; }

WidthVerdict width_change_verdict(const DifferenceDistribution& dist, unsigned zeta_wide, unsigned zeta_narrow,
                                  unsigned iota, std::uint64_t cells) {
  if (!(zeta_wide > zeta_narrow && zeta_narrow > 0 && zeta_wide <= 64)) {
    throw InvalidArgumentError("width change needs 64 >= zeta_wide > zeta_narrow > 0");
  }
  if (iota == 0) throw InvalidArgumentError("iota must be positive");

  WidthVerdict v;
  v.zeta_wide = zeta_wide;
  v.zeta_narrow = zeta_narrow;
  v.iota = iota;
  v.cells = cells;
  v.jumps_wide = exact_jump_count(dist, zeta_wide);
  v.jumps_narrow = exact_jump_count(dist, zeta_narrow);
  const unsigned dz = zeta_wide - zeta_narrow;
  v.benefit_bits = cells * dz;
  v.cost_bits = (v.jumps_narrow - v.jumps_wide) * iota;
  v.decision = v.benefit_bits > v.cost_bits ? WidthDecision::kShrink : WidthDecision::kKeep;

  v.inverse_iota = 1.0 / iota;
  v.slope = (dist.cdf_pow2(zeta_wide) - dist.cdf_pow2(zeta_narrow)) / dz;
  v.exact_slope = static_cast<double>(v.jumps_narrow - v.jumps_wide) / (static_cast<double>(cells) * dz);
  // integer forms of slope < 1/iota
  const std::uint64_t newly_overflowing = dist.count_at_least_pow2(zeta_narrow) - dist.count_at_least_pow2(zeta_wide);
  v.slope_condition = newly_overflowing * iota < dist.gap_count() * dz;
  v.exact_slope_condition = (v.jumps_narrow - v.jumps_wide) * iota < cells * dz;
  return v;
}

WidthSelection select_dsc_width(const LogicalPositionSeq& seq, Width iota, std::initializer_list<Width> candidates) {
  if (seq.empty()) throw EmptySequenceError("width selection needs at least one position");
  std::vector<Width> sorted(candidates);
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) throw InvalidArgumentError("no candidate widths");

  WidthSelection out;
  std::uint64_t best_bits = 0;
  for (Width s : sorted) {
    if (s == Width::k64) throw InvalidArgumentError("DSC difference width must be 8, 16 or 32 bits");
    SizeReport r;
    r.method = Method::kDsc;
    r.params = {bits(iota), 0, 0, bits(s), DscHeader::kDefaultStride};
    r.counts = {seq.size(), 0, 1 + count_gaps_at_least_pow2(seq, bits(s))};
    r.model_bits = model_size_bits(Method::kDsc, r.params, r.counts);
    if (out.candidates.empty() || r.model_bits < best_bits) {
      best_bits = r.model_bits;
      out.best = s;
    }
    out.candidates.push_back(r);
  }
  return out;
}

HeaderPreference lpc_vs_boc(unsigned iota, std::uint32_t bucket_len, unsigned theta) {
  if (bucket_len == 0) throw InvalidArgumentError("bucket length must be at least 1");
  // iota/l + theta < iota  <=>  iota + theta*l < iota*l
  const std::uint64_t l = bucket_len;
  return iota + theta * l < iota * l ? HeaderPreference::kBoc : HeaderPreference::kLpc;
}

double accel_overhead_ratio(std::uint64_t jumps, std::uint32_t stride, unsigned alpha, unsigned iota) {
  if (jumps == 0 || stride == 0 || iota == 0) throw InvalidArgumentError("jumps, stride and iota must be positive");
  const double anchors = static_cast<double>((jumps - 1) / stride + 1);
  return anchors * alpha / (static_cast<double>(jumps) * iota);
}

double accel_overhead_limit(std::uint32_t stride, unsigned alpha, unsigned iota) {
  if (stride == 0 || iota == 0) throw InvalidArgumentError("stride and iota must be positive");
  return static_cast<double>(alpha) / (static_cast<double>(stride) * iota);
}

JumpBaseCheck check_jumps_vs_bases(const LogicalPositionSeq& seq, std::uint32_t bucket_len, Width theta,
                                   Width zeta) {
  if (bits(theta) > bits(zeta)) throw InvalidArgumentError("requires theta <= zeta");
  const Width iota = seq.empty() ? Width::k8 : smallest_width_for(seq.back());
  const auto boc = BocHeader::build(seq, bucket_len, theta, iota);
  const auto dsc = DscHeader::build(seq, zeta, iota);
  return {dsc.jump_count(), boc.base_count(), dsc.jump_count() <= boc.base_count()};
}

SizeComparison compare_dsc_boc(const LogicalPositionSeq& seq, std::uint32_t bucket_len, Width theta, Width iota) {
  const auto boc = BocHeader::build(seq, bucket_len, theta, iota);
  const auto dsc = DscHeader::build(seq, theta, iota);
  return {dsc.size_bits(), boc.size_bits(), dsc.size_bits() <= boc.size_bits()};
}

std::uint64_t max_bucket_span(const LogicalPositionSeq& seq, std::uint32_t bucket_len) {
  if (bucket_len == 0) throw InvalidArgumentError("bucket length must be at least 1");
  std::uint64_t span = 0;
  for (std::size_t start = 0; start < seq.size(); start += bucket_len) {
    const std::size_t last = std::min<std::size_t>(start + bucket_len, seq.size()) - 1;
    span = std::max(span, seq[last] - seq[start]);
  }
  return span;
}

namespace {

std::optional<Width> narrowest_theta(std::uint64_t span, Width iota) {
  for (Width t : {Width::k8, Width::k16, Width::k32, Width::k64}) {
    if (bits(t) > bits(iota)) break;
    if (fits(span, t)) return t;
  }
  return std::nullopt;
}

std::vector<std::uint32_t> bucket_sweep(std::size_t cells) {
  std::vector<std::uint32_t> ls;
  for (std::uint64_t l = 1; l <= std::max<std::size_t>(cells, 1) && l <= (std::uint64_t{1} << 31); l *= 2) {
    ls.push_back(static_cast<std::uint32_t>(l));
  }
  return ls;
}

}  // namespace

std::optional<HeaderParams> best_boc_params(const LogicalPositionSeq& seq, Width iota) {
  if (seq.empty()) return std::nullopt;
  std::optional<HeaderParams> best;
  std::uint64_t best_bits = 0;
  for (std::uint32_t l : bucket_sweep(seq.size())) {
    auto theta = narrowest_theta(max_bucket_span(seq, l), iota);
    if (!theta) continue;
    HeaderParams p{bits(iota), bits(*theta), l, 0, 0};
    const std::uint64_t b = model_size_bits(Method::kBoc, p, {seq.size(), 0, 0});
    if (!best || b < best_bits) {
      best = p;
      best_bits = b;
    }
  }
  return best;
}

HeaderParams resolve_params(Method m, const LogicalPositionSeq& seq, HeaderParams p) {
  if (seq.empty()) throw EmptySequenceError("cannot build a header for an empty relation");
  const Width iota = p.iota ? width_from_bits(p.iota) : smallest_width_for(seq.back());
  p.iota = bits(iota);
  switch (m) {
    case Method::kSchc:
    case Method::kLpc:
      break;
    case Method::kBoc:
      if (p.theta && p.bucket_len) break;
      if (p.bucket_len) {
        auto t = narrowest_theta(max_bucket_span(seq, p.bucket_len), Width::k64);
        p.theta = bits(t.value_or(Width::k64));
      } else if (p.theta) {
        const Width theta = width_from_bits(p.theta);
        std::uint32_t best_l = 1;
        std::uint64_t best_bits = 0;
        bool found = false;
        for (std::uint32_t l : bucket_sweep(seq.size())) {
          if (!fits(max_bucket_span(seq, l), theta)) continue;
          const std::uint64_t b = model_size_bits(Method::kBoc, {p.iota, p.theta, l, 0, 0}, {seq.size(), 0, 0});
          if (!found || b < best_bits) {
            best_l = l;
            best_bits = b;
            found = true;
          }
        }
        if (!found) throw OffsetOverflowError("no bucket length fits offsets in " + std::to_string(p.theta) + " bits");
        p.bucket_len = best_l;
      } else {
        auto best = best_boc_params(seq, iota);
        if (!best) throw OffsetOverflowError("no buildable BOC configuration");
        p = *best;
      }
      break;
    case Method::kDsc:
      if (!p.diff) p.diff = bits(select_dsc_width(seq, iota).best);
      if (!p.stride) p.stride = DscHeader::kDefaultStride;
      break;
  }
  return p;
}

}  // namespace mdhc
