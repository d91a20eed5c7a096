#include "mdhc/report.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "mdhc/errors.hpp"
#include "mdhc/store.hpp"

namespace mdhc {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

std::string fmt_double(double v, int precision = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << v;
  return os.str();
}

}  // namespace

Analysis analyze_relation(const Relation& rel, unsigned iota_bits) {
  if (rel.size() == 0) throw EmptySequenceError("cannot analyze an empty relation");
  Analysis a;
  const double table_bytes = static_cast<double>(encode_table(rel).size());
  const double dense_bytes =
      static_cast<double>(rel.schema.logical_size()) * std::max<std::uint32_t>(rel.schema.payload_len(), 1);

  a.rows.push_back({"table", std::nullopt, static_cast<std::uint64_t>(table_bytes), 100.0,
                    100.0 * table_bytes / dense_bytes});

  HeaderParams base;
  base.iota = iota_bits;
  std::optional<HeaderParams> boc_params;
  for (Method m : {Method::kSchc, Method::kLpc, Method::kBoc, Method::kDsc}) {
    const HeaderParams p = resolve_params(m, rel.positions, base);
    if (m == Method::kBoc) boc_params = p;
    const Header h = build_header(m, rel.positions, p);
    const auto bytes = encode_store(rel.schema, h, rel.payloads).size();
    a.rows.push_back({std::string(to_string(m)), size_report(h), bytes, 100.0 * bytes / table_bytes,
                      100.0 * bytes / dense_bytes});
  }

  const unsigned iota = header_report(a, Method::kDsc).params.iota;
  if (rel.size() >= 2) {
    const auto dist = empirical_cdf(rel.positions);
    for (auto [wide, narrow] : {std::pair{16u, 8u}, {32u, 16u}, {32u, 8u}}) {
      a.verdicts.push_back(width_change_verdict(dist, wide, narrow, iota, rel.size()));
    }
  }

  // jumps vs bases and DSC vs BOC at the chosen BOC offset width
  const Width theta = width_from_bits(boc_params->theta);
  if (theta != Width::k64) {
    const auto jb = check_jumps_vs_bases(rel.positions, boc_params->bucket_len, theta, theta);
    a.checks.push_back({"jumps_le_bases", jb.jumps, jb.base_count, jb.holds});
    const auto cmp = compare_dsc_boc(rel.positions, boc_params->bucket_len, theta, width_from_bits(boc_params->iota));
    a.checks.push_back({"dsc_bits_le_boc_bits", cmp.dsc_bits, cmp.boc_bits, cmp.holds});
  }
  return a;
}

const SizeReport& header_report(const Analysis& a, Method m) {
  for (const auto& r : a.rows) {
    if (r.header && r.header->method == m) return *r.header;
  }
  throw InvalidArgumentError("analysis has no row for " + std::string(to_string(m)));
}

std::string render_analysis_csv(const Analysis& a) {
  std::ostringstream os;
  os << size_report_csv_header() << ",total_bytes,pct_of_table,pct_of_dense\n";
  for (const auto& r : a.rows) {
    if (r.header) {
      os << to_csv_row(*r.header);
    } else {
      os << csv_field(r.name) << ",,,,,,,,,";
    }
    os << ',' << r.total_bytes << ',' << fmt_double(r.pct_of_table, 3) << ',' << fmt_double(r.pct_of_dense, 3)
       << '\n';
  }
  os << "\nzeta_wide,zeta_narrow,iota,N,M_wide,M_narrow,benefit_bits,cost_bits,slope,inverse_iota,verdict\n";
  for (const auto& v : a.verdicts) {
    os << v.zeta_wide << ',' << v.zeta_narrow << ',' << v.iota << ',' << v.cells << ',' << v.jumps_wide << ','
       << v.jumps_narrow << ',' << v.benefit_bits << ',' << v.cost_bits << ',' << fmt_double(v.slope, 8) << ','
       << fmt_double(v.inverse_iota, 8) << ',' << to_string(v.decision) << '\n';
  }
  os << "\ncheck,lhs,rhs,holds\n";
  for (const auto& c : a.checks) {
    os << csv_field(c.name) << ',' << c.lhs << ',' << c.rhs << ',' << (c.holds ? "true" : "false") << '\n';
  }
  return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::vector<std::uint64_t>> draw_sample(const Store& ref, std::uint64_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (0x5bd1e995ULL * (size + 1)));
  const std::uint64_t n = ref.cell_count();
  std::vector<std::vector<std::uint64_t>> out;
  out.reserve(size);
  for (std::uint64_t i = 0; i < size; ++i) {
    const std::uint64_t p = rng() % n;
    out.push_back(ref.schema().delinearize(logical(ref.header(), p)));
  }
  return out;
}

template <typename Query>
std::pair<double, std::uint64_t> time_queries(const std::vector<std::vector<std::uint64_t>>& sample, Query&& query) {
  std::uint64_t found = 0;
  const auto t0 = Clock::now();
  for (const auto& coords : sample) found += query(coords).has_value();
  const std::chrono::duration<double> dt = Clock::now() - t0;
  return {dt.count(), found};
}

}  // namespace

std::vector<BenchRow> run_bench(std::span<const std::filesystem::path> stores, const std::filesystem::path& table,
                                std::span<const std::uint64_t> sample_sizes, std::uint64_t seed) {
  if (stores.empty()) throw InvalidArgumentError("bench needs at least one store");
  std::vector<Store> opened;
  for (const auto& p : stores) opened.push_back(Store::open(p));
  const TableStore tbl = TableStore::open(table);
  for (const auto& s : opened) {
    if (!(s.schema() == tbl.schema()) || s.cell_count() != tbl.record_count()) {
      throw FormatError("store and table describe different relations");
    }
  }
  if (opened.front().cell_count() == 0) throw EmptySequenceError("relation has no cells to sample");

  std::vector<BenchRow> rows;
  for (std::uint64_t size : sample_sizes) {
    const auto sample = draw_sample(opened.front(), size, seed);
    ProbeStats table_stats;
    const auto [table_s, table_found] =
        time_queries(sample, [&](const auto& c) { return tbl.point_query(c, &table_stats); });
    (void)table_found;
    for (std::size_t i = 0; i < opened.size(); ++i) {
      ProbeStats stats;
      const auto [array_s, found] =
          time_queries(sample, [&](const auto& c) { return opened[i].point_query(c, &stats); });
      BenchRow r;
      r.sample = size;
      r.representation = std::string(to_string(method_of(opened[i].header()))) + ":" + stores[i].filename().string();
      r.table_seconds = table_s;
      r.array_seconds = array_s;
      r.quotient = array_s > 0 ? table_s / array_s : 0.0;
      r.table_probes = table_stats.positioned_reads;
      r.array_probes = stats.positioned_reads;
      r.array_header_steps = stats.header_steps;
      r.found = found;
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

std::string bench_csv_header() {
  return "sample,representation,table_seconds,array_seconds,quotient,table_probes,array_probes,array_header_steps,"
         "found";
}

std::string to_csv_row(const BenchRow& r) {
  std::ostringstream os;
  os << r.sample << ',' << csv_field(r.representation) << ',' << fmt_double(r.table_seconds) << ','
     << fmt_double(r.array_seconds) << ',' << fmt_double(r.quotient, 3) << ',' << r.table_probes << ','
     << r.array_probes << ',' << r.array_header_steps << ',' << r.found;
  return os.str();
}

std::string tune_report(const Relation& rel, unsigned iota_bits) {
  if (rel.size() < 2) throw DegenerateDistributionError("tuning needs at least two cells");
  const Width iota = iota_bits ? width_from_bits(iota_bits) : smallest_width_for(rel.positions.back());
  const auto dist = empirical_cdf(rel.positions);
  std::ostringstream os;
  os << "cells: " << rel.size() << "\n";
  os << "gaps: " << dist.gap_count() << " (min " << dist.min_gap() << ", median " << dist.quantile(0.5) << ", p90 "
     << dist.quantile(0.9) << ", max " << dist.max_gap() << ")\n";
  os << "iota: " << bits(iota) << "\n";
  for (unsigned e : {8u, 16u, 32u}) {
    os << "F(2^" << e << "): " << fmt_double(dist.cdf_pow2(e)) << "\n";
  }
  os << "\ncandidates:\n" << size_report_csv_header() << "\n";
  const auto sel = select_dsc_width(rel.positions, iota);
  for (const auto& r : sel.candidates) os << to_csv_row(r) << "\n";
  os << "\nwidth changes:\n";
  for (auto [wide, narrow] : {std::pair{16u, 8u}, {32u, 16u}}) {
    const auto v = width_change_verdict(dist, wide, narrow, bits(iota), rel.size());
    os << wide << "->" << narrow << ": slope " << fmt_double(v.slope, 8) << (v.slope_condition ? " < " : " >= ")
       << "1/iota " << fmt_double(v.inverse_iota, 8) << "; benefit " << v.benefit_bits << " bits, cost "
       << v.cost_bits << " bits -> " << to_string(v.decision) << "\n";
  }
  os << "\nchosen s: " << bits(sel.best) << "\n";
  return os.str();
}

}  // namespace mdhc
