#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdhc/relation.hpp"
#include "mdhc/size_tuner.hpp"

namespace mdhc {

/// RFC-4180 field quoting (only when needed).
std::string csv_field(std::string_view s);

/// One line of the size analysis: a header method or the raw table.
struct AnalysisRow {
  std::string name;             // "table", "schc", "lpc", "boc", "dsc"
  std::optional<SizeReport> header;
  std::uint64_t total_bytes = 0;  // whole file image
  double pct_of_table = 0;        // total_bytes / table bytes
  double pct_of_dense = 0;        // total_bytes / (logical cells * payload_len)
};

struct NamedCheck {
  std::string name;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool holds = false;  // lhs <= rhs
};

struct Analysis {
  std::vector<AnalysisRow> rows;
  std::vector<WidthVerdict> verdicts;
  std::vector<NamedCheck> checks;
};

/// Builds all four headers with resolved parameters (`iota_bits` = 0 means
/// auto) and measures every store image.
Analysis analyze_relation(const Relation& rel, unsigned iota_bits = 0);
const SizeReport& header_report(const Analysis& a, Method m);

/// Three CSV blocks separated by blank lines: sizes, width verdicts, checks.
std::string render_analysis_csv(const Analysis& a);

/// Point-query timing for one sample size and one representation against
/// the table baseline. Probe columns count positioned reads (file I/O);
/// header steps are the in-memory comparisons and walk steps.
struct BenchRow {
  std::uint64_t sample = 0;
  std::string representation;
  double table_seconds = 0;
  double array_seconds = 0;
  double quotient = 0;  // table_seconds / array_seconds
  std::uint64_t table_probes = 0;
  std::uint64_t array_probes = 0;
  std::uint64_t array_header_steps = 0;
  std::uint64_t found = 0;
};

/// Draws the same uniform sample of nonempty cells (with replacement) for
/// every store and times point queries, stores one after another.
std::vector<BenchRow> run_bench(std::span<const std::filesystem::path> stores, const std::filesystem::path& table,
                                std::span<const std::uint64_t> sample_sizes, std::uint64_t seed);

std::string bench_csv_header();
std::string to_csv_row(const BenchRow& r);

/// Human-readable width tuning report.
std::string tune_report(const Relation& rel, unsigned iota_bits = 0);

}  // namespace mdhc
