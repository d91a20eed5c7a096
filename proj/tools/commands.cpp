#include "commands.hpp"

#include <filesystem>
#include <ostream>
#include <sstream>

#include "mdhc/errors.hpp"
#include "mdhc/header.hpp"
#include "mdhc/report.hpp"
#include "mdhc/size_tuner.hpp"
#include "mdhc/store.hpp"

namespace mdhc::cli {

namespace fs = std::filesystem;

namespace {

// Writes to `path`, or to `fallback` when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
  } else {
    write_text_file(path, text);
  }
}

HeaderParams to_params(const ParamFlags& f) { return {f.iota, f.theta, f.l, f.s, f.n}; }

}  // namespace

Relation load_source(const RelationSource& src) {
  const bool from_files = !src.schema_path.empty() || !src.cells_path.empty();
  const bool from_spec = !src.profile.empty();
  if (from_files == from_spec) throw InvalidArgumentError("give either --schema/--cells or --profile/--dims");
  if (from_files) {
    if (src.schema_path.empty() || src.cells_path.empty()) {
      throw InvalidArgumentError("--schema and --cells go together");
    }
    return load_relation(src.schema_path, src.cells_path);
  }
  WorkloadSpec spec;
  spec.profile = parse_profile(src.profile);
  spec.dims = src.dims;
  spec.density = src.density;
  spec.min_run = src.min_run;
  spec.seed = src.seed;
  spec.payload_len = src.payload_len;
  return generate(spec);
}

void cmd_gen(const RelationSource& src, const std::string& out_dir, std::ostream& log) {
  const Relation rel = load_source(src);
  fs::create_directories(out_dir);
  save_relation(rel, fs::path(out_dir) / "schema.txt", fs::path(out_dir) / "cells.tsv");
  log << "cells," << rel.size() << "\nlogical_size," << rel.schema.logical_size() << "\n";
}

void cmd_build(const RelationSource& src, Method method, const ParamFlags& flags, const std::string& out,
               const std::string& table_out, const std::string& csv_path, std::ostream& out_stream) {
  const Relation rel = load_source(src);
  const HeaderParams params = resolve_params(method, rel.positions, to_params(flags));
  const Header header = build_header(method, rel.positions, params);
  write_store(out, rel.schema, header, rel.payloads);
  if (!table_out.empty()) write_table(table_out, rel);
  emit(csv_path, size_report_csv_header() + "\n" + to_csv_row(size_report(header)) + "\n", out_stream);
}

void cmd_analyze(const RelationSource& src, unsigned iota, const std::string& csv_path, std::ostream& out_stream) {
  emit(csv_path, render_analysis_csv(analyze_relation(load_source(src), iota)), out_stream);
}

void cmd_bench(const std::vector<std::string>& stores, const std::string& table,
               const std::vector<std::uint64_t>& samples, std::uint64_t seed, const std::string& csv_path,
               std::ostream& out_stream) {
  const std::vector<fs::path> paths(stores.begin(), stores.end());
  std::ostringstream os;
  os << bench_csv_header() << "\n";
  for (const auto& r : run_bench(paths, table, samples, seed)) os << to_csv_row(r) << "\n";
  emit(csv_path, os.str(), out_stream);
}

void cmd_tune(const RelationSource& src, unsigned iota, std::ostream& out_stream) {
  out_stream << tune_report(load_source(src), iota);
}

void cmd_query(const std::string& path, const std::vector<std::string>& labels, std::ostream& out_stream) {
  std::optional<std::vector<std::uint8_t>> payload;
  if (detect_file_kind(path) == FileKind::kStore) {
    const Store st = Store::open(path);
    payload = st.point_query(st.schema().ordinals(labels));
  } else {
    const TableStore tbl = TableStore::open(path);
    payload = tbl.point_query(tbl.schema().ordinals(labels));
  }
  out_stream << (payload ? to_hex(*payload) : std::string("EMPTY")) << "\n";
}

}  // namespace mdhc::cli
