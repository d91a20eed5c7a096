#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "mdhc/errors.hpp"

namespace {

void add_source_flags(CLI::App* cmd, mdhc::cli::RelationSource& src) {
  cmd->add_option("--schema", src.schema_path, "Schema text file (name:label,label per line)");
  cmd->add_option("--cells", src.cells_path, "Cell file (tab-separated labels + hex payload)");
  cmd->add_option("--profile", src.profile, "Synthetic profile: singleton, longrun or uniform");
  cmd->add_option("--dims", src.dims, "Dimension cardinalities, e.g. 100,1000")->delimiter(',');
  cmd->add_option("--density", src.density, "Fraction of nonempty cells")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--min-run", src.min_run, "Minimum run length for the longrun profile");
  cmd->add_option("--payload-len", src.payload_len, "Payload bytes per cell");
  cmd->add_option("--seed", src.seed, "Generator seed");
}

void add_iota_flag(CLI::App* cmd, unsigned& iota) {
  cmd->add_option("--iota", iota, "Logical position width in bits (0 = smallest that fits)")
      ->check(CLI::IsMember({0u, 8u, 16u, 32u, 64u}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Header compression for multidimensional arrays"};
  app.require_subcommand(1);

  mdhc::cli::RelationSource src;
  mdhc::cli::ParamFlags flags;
  std::string out, table_out, csv, method_name = "dsc", store_path;
  std::vector<std::string> stores, labels;
  std::vector<std::uint64_t> samples{100, 500, 1000, 5000, 10000};
  std::uint64_t bench_seed = 1;
  unsigned iota = 0;

  auto* gen = app.add_subcommand("gen", "Generate a synthetic relation as schema.txt + cells.tsv");
  add_source_flags(gen, src);
  gen->add_option("--out", out, "Output directory")->required();

  auto* build = app.add_subcommand("build", "Build a store file and print its size report");
  add_source_flags(build, src);
  build->add_option("--method", method_name, "schc, lpc, boc or dsc")
      ->check(CLI::IsMember({"schc", "lpc", "boc", "dsc"}));
  build->add_option("--iota", flags.iota, "Logical position width in bits (0 = auto)")
      ->check(CLI::IsMember({0u, 8u, 16u, 32u, 64u}));
  build->add_option("--theta", flags.theta, "BOC offset width in bits (0 = auto)")
      ->check(CLI::IsMember({0u, 8u, 16u, 32u, 64u}));
  build->add_option("--l", flags.l, "BOC bucket length (0 = auto)");
  build->add_option("--s", flags.s, "DSC difference width in bits (0 = auto)")
      ->check(CLI::IsMember({0u, 8u, 16u, 32u}));
  build->add_option("--n", flags.n, "DSC accelerator stride (0 = 16)")->check(CLI::Range(0u, 65535u));
  build->add_option("--out", out, "Store file to write")->required();
  build->add_option("--table", table_out, "Also write the table baseline here");
  build->add_option("--csv", csv, "Write the size report here instead of stdout");

  auto* analyze = app.add_subcommand("analyze", "Size analysis of all four headers");
  add_source_flags(analyze, src);
  add_iota_flag(analyze, iota);
  analyze->add_option("--csv", csv, "Write CSV here instead of stdout");

  auto* bench = app.add_subcommand("bench", "Point-query timing against the table baseline");
  bench->add_option("--store", stores, "Store file (repeatable)")->required();
  bench->add_option("--table", table_out, "Table baseline file")->required();
  bench->add_option("--samples", samples, "Sample sizes, e.g. 100,500,1000")->delimiter(',');
  bench->add_option("--seed", bench_seed, "Sampling seed");
  bench->add_option("--csv", csv, "Write CSV here instead of stdout");

  auto* tune = app.add_subcommand("tune", "Difference-width tuning report");
  add_source_flags(tune, src);
  add_iota_flag(tune, iota);

  auto* query = app.add_subcommand("query", "Look up one cell by its labels");
  query->add_option("path", store_path, "Store or table file")->required();
  query->add_option("labels", labels, "One label per dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    namespace cli = mdhc::cli;
    if (*gen) cli::cmd_gen(src, out, std::cout);
    if (*build) cli::cmd_build(src, mdhc::parse_method(method_name), flags, out, table_out, csv, std::cout);
    if (*analyze) cli::cmd_analyze(src, iota, csv, std::cout);
    if (*bench) cli::cmd_bench(stores, table_out, samples, bench_seed, csv, std::cout);
    if (*tune) cli::cmd_tune(src, iota, std::cout);
    if (*query) cli::cmd_query(store_path, labels, std::cout);
  } catch (const mdhc::InvalidArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const mdhc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
