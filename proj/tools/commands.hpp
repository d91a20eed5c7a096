#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mdhc/method.hpp"
#include "mdhc/relation.hpp"
#include "mdhc/workload.hpp"

namespace mdhc::cli {

/// Where a command's relation comes from: text files or a synthetic spec.
struct RelationSource {
  std::string schema_path;
  std::string cells_path;
  std::string profile;
  std::vector<std::uint64_t> dims;
  double density = 0.1;
  std::uint64_t min_run = 17;
  std::uint64_t seed = 1;
  std::uint32_t payload_len = 8;
};

/// Header parameters as given on the command line; zero means auto.
struct ParamFlags {
  unsigned iota = 0;
  unsigned theta = 0;
  std::uint32_t l = 0;
  unsigned s = 0;
  std::uint32_t n = 0;
};

Relation load_source(const RelationSource& src);

void cmd_gen(const RelationSource& src, const std::string& out_dir, std::ostream& log);
void cmd_build(const RelationSource& src, Method method, const ParamFlags& flags, const std::string& out,
               const std::string& table_out, const std::string& csv_path, std::ostream& out_stream);
void cmd_analyze(const RelationSource& src, unsigned iota, const std::string& csv_path, std::ostream& out_stream);
void cmd_bench(const std::vector<std::string>& stores, const std::string& table,
               const std::vector<std::uint64_t>& samples, std::uint64_t seed, const std::string& csv_path,
               std::ostream& out_stream);
void cmd_tune(const RelationSource& src, unsigned iota, std::ostream& out_stream);
void cmd_query(const std::string& path, const std::vector<std::string>& labels, std::ostream& out_stream);

}  // namespace mdhc::cli
