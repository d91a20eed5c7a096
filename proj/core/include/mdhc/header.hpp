#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "mdhc/codecs.hpp"

namespace mdhc {

/// Any of the four position indexes.
using Header = std::variant<SchcHeader, LpcHeader, BocHeader, DscHeader>;

Method method_of(const Header& h);
PhysicalPos physical(const Header& h, std::uint64_t logical, ProbeStats* stats = nullptr);
std::uint64_t logical(const Header& h, std::uint64_t physical);
std::uint64_t cell_count(const Header& h);
std::uint64_t size_bits(const Header& h);
HeaderParams params_of(const Header& h);
HeaderCounts counts_of(const Header& h);

/// Header payload bytes exactly as stored on disk (no envelope).
std::vector<std::uint8_t> encode_payload(const Header& h);
Header decode_payload(ByteReader& in, Method m, const HeaderParams& params, const HeaderCounts& counts);

/// Builds with fully specified params (every field the method uses must be
/// set; InvalidArgumentError otherwise).
Header build_header(Method m, const LogicalPositionSeq& seq, const HeaderParams& params);

}  // namespace mdhc
