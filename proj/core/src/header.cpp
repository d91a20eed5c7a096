#include "mdhc/header.hpp"

#include "mdhc/errors.hpp"

namespace mdhc {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::kSchc: return "schc";
    case Method::kLpc: return "lpc";
    case Method::kBoc: return "boc";
    case Method::kDsc: return "dsc";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "schc") return Method::kSchc;
  if (name == "lpc") return Method::kLpc;
  if (name == "boc") return Method::kBoc;
  if (name == "dsc") return Method::kDsc;
  throw InvalidArgumentError("unknown method '" + std::string(name) + "'");
}

Method method_from_tag(unsigned tag) {
  if (tag < 1 || tag > 4) throw InvalidArgumentError("unknown header tag " + std::to_string(tag));
  return static_cast<Method>(tag);
}

Method method_of(const Header& h) {
  return std::visit([](const auto& x) { return std::decay_t<decltype(x)>::kMethod; }, h);
}

PhysicalPos physical(const Header& h, std::uint64_t logical, ProbeStats* stats) {
  return std::visit([&](const auto& x) { return x.physical(logical, stats); }, h);
}

std::uint64_t logical(const Header& h, std::uint64_t physical) {
  return std::visit([&](const auto& x) { return x.logical(physical); }, h);
}

std::uint64_t cell_count(const Header& h) {
  return std::visit([](const auto& x) { return x.cell_count(); }, h);
}

std::uint64_t size_bits(const Header& h) {
  return std::visit([](const auto& x) { return x.size_bits(); }, h);
}

HeaderParams params_of(const Header& h) {
  return std::visit([](const auto& x) { return x.params(); }, h);
}

HeaderCounts counts_of(const Header& h) {
  return std::visit([](const auto& x) { return x.counts(); }, h);
}

std::vector<std::uint8_t> encode_payload(const Header& h) {
  ByteWriter out;
  std::visit([&](const auto& x) { x.encode(out); }, h);
  return out.release();
}

Header decode_payload(ByteReader& in, Method m, const HeaderParams& params, const HeaderCounts& counts) {
  switch (m) {
    case Method::kSchc: return SchcHeader::decode(in, params, counts);
    case Method::kLpc: return LpcHeader::decode(in, params, counts);
    case Method::kBoc: return BocHeader::decode(in, params, counts);
    case Method::kDsc: return DscHeader::decode(in, params, counts);
  }
  throw FormatError("unknown header method");
}

Header build_header(Method m, const LogicalPositionSeq& seq, const HeaderParams& params) {
  const Width iota = width_from_bits(params.iota);
  switch (m) {
    case Method::kSchc: return SchcHeader::build(seq, iota);
    case Method::kLpc: return LpcHeader::build(seq, iota);
    case Method::kBoc: return BocHeader::build(seq, params.bucket_len, width_from_bits(params.theta), iota);
    case Method::kDsc: return DscHeader::build(seq, width_from_bits(params.diff), iota, params.stride);
  }
  throw InvalidArgumentError("unknown method");
}

}  // namespace mdhc
