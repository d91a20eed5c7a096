#include "mdhc/schema.hpp"

#include <limits>

#include "mdhc/errors.hpp"

namespace mdhc {

RelationSchema::RelationSchema(std::vector<DimensionDecl> dimensions, std::uint32_t payload_len)
    : dims_(std::move(dimensions)), payload_len_(payload_len) {
  if (dims_.empty()) throw SchemaError("schema needs at least one dimension");
  if (dims_.size() > std::numeric_limits<std::uint16_t>::max()) throw SchemaError("too many dimensions");

  label_index_.resize(dims_.size());
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    const auto& d = dims_[k];
    if (d.values.empty()) throw SchemaError("dimension '" + d.name + "' has no values");
    if (d.values.size() > std::numeric_limits<std::uint32_t>::max()) {
      throw SchemaError("dimension '" + d.name + "' has more than 2^32-1 values");
    }
    auto& index = label_index_[k];
    index.reserve(d.values.size());
    for (std::size_t i = 0; i < d.values.size(); ++i) {
      if (!index.emplace(d.values[i], i).second) {
        throw SchemaError("duplicate label '" + d.values[i] + "' in dimension '" + d.name + "'");
      }
    }
  }

  strides_.assign(dims_.size(), 1);
  std::uint64_t product = 1;
  for (std::size_t k = dims_.size(); k-- > 0;) {
    strides_[k] = product;
    if (__builtin_mul_overflow(product, std::uint64_t{dims_[k].values.size()}, &product)) {
      throw SchemaError("logical space overflows 64 bits");
    }
  }
  logical_size_ = product;
}

std::uint64_t RelationSchema::linearize(std::span<const std::uint64_t> coords) const {
  if (coords.size() != dims_.size()) {
    throw SchemaMismatchError("expected " + std::to_string(dims_.size()) + " coordinates, got " +
                              std::to_string(coords.size()));
  }
  std::uint64_t pos = 0;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] >= dims_[k].values.size()) {
      throw CoordinateRangeError("ordinal " + std::to_string(coords[k]) + " out of range for dimension '" +
                                 dims_[k].name + "' (cardinality " + std::to_string(dims_[k].values.size()) + ")");
    }
    pos += coords[k] * strides_[k];
  }
  return pos;
}

std::vector<std::uint64_t> RelationSchema::delinearize(std::uint64_t logical) const {
  if (logical >= logical_size_) {
    throw CoordinateRangeError("logical position " + std::to_string(logical) + " outside space of " +
                               std::to_string(logical_size_) + " cells");
  }
  std::vector<std::uint64_t> coords(dims_.size());
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    coords[k] = logical / strides_[k];
    logical %= strides_[k];
  }
  return coords;
}

std::uint64_t RelationSchema::ordinal(std::size_t dim, const std::string& label) const {
  if (dim >= dims_.size()) throw SchemaMismatchError("dimension index out of range");
  auto it = label_index_[dim].find(label);
  if (it == label_index_[dim].end()) {
    throw CoordinateRangeError("unknown label '" + label + "' in dimension '" + dims_[dim].name + "'");
  }
  return it->second;
}

std::vector<std::uint64_t> RelationSchema::ordinals(std::span<const std::string> labels) const {
  if (labels.size() != dims_.size()) {
    throw SchemaMismatchError("expected " + std::to_string(dims_.size()) + " labels, got " +
                              std::to_string(labels.size()));
  }
  std::vector<std::uint64_t> out(labels.size());
  for (std::size_t k = 0; k < labels.size(); ++k) out[k] = ordinal(k, labels[k]);
  return out;
}

RelationSchema RelationSchema::with_payload_len(std::uint32_t payload_len) const {
  RelationSchema copy = *this;
  copy.payload_len_ = payload_len;
  return copy;
}

RelationSchema RelationSchema::numbered(std::span<const std::uint64_t> dims, std::uint32_t payload_len) {
  std::vector<DimensionDecl> decls;
  decls.reserve(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k) {
    DimensionDecl d{"d" + std::to_string(k), {}};
    d.values.reserve(dims[k]);
    for (std::uint64_t i = 0; i < dims[k]; ++i) d.values.push_back(std::to_string(i));
    decls.push_back(std::move(d));
  }
  return RelationSchema(std::move(decls), payload_len);
}

}  // namespace mdhc
