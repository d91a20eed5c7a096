#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace mdhc {

/// One dimension of the relation; a label's ordinal is its declaration index.
struct DimensionDecl {
  std::string name;
  std::vector<std::string> values;

  friend bool operator==(const DimensionDecl&, const DimensionDecl&) = default;
};

/// Dimension declarations plus the row-major linearization they induce
/// (first dimension slowest, last dimension stride 1).
class RelationSchema {
 public:
  /// Throws SchemaError on zero dimensions, an empty or duplicate-labelled
  /// dimension, or a logical space larger than 2^64 - 1 cells.
  RelationSchema(std::vector<DimensionDecl> dimensions, std::uint32_t payload_len);

  std::size_t arity() const noexcept { return dims_.size(); }
  const std::vector<DimensionDecl>& dimensions() const noexcept { return dims_; }
  const DimensionDecl& dimension(std::size_t k) const { return dims_.at(k); }
  std::uint64_t cardinality(std::size_t k) const { return dims_.at(k).values.size(); }
  std::span<const std::uint64_t> strides() const noexcept { return strides_; }
  std::uint32_t payload_len() const noexcept { return payload_len_; }
  /// Product of all cardinalities.
  std::uint64_t logical_size() const noexcept { return logical_size_; }

  /// Sum of coords[k] * strides[k].
  std::uint64_t linearize(std::span<const std::uint64_t> coords) const;
  std::vector<std::uint64_t> delinearize(std::uint64_t logical) const;

  /// Label -> ordinal; CoordinateRangeError for an unknown label.
  std::uint64_t ordinal(std::size_t dim, const std::string& label) const;
  std::vector<std::uint64_t> ordinals(std::span<const std::string> labels) const;

  /// Same dimensions with a different payload length.
  RelationSchema with_payload_len(std::uint32_t payload_len) const;

  /// `dims[k]` dimensions labelled "0".."dims[k]-1", named "d<k>".
  static RelationSchema numbered(std::span<const std::uint64_t> dims, std::uint32_t payload_len);

  friend bool operator==(const RelationSchema& a, const RelationSchema& b) {
    return a.dims_ == b.dims_ && a.payload_len_ == b.payload_len_;
  }

 private:
  std::vector<DimensionDecl> dims_;
  std::uint32_t payload_len_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t logical_size_ = 1;
  std::vector<std::unordered_map<std::string, std::uint64_t>> label_index_;
};

}  // namespace mdhc
