#pragma once

#include <stdexcept>
#include <string>

namespace mdhc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed schema declaration (duplicate labels, zero cardinality, overflow).
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Coordinate tuple does not match the schema's arity.
class SchemaMismatchError : public Error {
 public:
  using Error::Error;
};

/// Ordinal, label or logical position outside the declared space.
class CoordinateRangeError : public Error {
 public:
  using Error::Error;
};

/// Physical position outside [0, N).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A value does not fit the requested element width.
class WidthOverflowError : public Error {
 public:
  using Error::Error;
};

/// A base-offset bucket spans more than the offset width can hold.
class OffsetOverflowError : public Error {
 public:
  using Error::Error;
};

/// A header was requested for a sequence with no elements.
class EmptySequenceError : public Error {
 public:
  using Error::Error;
};

/// Bad parameter value (unsupported width, zero stride, unknown method...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// Gap distribution needs at least two positions.
class DegenerateDistributionError : public Error {
 public:
  using Error::Error;
};

/// Unrecognised magic, version or tag in a file, or malformed text input.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Structurally recognised file whose contents are truncated or inconsistent.
class CorruptionError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Workload parameters that cannot be satisfied.
class SpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace mdhc
