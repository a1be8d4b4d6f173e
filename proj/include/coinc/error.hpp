#pragma once

#include <stdexcept>
#include <string>

namespace coinc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad indices, dimension mismatches, invalid partitions.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size limit (lattice, group, complex) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Geometric diagnostics: a point on the coincidence structure, a path
/// collision, or a general-position violation.
class GeometryDiagnostic : public Error {
 public:
  using Error::Error;
};

class BoundaryError : public GeometryDiagnostic {
 public:
  using GeometryDiagnostic::GeometryDiagnostic;
};

class CollisionError : public GeometryDiagnostic {
 public:
  using GeometryDiagnostic::GeometryDiagnostic;
};

class GeneralPositionError : public GeometryDiagnostic {
 public:
  using GeometryDiagnostic::GeometryDiagnostic;
};

}  // namespace coinc
