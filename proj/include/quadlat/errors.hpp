#pragma once

// Exception taxonomy for the quadlat library.  Every failure mode callers
// are expected to handle gets its own type rooted in quadlat::Error.

#include <stdexcept>
#include <string>

namespace quadlat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, JSON configs).
struct ParseError : Error {
  using Error::Error;
};

/// Binary operation on polynomials living on different lattices.
struct MixedLattice : Error {
  using Error::Error;
};

/// Divided difference requested at the lattice point where it is undefined.
struct SingularPoint : Error {
  using Error::Error;
};

/// A family used as an expansion basis is not graded monic.
struct NotGradedMonic : Error {
  using Error::Error;
};

/// An expansion expected to close after three consecutive terms does not.
struct NotThreeTerm : Error {
  using Error::Error;
};

/// Interpolation produced a polynomial that is not monic of the stated degree.
struct NotMonic : Error {
  using Error::Error;
};

/// Matrix inversion requested for a matrix that is not unit lower triangular.
struct NotUnitLowerTriangular : Error {
  using Error::Error;
};

/// Dimension/shape disagreement between operands.
struct SizeMismatch : Error {
  using Error::Error;
};

/// A truncated identity has an empty jointly-valid region.
struct TruncationTooSmall : Error {
  using Error::Error;
};

/// Interpolation nodes collide after the mu map.
struct NodesCollide : Error {
  using Error::Error;
};

/// Hypergeometric lower parameter hits a nonpositive integer inside the sum.
struct ParameterPole : Error {
  using Error::Error;
};

/// A spectral condition required for a unique monic solution fails.
struct DegenerateEigenvalues : Error {
  explicit DegenerateEigenvalues(int m)
      : Error("degenerate eigenvalues at index " + std::to_string(m)), index(m) {}
  int index;
};

/// A check kind was requested without the inputs it needs.
struct MissingInput : Error {
  using Error::Error;
};

}  // namespace quadlat
