#pragma once

#include <stdexcept>
#include <string>

namespace cassonlin {

// Parse-level failures for braid words.
struct SyntaxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A generator index outside the valid range for the ambient object
// (braid generators 1..n-1, free-group generators 1..n).
struct IndexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The braid closure does not have exactly two components.
struct NotTwoComponents : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A quadruple fails the defining relation ab = cd beyond tolerance.
struct NotOnPillowcase : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A pillowcase corner: the configuration is reducible and the torus
// normalization is ambiguous there.
struct SingularPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Curve crossing too close to tangential to resolve a sign.
struct TangencyUnresolved : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Conjugation orbit through the point has rank below three.
struct ReduciblePoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No complement triple with independent df-images could be built.
struct DegenerateComplement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Frame vectors fail to span, or a change of basis is near singular.
struct DegenerateFrame : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A sign tuple other than the admissible one for the computation.
struct InvalidEpsilon : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cassonlin
