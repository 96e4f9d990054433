#pragma once

#include <Eigen/Dense>

#include <array>
#include <utility>
#include <vector>

#include "cassonlin/pillowcase.hpp"
#include "cassonlin/quat.hpp"

namespace cassonlin {

// Smallest |det| accepted in a change of basis before the frames are
// declared degenerate.
inline constexpr double kFrameDetTol = 1e-6;
// Largest least-squares residual, relative to the vector size, accepted
// when expressing one frame in another.
inline constexpr double kProjectionTol = 1e-8;

// Tangent vector to the product of four 2-spheres: one pure quaternion per
// slot.  Each part should be orthogonal to its base point, but the class
// does not know the base and cannot check; callers keep that invariant.
class TangentVector4 {
 public:
  TangentVector4() = default;
  TangentVector4(const PureQuaternion& a, const PureQuaternion& b, const PureQuaternion& c,
                 const PureQuaternion& d)
      : parts_{a, b, c, d} {}

  const PureQuaternion& part(int slot) const { return parts_.at(static_cast<size_t>(slot)); }

  // Slot-major coordinates: (a_i, a_j, a_k, b_i, ..., d_k).
  Eigen::Matrix<double, 12, 1> flatten() const {
    Eigen::Matrix<double, 12, 1> out;
    for (int s = 0; s < 4; ++s) out.segment<3>(3 * s) = parts_[static_cast<size_t>(s)].vec();
    return out;
  }

  static TangentVector4 from_flat(const Eigen::Matrix<double, 12, 1>& x) {
    return TangentVector4(PureQuaternion(Eigen::Vector3d(x.segment<3>(0))),
                          PureQuaternion(Eigen::Vector3d(x.segment<3>(3))),
                          PureQuaternion(Eigen::Vector3d(x.segment<3>(6))),
                          PureQuaternion(Eigen::Vector3d(x.segment<3>(9))));
  }

  TangentVector4 operator+(const TangentVector4& o) const {
    return from_flat(flatten() + o.flatten());
  }
  TangentVector4 operator-(const TangentVector4& o) const {
    return from_flat(flatten() - o.flatten());
  }
  TangentVector4 operator*(double s) const { return from_flat(flatten() * s); }

 private:
  std::array<PureQuaternion, 4> parts_{};
};

inline TangentVector4 operator*(double s, const TangentVector4& v) { return v * s; }

// Ordered list of vectors, stored as matrix columns.  Rows are 12 for
// quadruple tangents and 3 for pure quaternions.
class Frame {
 public:
  explicit Frame(Eigen::MatrixXd columns);
  explicit Frame(const std::vector<TangentVector4>& vectors);
  explicit Frame(const std::vector<PureQuaternion>& vectors);

  const Eigen::MatrixXd& cols() const { return cols_; }
  int size() const { return static_cast<int>(cols_.cols()); }
  int dimension() const { return static_cast<int>(cols_.rows()); }

 private:
  Eigen::MatrixXd cols_;
};

// Derivative of (a, b, c, d) -> a b (c d)^{-1} at a quadruple of unit
// quaternions, evaluated on a tangent vector.  On the pillowcase locus the
// value is a pure quaternion.
PureQuaternion df(const Quadruple& base, const TangentVector4& v);

// Coordinate frame of the parametrized torus: the partial derivatives
// (u1, u2) of param_g.  Throws SingularPoint at corners, where the
// quotient is not a manifold.
std::pair<TangentVector4, TangentVector4> pillowcase_frame(const TorusLift& t);

// Conjugation-orbit directions v_q at the base point, one for each of
// q = i, j, k, each slot moving by half the commutator.  Throws
// ReduciblePoint when they fail to span three dimensions.
std::array<TangentVector4, 3> orbit_frame(const Quadruple& base);

// Three directions transverse to both the relation kernel and the orbit,
// chosen so df maps them to a positively oriented basis of the pure
// quaternions.  At (i, j, i, j) this is the fixed golden triple; elsewhere
// the columns of product_orientation_basis are filtered by pivoted QR on
// their df-images.  Throws DegenerateComplement when no such triple exists.
std::array<TangentVector4, 3> complement_frame(const Quadruple& base);

// Reference orientation of the quadruple space at the base point: per slot
// an ordered tangent pair (e1, e2) with e2 = p x e1, assembled slot-major
// into a 12x8 frame.  e1 is the coordinate axis following the slot's
// dominant one, projected to the tangent plane.
Frame product_orientation_basis(const Quadruple& base);

// Coordinates C of `test` in `reference`, i.e. the least-squares solution
// of reference * C = test.  Throws DegenerateFrame when the residual shows
// `test` does not lie in the span of `reference`.
Eigen::MatrixXd frame_coordinates(const Frame& test, const Frame& reference);

// Sign of det(frame_coordinates).  Frames must have equal size; throws
// DegenerateFrame when |det| < kFrameDetTol.
int orientation_sign(const Frame& test, const Frame& reference);

// Exact determinant of an integer matrix (fraction-free Bareiss).
long long integer_determinant(Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> m);

// Whether the oriented pillowcase basis at t is (u2, u1) rather than
// (u1, u2): true when (orbit, complement, torus) frames are negatively
// oriented against the product orientation.
bool pillowcase_orientation_swapped(const TorusLift& t);

// Ordered torus basis carrying the quotient orientation at t.
std::pair<TangentVector4, TangentVector4> oriented_pillowcase_basis(const TorusLift& t);

}  // namespace cassonlin
