#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

// Quaternion algebra over a templated scalar, with SU(2) realized as the
// unit quaternions and su(2) as the purely imaginary ones.  Coefficients
// are kept in Eigen vectors so frames and projections elsewhere can reuse
// them without copying through ad hoc structs.

namespace cassonlin {

// Constructors of unit-norm types renormalize inputs within this tolerance
// of the unit sphere and reject anything farther away.
inline constexpr double kUnitTol = 1e-9;

template <class Scalar>
class Quat;

// Purely imaginary quaternion yi + zj + wk, stored as its (i, j, k) triple.
template <class Scalar>
class PureQuat {
 public:
  using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

  PureQuat() : v_(Vec3::Zero()) {}
  PureQuat(Scalar i, Scalar j, Scalar k) : v_(i, j, k) {}
  explicit PureQuat(const Vec3& v) : v_(v) {}

  static PureQuat unit_i() { return PureQuat(Scalar(1), Scalar(0), Scalar(0)); }
  static PureQuat unit_j() { return PureQuat(Scalar(0), Scalar(1), Scalar(0)); }
  static PureQuat unit_k() { return PureQuat(Scalar(0), Scalar(0), Scalar(1)); }

  Scalar i() const { return v_.x(); }
  Scalar j() const { return v_.y(); }
  Scalar k() const { return v_.z(); }
  const Vec3& vec() const { return v_; }

  Scalar squaredNorm() const { return v_.squaredNorm(); }
  Scalar norm() const { return v_.norm(); }

  Quat<Scalar> as_quat() const;

  PureQuat operator+(const PureQuat& o) const { return PureQuat(Vec3(v_ + o.v_)); }
  PureQuat operator-(const PureQuat& o) const { return PureQuat(Vec3(v_ - o.v_)); }
  PureQuat operator-() const { return PureQuat(Vec3(-v_)); }
  PureQuat operator*(Scalar s) const { return PureQuat(Vec3(v_ * s)); }
  friend PureQuat operator*(Scalar s, const PureQuat& p) { return p * s; }

 private:
  Vec3 v_;
};

// General quaternion x + yi + zj + wk.  re() is the scalar part.
template <class Scalar>
class Quat {
 public:
  using Vec4 = Eigen::Matrix<Scalar, 4, 1>;

  Quat() : c_(Scalar(1), Scalar(0), Scalar(0), Scalar(0)) {}
  Quat(Scalar re, Scalar i, Scalar j, Scalar k) : c_(re, i, j, k) {}
  explicit Quat(const Vec4& c) : c_(c) {}

  static Quat identity() { return Quat(); }

  Scalar re() const { return c_(0); }
  Scalar i() const { return c_(1); }
  Scalar j() const { return c_(2); }
  Scalar k() const { return c_(3); }
  const Vec4& coeffs() const { return c_; }

  PureQuat<Scalar> imag() const { return PureQuat<Scalar>(c_(1), c_(2), c_(3)); }

  Scalar squaredNorm() const { return c_.squaredNorm(); }
  Scalar norm() const { return c_.norm(); }

  Quat conjugate() const { return Quat(c_(0), -c_(1), -c_(2), -c_(3)); }

  Quat inverse() const {
    const Scalar n2 = squaredNorm();
    if (n2 == Scalar(0)) throw std::domain_error("inverse of zero quaternion");
    return Quat(Vec4(conjugate().c_ / n2));
  }

  Quat normalized() const {
    const Scalar n = norm();
    if (n == Scalar(0)) throw std::domain_error("normalizing zero quaternion");
    return Quat(Vec4(c_ / n));
  }

  // Hamilton product: ij = k, jk = i, ki = j.
  Quat operator*(const Quat& o) const {
    const Scalar a = c_(0), b = c_(1), c = c_(2), d = c_(3);
    const Scalar e = o.c_(0), f = o.c_(1), g = o.c_(2), h = o.c_(3);
    return Quat(a * e - b * f - c * g - d * h,
                a * f + b * e + c * h - d * g,
                a * g - b * h + c * e + d * f,
                a * h + b * g - c * f + d * e);
  }

  Quat operator+(const Quat& o) const { return Quat(Vec4(c_ + o.c_)); }
  Quat operator-(const Quat& o) const { return Quat(Vec4(c_ - o.c_)); }
  Quat operator-() const { return Quat(Vec4(-c_)); }
  Quat operator*(Scalar s) const { return Quat(Vec4(c_ * s)); }
  friend Quat operator*(Scalar s, const Quat& q) { return q * s; }

 private:
  Vec4 c_;
};

template <class Scalar>
Quat<Scalar> PureQuat<Scalar>::as_quat() const {
  return Quat<Scalar>(Scalar(0), v_.x(), v_.y(), v_.z());
}

// Traceless element: a purely imaginary unit quaternion, i.e. a point of
// the 2-sphere of trace-free SU(2) conjugacy class representatives.  The
// real part is exactly zero by construction and the axis is kept unit.
template <class Scalar>
class Traceless {
 public:
  using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

  explicit Traceless(const PureQuat<Scalar>& p) : axis_(p.vec()) {
    const Scalar n = axis_.norm();
    if (std::abs(n - Scalar(1)) >= kUnitTol)
      throw std::invalid_argument("traceless element requires unit norm");
    axis_ /= n;
  }

  static Traceless from(const Quat<Scalar>& q) {
    if (std::abs(q.re()) >= kUnitTol)
      throw std::invalid_argument("traceless element requires zero real part");
    return Traceless(q.imag());
  }

  static Traceless i() { return Traceless(PureQuat<Scalar>::unit_i()); }
  static Traceless j() { return Traceless(PureQuat<Scalar>::unit_j()); }
  static Traceless k() { return Traceless(PureQuat<Scalar>::unit_k()); }

  const Vec3& axis() const { return axis_; }
  PureQuat<Scalar> pure() const { return PureQuat<Scalar>(axis_); }
  operator Quat<Scalar>() const { return pure().as_quat(); }
  Quat<Scalar> as_quat() const { return pure().as_quat(); }

 private:
  Vec3 axis_;
};

// exp of a purely imaginary quaternion: cos|v| + sin|v| v/|v|, with the
// removable singularity at v = 0 filled by the sinc series.
template <class Scalar>
Quat<Scalar> exp_pure(const PureQuat<Scalar>& v) {
  const Scalar t = v.norm();
  Scalar sinc;
  if (t < Scalar(1e-4)) {
    const Scalar t2 = t * t;
    sinc = Scalar(1) - t2 / Scalar(6) + t2 * t2 / Scalar(120);
  } else {
    sinc = std::sin(t) / t;
  }
  return Quat<Scalar>(std::cos(t), sinc * v.i(), sinc * v.j(), sinc * v.k());
}

// g x g^{-1} for unit g.
template <class Scalar>
Quat<Scalar> conj_by(const Quat<Scalar>& g, const Quat<Scalar>& x) {
  return (g * x) * g.inverse();
}

template <class Scalar>
Traceless<Scalar> conj_by(const Quat<Scalar>& g, const Traceless<Scalar>& x) {
  return Traceless<Scalar>::from(conj_by(g, x.as_quat()));
}

// Half commutator (qx - xq)/2.  This is the velocity at t = 0 of the
// rotation flow exp(tq) x exp(-tq) run at half angular speed, which is the
// normalization used for conjugation-orbit tangent vectors throughout.
template <class Scalar>
PureQuat<Scalar> half_commutator(const PureQuat<Scalar>& q, const Quat<Scalar>& x) {
  const Quat<Scalar> qq = q.as_quat();
  return ((qq * x - x * qq) * Scalar(0.5)).imag();
}

template <class Scalar>
Scalar distance(const Quat<Scalar>& a, const Quat<Scalar>& b) {
  return (a - b).norm();
}

using Quaternion = Quat<double>;
using PureQuaternion = PureQuat<double>;
using TracelessElement = Traceless<double>;

}  // namespace cassonlin
