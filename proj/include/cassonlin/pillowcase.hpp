#pragma once

#include <array>
#include <vector>

#include "cassonlin/braid.hpp"
#include "cassonlin/quat.hpp"
#include "cassonlin/repspace.hpp"

// The pillowcase: quadruples (a,b,c,d) of traceless elements with ab = cd,
// up to conjugation.  The quotient is parametrized by a torus of angles
// (theta1, theta2) modulo the hyperelliptic involution negating both, with
// four singular corners where both angles lie in {0, pi}.

namespace cassonlin {

// Input quadruples must satisfy |ab - cd| below this.
inline constexpr double kPillowcaseTol = 1e-8;

double wrap_angle(double t);     // into [0, 2*pi)
double wrap_signed(double t);    // into (-pi, pi]

// A point of the torus cover, angles wrapped into [0, 2*pi).
class TorusLift {
 public:
  TorusLift() : t1_(0), t2_(0) {}
  TorusLift(double theta1, double theta2);

  double theta1() const { return t1_; }
  double theta2() const { return t2_; }

  TorusLift involution() const { return TorusLift(-t1_, -t2_); }
  bool is_corner(double tol = 1e-9) const;

 private:
  double t1_, t2_;
};

double torus_distance(const TorusLift& a, const TorusLift& b);

// A pillowcase point, stored through its canonical lift: theta1 in [0, pi],
// and theta2 in [0, pi] when theta1 sits on the boundary {0, pi}.
class PillowcasePoint {
 public:
  const TorusLift& lift() const { return lift_; }

 private:
  friend PillowcasePoint canonicalize(const TorusLift&);
  explicit PillowcasePoint(const TorusLift& l) : lift_(l) {}
  TorusLift lift_;
};

PillowcasePoint canonicalize(const TorusLift& t);

// Distance in the quotient: torus distance minimized over the involution.
double pillowcase_distance(const PillowcasePoint& a, const PillowcasePoint& b);

using Quadruple = std::array<TracelessElement, 4>;

// g(theta1, theta2) = (i, e^{k theta1} i, e^{k (theta2-theta1)} i, e^{k theta2} i);
// the product relation ab = cd holds identically.
Quadruple param_g(double theta1, double theta2);
Quadruple param_g(const TorusLift& t);

bool on_pillowcase(const Quadruple& q, double tol = kPillowcaseTol);

// Conjugates q into the normal position a = i with b, c, d on the
// (i, j)-circle and reads off a torus lift.  The result is one of the two
// involution-related lifts of the underlying pillowcase point.  Throws
// NotOnPillowcase when ab = cd fails or the normalized entries stray from
// the circle, and SingularPoint at the four corners, where the residual
// conjugation freedom cannot be pinned.
TorusLift normalize_quadruple(const Quadruple& q);

struct CurveSample {
  double theta;
  TorusLift lift;
  Quadruple quadruple;
};

// The diagonal curve (alpha(theta), alpha(theta)) with alpha(theta) =
// (i, e^{k theta} i); its lift is (theta, theta).
CurveSample delta_curve(double theta);

// The graph curve (alpha(theta), eps_sigma(alpha(theta))).  Entries land in
// normal position already, so the lift is read directly from the last
// entry.  Throws SingularPoint when the sample hits a corner.
CurveSample gamma_curve(const SignTuple& eps, const BraidAutomorphism& a, double theta);

struct ScanConfig {
  int resolution = 4096;            // samples of the graph curve over [0, 2*pi)
  double residual_tol = 1e-10;      // bisection target for the crossing equation
  double fixed_point_tol = 1e-8;    // accepted twisted-action residual at a crossing
  double transversality_tol = 1e-6; // minimum |det| of the two curve velocities
  double dedupe_tol = 1e-6;         // pillowcase distance identifying duplicates
  bool throw_on_tangency = true;    // false: flag candidates instead of throwing
};

struct IntersectionCandidate {
  double theta_delta;      // diagonal-curve parameter through the shared lift
  double theta_gamma;      // graph-curve parameter
  TorusLift lift;          // shared torus lift of the crossing
  PillowcasePoint point;   // canonical pillowcase point
  Quadruple quadruple;     // diagonal quadruple at the crossing
  double torus_det;        // det of the curve velocities in torus coordinates
  bool transverse;
};

// Scans the graph curve against the diagonal, bisects each sign change of
// the wrapped displacement theta2 - theta1, verifies every crossing is a
// fixed point of the twisted action, and deduplicates on the pillowcase.
// Results are sorted by theta_gamma.  Throws NotTwoComponents unless the
// braid closure has two components, and TangencyUnresolved for a crossing
// with |torus_det| below tolerance unless the config says to flag it.
std::vector<IntersectionCandidate> find_intersections(const SignTuple& eps,
                                                      const BraidWord& b,
                                                      const ScanConfig& config = {});

}  // namespace cassonlin
