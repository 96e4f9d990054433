#pragma once

#include <string>
#include <vector>

#include "cassonlin/braid.hpp"
#include "cassonlin/orientation.hpp"
#include "cassonlin/pillowcase.hpp"
#include "cassonlin/repspace.hpp"

// The Casson-Lin invariant h2 of a 2-component link presented as the
// closure of a 2-strand braid: the signed count of intersections between
// the diagonal curve and the twisted-action graph curve on the pillowcase.

namespace cassonlin {

// The sign tuple making the twisted action suitable for counting; only two
// strands are supported, where (-1, -1) works.  Throws InvalidEpsilon for
// any other strand count.
SignTuple admissible_epsilon(int strand_count);

// Velocity of the diagonal curve at theta.
TangentVector4 delta_velocity(double theta);

// Velocity of the graph curve at theta, by the product rule through the
// twisted action of the automorphism.
TangentVector4 gamma_velocity(const SignTuple& eps, const BraidAutomorphism& a, double theta);

// Coordinates of a tangent vector in the five directions (u1, u2, v1, v2,
// v3) spanning the pillowcase-locus tangent space at the lift.  Throws
// DegenerateFrame when the vector leaves their span.
Eigen::Matrix<double, 5, 1> velocity_in_pillowcase_frame(const TorusLift& t,
                                                         const TangentVector4& v);

// Sign of a transverse crossing: the determinant of the (delta, gamma)
// velocity coordinates in the oriented pillowcase basis at the crossing.
// Throws TangencyUnresolved when that determinant is below kFrameDetTol.
int intersection_sign(const SignTuple& eps, const BraidAutomorphism& a,
                      const IntersectionCandidate& c);

struct IntersectionDatum {
  double theta_delta = 0;
  double theta_gamma = 0;
  TorusLift lift;
  int sign = 0;  // 0 when the crossing could not be resolved
  bool transverse = false;
};

struct CassonLinResult {
  std::string braid;
  std::vector<int> epsilon;
  std::vector<IntersectionDatum> intersections;
  int h2 = 0;             // signed crossing count; meaningful when complete
  int lk = 0;             // linking number of the closure
  bool agrees = false;    // complete and h2 == -lk
  bool complete = false;  // every crossing was transverse and resolved
};

// Runs the full pipeline: scan for crossings, orient, sign, sum.  Crossings
// that fail transversality are reported with sign 0 and leave the result
// incomplete rather than throwing.  Throws NotTwoComponents unless the
// closure has two components.
CassonLinResult casson_lin_h2(const BraidWord& b, const ScanConfig& config = {});
CassonLinResult casson_lin_h2(const BraidWord& b, const SignTuple& eps,
                              const ScanConfig& config = {});

// One stage of the Hopf-link audit.
struct TraceEntry {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct HopfTrace {
  std::vector<TraceEntry> entries;
  bool all_pass = false;
};

// Recomputes the Hopf-link crossing stage by stage against pinned values:
// the action of s1^2, its fixed point at (i, j), the lift (pi/2, pi/2),
// the torus, orbit, and complement frames, the integer change-of-basis
// matrix with determinant -1, the curve velocities, the crossing matrix
// [[1, 3], [1, 1]], and finally h2 = -1 against lk = 1.
HopfTrace verify_hopf();

}  // namespace cassonlin
