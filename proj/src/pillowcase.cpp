#include "cassonlin/pillowcase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cassonlin/errors.hpp"

namespace cassonlin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double angle_to_boundary(double t) {
  // distance from t (wrapped) to the nearest of {0, pi, 2*pi}
  return std::min({std::abs(t), std::abs(t - kPi), std::abs(t - kTwoPi)});
}

}  // namespace

double wrap_angle(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double wrap_signed(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r > kPi) r -= kTwoPi;
  if (r <= -kPi) r += kTwoPi;
  return r;
}

TorusLift::TorusLift(double theta1, double theta2)
    : t1_(wrap_angle(theta1)), t2_(wrap_angle(theta2)) {}

bool TorusLift::is_corner(double tol) const {
  return angle_to_boundary(t1_) < tol && angle_to_boundary(t2_) < tol;
}

double torus_distance(const TorusLift& a, const TorusLift& b) {
  const double d1 = wrap_signed(a.theta1() - b.theta1());
  const double d2 = wrap_signed(a.theta2() - b.theta2());
  return std::hypot(d1, d2);
}

PillowcasePoint canonicalize(const TorusLift& t) {
  double t1 = t.theta1();
  double t2 = t.theta2();
  if (t1 > kPi) {
    t1 = wrap_angle(-t1);
    t2 = wrap_angle(-t2);
  } else if ((t1 == 0.0 || t1 == kPi) && t2 > kPi) {
    t2 = wrap_angle(-t2);
  }
  return PillowcasePoint(TorusLift(t1, t2));
}

double pillowcase_distance(const PillowcasePoint& a, const PillowcasePoint& b) {
  return std::min(torus_distance(a.lift(), b.lift()),
                  torus_distance(a.lift(), b.lift().involution()));
}

namespace {

TracelessElement circle_point(double t) {
  // e^{k t} i = cos(t) i + sin(t) j
  return TracelessElement(PureQuaternion(std::cos(t), std::sin(t), 0.0));
}

}  // namespace

Quadruple param_g(double theta1, double theta2) {
  return {TracelessElement::i(), circle_point(theta1), circle_point(theta2 - theta1),
          circle_point(theta2)};
}

Quadruple param_g(const TorusLift& t) { return param_g(t.theta1(), t.theta2()); }

bool on_pillowcase(const Quadruple& q, double tol) {
  const Quaternion ab = q[0].as_quat() * q[1].as_quat();
  const Quaternion cd = q[2].as_quat() * q[3].as_quat();
  return distance(ab, cd) <= tol;
}

TorusLift normalize_quadruple(const Quadruple& q) {
  if (!on_pillowcase(q))
    throw NotOnPillowcase("quadruple violates ab = cd beyond tolerance");

  // First conjugate the a-entry onto i.
  const Eigen::Vector3d av = q[0].axis();
  Quaternion g1 = Quaternion::identity();
  const double c = av.x();
  if (c < -1.0 + 1e-12) {
    g1 = TracelessElement::j().as_quat();  // half-turn about j sends -i to i
  } else if (c < 1.0 - 1e-15) {
    Eigen::Vector3d n = av.cross(Eigen::Vector3d::UnitX());
    const double s = n.norm();
    n /= s;
    const double phi = std::atan2(s, c);
    g1 = exp_pure(PureQuaternion(Eigen::Vector3d(n * (phi / 2))));
  }
  std::array<Quaternion, 4> w;
  for (int l = 0; l < 4; ++l) w[l] = conj_by(g1, q[l].as_quat());

  // The leftover freedom is rotation about the i-axis.  Pin it by rotating
  // b onto the (i, j)-circle, falling back to d when b stabilizes i; when
  // both do, the configuration is a corner.
  const auto jk_norm = [](const Quaternion& x) { return std::hypot(x.j(), x.k()); };
  constexpr double kBranchTol = 1e-6;
  double chi;
  if (jk_norm(w[1]) > kBranchTol)
    chi = std::atan2(w[1].k(), w[1].j());
  else if (jk_norm(w[3]) > kBranchTol)
    chi = std::atan2(w[3].k(), w[3].j());
  else
    throw SingularPoint("corner configuration: torus normalization is ambiguous");
  const Quaternion g2 = exp_pure(PureQuaternion::unit_i() * (-chi / 2));
  for (auto& x : w) x = conj_by(g2, x);

  const TorusLift lift(std::atan2(w[1].j(), w[1].i()), std::atan2(w[3].j(), w[3].i()));

  // The relation ab = cd forces the remaining entries onto the circle;
  // verify the normalized quadruple reproduces the parametrization.
  const Quadruple rebuilt = param_g(lift);
  constexpr double kVerifyTol = 1e-6;
  for (int l = 0; l < 4; ++l)
    if (distance(rebuilt[l].as_quat(), w[l]) > kVerifyTol)
      throw NotOnPillowcase("normalized quadruple strays from the parametrized torus");
  return lift;
}

CurveSample delta_curve(double theta) {
  const TracelessElement x = TracelessElement::i();
  const TracelessElement y = circle_point(theta);
  return CurveSample{theta, TorusLift(theta, theta), Quadruple{x, y, x, y}};
}

CurveSample gamma_curve(const SignTuple& eps, const BraidAutomorphism& a, double theta) {
  if (a.strand_count != 2 || eps.size() != 2)
    throw std::invalid_argument("graph curve needs 2-strand data");
  const RepTuple rho({TracelessElement::i(), circle_point(theta)});
  const RepTuple image = eps_sigma(eps, a, rho);
  const Quadruple quad{rho[0], rho[1], image[0], image[1]};
  if (!on_pillowcase(quad, 1e-10))
    throw NotOnPillowcase("graph sample violates ab = cd");

  // Words in circle elements of odd length stay on the circle, so the
  // sample is already in normal position and the lift is read directly.
  const auto& cq = quad[2];
  const auto& dq = quad[3];
  if (std::abs(cq.axis().z()) > 1e-9 || std::abs(dq.axis().z()) > 1e-9)
    throw NotOnPillowcase("graph sample leaves the parametrized torus");
  const TorusLift lift(theta, std::atan2(dq.axis().y(), dq.axis().x()));
  if (lift.is_corner())
    throw SingularPoint("graph curve meets a pillowcase corner");

  const Quadruple rebuilt = param_g(lift);
  for (int l = 0; l < 4; ++l)
    if (distance(rebuilt[l].as_quat(), quad[l].as_quat()) > 1e-9)
      throw NotOnPillowcase("graph sample inconsistent with its torus lift");
  return CurveSample{theta, lift, quad};
}

namespace {

struct DispSample {
  double value = 0.0;
  bool ok = false;
};

DispSample displacement(const SignTuple& eps, const BraidAutomorphism& aut, double theta) {
  DispSample out;
  try {
    const CurveSample s = gamma_curve(eps, aut, theta);
    out.value = wrap_signed(s.lift.theta2() - s.lift.theta1());
    out.ok = true;
  } catch (const SingularPoint&) {
    out.ok = false;
  }
  return out;
}

}  // namespace

std::vector<IntersectionCandidate> find_intersections(const SignTuple& eps, const BraidWord& b,
                                                      const ScanConfig& config) {
  if (b.strand_count() != 2)
    throw std::invalid_argument("intersection scan requires a 2-strand braid");
  if (closure_components(b).size() != 2)
    throw NotTwoComponents("intersection scan requires a 2-component closure");
  const BraidAutomorphism aut = artin_action(b);

  const int n = config.resolution;
  if (n < 8) throw std::invalid_argument("scan resolution too small");
  std::vector<DispSample> disp(n);
  for (int s = 0; s < n; ++s) disp[s] = displacement(eps, aut, kTwoPi * s / n);

  std::vector<double> roots;
  const auto refine = [&](double lo, double hi, double flo) -> void {
    // Bisection on the sign of the wrapped displacement.  A sign change can
    // also be a branch jump; those converge to |disp| near pi and are
    // rejected afterwards.
    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
      mid = 0.5 * (lo + hi);
      const DispSample fm = displacement(eps, aut, mid);
      if (!fm.ok) return;
      if (std::abs(fm.value) < config.residual_tol) break;
      if ((fm.value < 0) == (flo < 0)) {
        lo = mid;
        flo = fm.value;
      } else {
        hi = mid;
      }
    }
    const DispSample ff = displacement(eps, aut, mid);
    if (ff.ok && std::abs(ff.value) < std::max(config.residual_tol, 1e-9))
      roots.push_back(mid);
  };

  for (int s = 0; s < n; ++s) {
    const int s2 = (s + 1) % n;
    if (!disp[s].ok || !disp[s2].ok) continue;
    const double lo = kTwoPi * s / n;
    const double hi = kTwoPi * (s + 1) / n;
    if (std::abs(disp[s].value) < config.residual_tol)
      roots.push_back(lo);
    else if ((disp[s].value < 0) != (disp[s2].value < 0))
      refine(lo, hi, disp[s].value);
  }

  std::sort(roots.begin(), roots.end());
  std::vector<IntersectionCandidate> out;
  for (double theta : roots) {
    const CurveSample diag = delta_curve(theta);
    const RepTuple rho({diag.quadruple[0], diag.quadruple[1]});
    if (fixed_point_residual(eps, aut, rho) > config.fixed_point_tol) continue;

    // Velocities in torus coordinates: the diagonal moves by (1, 1) and the
    // graph by (1, theta2'), so the crossing determinant is theta2' - 1,
    // the derivative of the displacement.
    const double h = 1e-6;
    const DispSample fp = displacement(eps, aut, theta + h);
    const DispSample fm = displacement(eps, aut, theta - h);
    if (!fp.ok || !fm.ok) continue;
    const double torus_det = wrap_signed(fp.value - fm.value) / (2 * h);
    const bool transverse = std::abs(torus_det) > config.transversality_tol;
    if (!transverse && config.throw_on_tangency)
      throw TangencyUnresolved("curve crossing is tangential within tolerance");

    IntersectionCandidate cand{theta,
                               theta,
                               diag.lift,
                               canonicalize(diag.lift),
                               diag.quadruple,
                               torus_det,
                               transverse};
    bool duplicate = false;
    for (const auto& prev : out)
      if (pillowcase_distance(prev.point, cand.point) < config.dedupe_tol) {
        duplicate = true;
        break;
      }
    if (!duplicate) out.push_back(std::move(cand));
  }
  return out;
}

}  // namespace cassonlin
