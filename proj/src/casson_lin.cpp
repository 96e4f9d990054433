#include "cassonlin/casson_lin.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

#include "cassonlin/errors.hpp"

namespace cassonlin {

SignTuple admissible_epsilon(int strand_count) {
  if (strand_count != 2)
    throw InvalidEpsilon("admissible sign tuple implemented for two strands only");
  return SignTuple({-1, -1});
}

namespace {

PureQuaternion circle_tangent(double theta) {
  // d/dtheta of e^{k theta} i
  return PureQuaternion(-std::sin(theta), std::cos(theta), 0.0);
}

TracelessElement circle_point(double theta) {
  return TracelessElement(PureQuaternion(std::cos(theta), std::sin(theta), 0.0));
}

}  // namespace

TangentVector4 delta_velocity(double theta) {
  const PureQuaternion zero;
  const PureQuaternion v = circle_tangent(theta);
  return TangentVector4(zero, v, zero, v);
}

TangentVector4 gamma_velocity(const SignTuple& eps, const BraidAutomorphism& a, double theta) {
  if (a.strand_count != 2 || eps.size() != 2)
    throw std::invalid_argument("graph velocity needs 2-strand data");
  const RepTuple rho({TracelessElement::i(), circle_point(theta)});
  const std::vector<Quaternion> vel = {Quaternion(0, 0, 0, 0), circle_tangent(theta).as_quat()};
  std::array<PureQuaternion, 4> parts;
  parts[0] = PureQuaternion();
  parts[1] = circle_tangent(theta);
  for (int i = 0; i < 2; ++i) {
    const Quaternion dv =
        evaluate_word_velocity(a.images[static_cast<size_t>(i)], rho, vel) * double(eps[i]);
    parts[static_cast<size_t>(2 + i)] = dv.imag();
  }
  return TangentVector4(parts[0], parts[1], parts[2], parts[3]);
}

Eigen::Matrix<double, 5, 1> velocity_in_pillowcase_frame(const TorusLift& t,
                                                         const TangentVector4& v) {
  const auto torus = pillowcase_frame(t);
  const auto orbit = orbit_frame(param_g(t));
  const std::vector<TangentVector4> cols = {torus.first, torus.second, orbit[0], orbit[1],
                                            orbit[2]};
  Eigen::MatrixXd rhs(12, 1);
  rhs.col(0) = v.flatten();
  const Eigen::MatrixXd coords = frame_coordinates(Frame(rhs), Frame(cols));
  return Eigen::Matrix<double, 5, 1>(coords.col(0));
}

int intersection_sign(const SignTuple& eps, const BraidAutomorphism& a,
                      const IntersectionCandidate& c) {
  const auto cd = velocity_in_pillowcase_frame(c.lift, delta_velocity(c.theta_delta));
  const auto cg = velocity_in_pillowcase_frame(c.lift, gamma_velocity(eps, a, c.theta_gamma));
  Eigen::Matrix2d m;
  m << cd(0), cg(0), cd(1), cg(1);
  // rows become coordinates in (u2, u1) when the quotient orientation
  // reverses the torus frame
  if (pillowcase_orientation_swapped(c.lift)) m.row(0).swap(m.row(1));
  const double det = m.determinant();
  if (std::abs(det) < kFrameDetTol)
    throw TangencyUnresolved("crossing velocities are parallel in the pillowcase frame");
  return det > 0 ? 1 : -1;
}

CassonLinResult casson_lin_h2(const BraidWord& b, const SignTuple& eps,
                              const ScanConfig& config) {
  if (b.strand_count() != 2)
    throw std::invalid_argument("invariant implemented for 2-strand braids only");
  if (!(eps == admissible_epsilon(2)))
    throw InvalidEpsilon("sign tuple must be (-1, -1) on two strands");

  CassonLinResult res;
  res.braid = b.str();
  res.epsilon = eps.signs();
  res.lk = linking_number(b);

  ScanConfig cfg = config;
  cfg.throw_on_tangency = false;  // report unresolved crossings instead
  const BraidAutomorphism aut = artin_action(b);
  res.complete = true;
  for (const auto& cand : find_intersections(eps, b, cfg)) {
    IntersectionDatum d;
    d.theta_delta = cand.theta_delta;
    d.theta_gamma = cand.theta_gamma;
    d.lift = cand.lift;
    d.transverse = cand.transverse;
    if (cand.transverse) {
      try {
        d.sign = intersection_sign(eps, aut, cand);
      } catch (const TangencyUnresolved&) {
        d.sign = 0;
      }
    }
    if (d.sign == 0)
      res.complete = false;
    else
      res.h2 += d.sign;
    res.intersections.push_back(d);
  }
  res.agrees = res.complete && res.h2 == -res.lk;
  return res;
}

CassonLinResult casson_lin_h2(const BraidWord& b, const ScanConfig& config) {
  return casson_lin_h2(b, admissible_epsilon(b.strand_count()), config);
}

namespace {

std::string str_fmt(const char* fmt, ...) {
  char buf[1024];
  va_list args;
  va_start(args, fmt);
  vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return std::string(buf);
}

double tangent_distance(const TangentVector4& a, const TangentVector4& b) {
  return (a.flatten() - b.flatten()).norm();
}

}  // namespace

HopfTrace verify_hopf() {
  HopfTrace trace;
  const auto add = [&trace](std::string label, bool pass, std::string detail) {
    trace.entries.push_back({std::move(label), pass, std::move(detail)});
  };
  const double pi = std::numbers::pi;
  const BraidWord braid = parse_braid("s1^2", 2);
  const BraidAutomorphism aut = artin_action(braid);
  const SignTuple eps = admissible_epsilon(2);

  {
    const FreeWord x = FreeWord::generator(1);
    const FreeWord y = FreeWord::generator(2);
    const FreeWord ex = y.inverse() * x * y;
    const FreeWord ey = y.inverse() * x.inverse() * y * x * y;
    const bool pass = aut.strand_count == 2 && aut.images.size() == 2 && aut.images[0] == ex &&
                      aut.images[1] == ey;
    add("action of s1^2 on free generators", pass,
        "x -> " + aut.images[0].str(2) + ", y -> " + aut.images[1].str(2));
  }

  {
    std::mt19937 rng(20240817u);
    std::normal_distribution<double> gauss;
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
      Eigen::Vector3d va, vb;
      do {
        va = Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng));
      } while (va.norm() < 1e-3);
      do {
        vb = Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng));
      } while (vb.norm() < 1e-3);
      const TracelessElement X{PureQuaternion(Eigen::Vector3d(va.normalized()))};
      const TracelessElement Y{PureQuaternion(Eigen::Vector3d(vb.normalized()))};
      const RepTuple img = eps_sigma(eps, aut, RepTuple({X, Y}));
      const Quaternion qx = X.as_quat();
      const Quaternion qy = Y.as_quat();
      const Quaternion e0 = -(qy.inverse() * qx * qy);
      const Quaternion e1 = -(qy.inverse() * qx.inverse() * qy * qx * qy);
      worst = std::max({worst, distance(img[0].as_quat(), e0), distance(img[1].as_quat(), e1)});
    }
    add("twisted action matches its closed form", worst < 1e-10,
        str_fmt("max deviation %.3e over 100 random tuples", worst));
  }

  {
    const RepTuple rho({TracelessElement::i(), TracelessElement::j()});
    const double r = fixed_point_residual(eps, aut, rho);
    add("(i, j) is a fixed point", r < 1e-12, str_fmt("residual %.3e", r));
  }

  {
    const auto cands = find_intersections(eps, braid);
    bool pass = cands.size() == 1;
    double t1 = 0, t2 = 0;
    if (pass) {
      t1 = cands[0].lift.theta1();
      t2 = cands[0].lift.theta2();
      pass = std::abs(t1 - pi / 2) < 1e-9 && std::abs(t2 - pi / 2) < 1e-9;
    }
    const Quadruple q = param_g(pi / 2, pi / 2);
    const Quadruple ref = {TracelessElement::i(), TracelessElement::j(), TracelessElement::i(),
                           TracelessElement::j()};
    double qd = 0;
    for (int s = 0; s < 4; ++s)
      qd = std::max(qd, (q[static_cast<size_t>(s)].axis() - ref[static_cast<size_t>(s)].axis())
                            .norm());
    pass = pass && qd < 1e-12;
    add("single crossing at lift (pi/2, pi/2) = (i, j, i, j)", pass,
        str_fmt("%zu crossing(s), lift (%.12f, %.12f), quadruple deviation %.3e", cands.size(),
                t1, t2, qd));
  }

  const TorusLift lift(pi / 2, pi / 2);
  const Quadruple base = param_g(lift);

  const PureQuaternion zero;
  const PureQuaternion ui = PureQuaternion::unit_i();
  const PureQuaternion uj = PureQuaternion::unit_j();
  const PureQuaternion uk = PureQuaternion::unit_k();
  const TangentVector4 g_u1(zero, -ui, -uj, zero);
  const TangentVector4 g_u2(zero, zero, uj, -ui);
  const std::array<TangentVector4, 3> g_v = {TangentVector4(zero, uk, zero, uk),
                                             TangentVector4(-uk, zero, -uk, zero),
                                             TangentVector4(uj, -ui, uj, -ui)};
  const std::array<TangentVector4, 3> g_w = {TangentVector4(uk, zero, zero, zero),
                                             TangentVector4(zero, uk, zero, zero),
                                             TangentVector4(uj, zero, zero, zero)};

  const auto torus = pillowcase_frame(lift);
  const auto orbit = orbit_frame(base);
  const auto comp = complement_frame(base);

  {
    const double d =
        std::max(tangent_distance(torus.first, g_u1), tangent_distance(torus.second, g_u2));
    add("torus frame (u1, u2)", d < 1e-12, str_fmt("deviation %.3e from pinned values", d));
  }

  {
    double d = 0;
    for (int t = 0; t < 3; ++t)
      d = std::max(d, tangent_distance(orbit[static_cast<size_t>(t)], g_v[static_cast<size_t>(t)]));
    add("orbit frame (v1, v2, v3)", d < 1e-12, str_fmt("deviation %.3e from pinned values", d));
  }

  {
    double d = 0;
    for (int t = 0; t < 3; ++t)
      d = std::max(d, tangent_distance(comp[static_cast<size_t>(t)], g_w[static_cast<size_t>(t)]));
    const std::array<PureQuaternion, 3> want = {-uj, ui, uk};
    double dd = 0;
    Eigen::Matrix3d img;
    for (int t = 0; t < 3; ++t) {
      const PureQuaternion got = df(base, comp[static_cast<size_t>(t)]);
      img.col(t) = got.vec();
      dd = std::max(dd, (got - want[static_cast<size_t>(t)]).norm());
    }
    const double det = img.determinant();
    add("complement frame with df-images (-j, i, k)", d < 1e-12 && dd < 1e-9 && det > 0,
        str_fmt("frame deviation %.3e, df deviation %.3e, df det %.6f", d, dd, det));
  }

  {
    const std::vector<TangentVector4> s_cols = {comp[0],      comp[1],  comp[2],  torus.first,
                                                torus.second, orbit[0], orbit[1], orbit[2]};
    const Eigen::MatrixXd c = frame_coordinates(Frame(s_cols), product_orientation_basis(base));
    Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> m(8, 8);
    double drift = 0;
    for (int r = 0; r < 8; ++r)
      for (int cc = 0; cc < 8; ++cc) {
        m(r, cc) = std::llround(c(r, cc));
        drift = std::max(drift, std::abs(c(r, cc) - static_cast<double>(m(r, cc))));
      }
    const long long det = integer_determinant(m);
    std::string rows;
    for (int r = 0; r < 8; ++r) {
      if (r) rows += "; ";
      for (int cc = 0; cc < 8; ++cc) rows += str_fmt(cc ? " %lld" : "%lld", m(r, cc));
    }
    add("integer change of basis with det -1", drift < 1e-8 && det == -1,
        str_fmt("entry drift %.3e, det %lld, rows [", drift, det) + rows + "]");
  }

  {
    const bool swapped = pillowcase_orientation_swapped(lift);
    add("oriented pillowcase basis is (u2, u1)", swapped,
        swapped ? "product comparison negative, torus order swapped"
                : "torus order unexpectedly kept");
  }

  {
    const TangentVector4 vd = delta_velocity(pi / 2);
    const TangentVector4 vg = gamma_velocity(eps, aut, pi / 2);
    const double d1 = tangent_distance(vd, g_u1 + g_u2);
    const double d2 = tangent_distance(vg, g_u1 + 3.0 * g_u2);
    add("curve velocities u1 + u2 and u1 + 3 u2", d1 < 1e-9 && d2 < 1e-9,
        str_fmt("deviations %.3e, %.3e", d1, d2));
  }

  {
    const auto cd = velocity_in_pillowcase_frame(lift, delta_velocity(pi / 2));
    const auto cg = velocity_in_pillowcase_frame(lift, gamma_velocity(eps, aut, pi / 2));
    Eigen::Matrix2d m;
    m << cd(0), cg(0), cd(1), cg(1);
    if (pillowcase_orientation_swapped(lift)) m.row(0).swap(m.row(1));
    Eigen::Matrix2d want;
    want << 1, 3, 1, 1;
    const double dev = (m - want).cwiseAbs().maxCoeff();
    const double det = m.determinant();
    add("crossing matrix [[1, 3], [1, 1]] with det -2", dev < 1e-8 && std::abs(det + 2) < 1e-8,
        str_fmt("entries [%.9f %.9f; %.9f %.9f], det %.9f", m(0, 0), m(0, 1), m(1, 0), m(1, 1),
                det));
  }

  {
    const CassonLinResult res = casson_lin_h2(braid);
    const bool pass = res.complete && res.h2 == -1 && res.lk == 1 && res.agrees &&
                      res.intersections.size() == 1 && res.intersections[0].sign == -1;
    add("h2 = -1, lk = 1", pass,
        str_fmt("h2 %d, lk %d, %zu crossing(s), complete %s", res.h2, res.lk,
                res.intersections.size(), res.complete ? "yes" : "no"));
  }

  trace.all_pass = std::all_of(trace.entries.begin(), trace.entries.end(),
                               [](const TraceEntry& e) { return e.pass; });
  return trace;
}

}  // namespace cassonlin
