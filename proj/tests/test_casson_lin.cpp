#include "doctest.h"

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "cassonlin/casson_lin.hpp"
#include "cassonlin/errors.hpp"
#include "test_util.hpp"

using namespace cassonlin;

namespace {

constexpr double kPi = 3.14159265358979323846;

Eigen::Matrix<double, 12, 1> flatten_quadruple(const Quadruple& q) {
  Eigen::Matrix<double, 12, 1> out;
  for (int s = 0; s < 4; ++s) out.segment<3>(3 * s) = q[static_cast<size_t>(s)].axis();
  return out;
}

}  // namespace

TEST_CASE("admissible sign tuple exists only for two strands") {
  CHECK(admissible_epsilon(2) == SignTuple({-1, -1}));
  CHECK_THROWS_AS(admissible_epsilon(1), InvalidEpsilon);
  CHECK_THROWS_AS(admissible_epsilon(3), InvalidEpsilon);
  CHECK_THROWS_AS(admissible_epsilon(4), InvalidEpsilon);
}

TEST_CASE("diagonal curve velocity matches finite differences") {
  std::mt19937 rng(501);
  std::uniform_real_distribution<double> angle(0.02, 2 * kPi - 0.02);
  const double h = 1e-5;
  for (int trial = 0; trial < 100; ++trial) {
    const double theta = angle(rng);
    const Eigen::Matrix<double, 12, 1> fd =
        (flatten_quadruple(delta_curve(theta + h).quadruple) -
         flatten_quadruple(delta_curve(theta - h).quadruple)) /
        (2 * h);
    CHECK((delta_velocity(theta).flatten() - fd).norm() < 1e-6);
  }
}

TEST_CASE("graph curve velocity matches finite differences") {
  const SignTuple eps = admissible_epsilon(2);
  std::mt19937 rng(502);
  std::uniform_real_distribution<double> angle(0.05, 2 * kPi - 0.05);
  const double h = 1e-5;
  for (const char* text : {"s1^2", "s1^-4"}) {
    const BraidAutomorphism a = artin_action(parse_braid(text, 2));
    int done = 0;
    while (done < 60) {
      const double theta = angle(rng);
      if (std::abs(theta - kPi) < 0.05) continue;  // graph curve corner
      const Eigen::Matrix<double, 12, 1> fd =
          (flatten_quadruple(gamma_curve(eps, a, theta + h).quadruple) -
           flatten_quadruple(gamma_curve(eps, a, theta - h).quadruple)) /
          (2 * h);
      CHECK((gamma_velocity(eps, a, theta).flatten() - fd).norm() < 1e-6);
      ++done;
    }
  }
}

TEST_CASE("pillowcase frame coordinates recover coefficients") {
  const TorusLift t(0.8, 2.1);
  const auto [u1, u2] = pillowcase_frame(t);
  const auto v = orbit_frame(param_g(t));

  Eigen::Matrix<double, 5, 1> c1 = velocity_in_pillowcase_frame(t, u1);
  CHECK((c1 - Eigen::Matrix<double, 5, 1>(1, 0, 0, 0, 0)).norm() < 1e-8);
  Eigen::Matrix<double, 5, 1> c2 = velocity_in_pillowcase_frame(t, u2);
  CHECK((c2 - Eigen::Matrix<double, 5, 1>(0, 1, 0, 0, 0)).norm() < 1e-8);
  Eigen::Matrix<double, 5, 1> c4 = velocity_in_pillowcase_frame(t, v[1]);
  CHECK((c4 - Eigen::Matrix<double, 5, 1>(0, 0, 0, 1, 0)).norm() < 1e-8);

  std::mt19937 rng(503);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::Matrix<double, 5, 1> want;
    for (int k = 0; k < 5; ++k) want(k) = coeff(rng);
    const TangentVector4 mix = want(0) * u1 + want(1) * u2 + want(2) * v[0] +
                               want(3) * v[1] + want(4) * v[2];
    CHECK((velocity_in_pillowcase_frame(t, mix) - want).norm() < 1e-7);
  }
}

TEST_CASE("vectors off the pillowcase locus are rejected") {
  const TorusLift golden(kPi / 2, kPi / 2);
  const TangentVector4 w1(PureQuaternion::unit_k(), PureQuaternion(), PureQuaternion(),
                          PureQuaternion());
  CHECK_THROWS_AS(velocity_in_pillowcase_frame(golden, w1), DegenerateFrame);
}

TEST_CASE("curve velocities at crossings have the expected slopes") {
  const SignTuple eps = admissible_epsilon(2);

  // Hopf crossing at (pi/2, pi/2): diagonal moves along u1 + u2, graph
  // along u1 + 3 u2.
  const TorusLift hopf(kPi / 2, kPi / 2);
  const auto a2 = artin_action(parse_braid("s1^2", 2));
  Eigen::Matrix<double, 5, 1> cd = velocity_in_pillowcase_frame(hopf, delta_velocity(kPi / 2));
  CHECK((cd - Eigen::Matrix<double, 5, 1>(1, 1, 0, 0, 0)).norm() < 1e-6);
  Eigen::Matrix<double, 5, 1> cg =
      velocity_in_pillowcase_frame(hopf, gamma_velocity(eps, a2, kPi / 2));
  CHECK((cg - Eigen::Matrix<double, 5, 1>(1, 3, 0, 0, 0)).norm() < 1e-6);

  // First crossing of s1^4 at (pi/4, pi/4): graph slope rises to 5.
  const auto a4 = artin_action(parse_braid("s1^4", 2));
  const TorusLift quarter(kPi / 4, kPi / 4);
  CHECK(torus_distance(gamma_curve(eps, a4, kPi / 4).lift, quarter) < 1e-9);
  Eigen::Matrix<double, 5, 1> cg4 =
      velocity_in_pillowcase_frame(quarter, gamma_velocity(eps, a4, kPi / 4));
  CHECK((cg4 - Eigen::Matrix<double, 5, 1>(1, 5, 0, 0, 0)).norm() < 1e-6);
}

TEST_CASE("crossing signs for the Hopf link and its mirror") {
  const SignTuple eps = admissible_epsilon(2);

  const BraidWord hopf = parse_braid("s1^2", 2);
  const auto ah = artin_action(hopf);
  const auto ch = find_intersections(eps, hopf);
  REQUIRE(ch.size() == 1);
  CHECK(intersection_sign(eps, ah, ch[0]) == -1);

  const BraidWord mirror = parse_braid("s1^-2", 2);
  const auto am = artin_action(mirror);
  const auto cm = find_intersections(eps, mirror);
  REQUIRE(cm.size() == 1);
  CHECK(intersection_sign(eps, am, cm[0]) == 1);
}

TEST_CASE("crossing sign does not depend on the lift choice") {
  // The Hopf crossing seen through the involution-related lift at
  // (3pi/2, 3pi/2) must carry the same sign.
  const SignTuple eps = admissible_epsilon(2);
  const auto a = artin_action(parse_braid("s1^2", 2));
  const double theta = 3 * kPi / 2;
  const TorusLift lift(theta, theta);
  CHECK(torus_distance(gamma_curve(eps, a, theta).lift, lift) < 1e-9);
  const IntersectionCandidate c{theta, theta, lift, canonicalize(lift),
                                delta_curve(theta).quadruple, 2.0, true};
  CHECK(intersection_sign(eps, a, c) == -1);
}

TEST_CASE("torus family h2 equals minus the linking number") {
  for (int k = 1; k <= 4; ++k) {
    const BraidWord b = parse_braid("s1^" + std::to_string(2 * k), 2);
    const CassonLinResult res = casson_lin_h2(b);
    CHECK(res.h2 == -k);
    CHECK(res.lk == k);
    CHECK(res.agrees);
    CHECK(res.complete);
    REQUIRE(static_cast<int>(res.intersections.size()) == k);
    for (int m = 0; m < k; ++m) {
      const IntersectionDatum& d = res.intersections[static_cast<size_t>(m)];
      CHECK(d.sign == -1);
      CHECK(d.transverse);
      CHECK(d.theta_gamma == doctest::Approx((2 * m + 1) * kPi / (2 * k)).epsilon(1e-6));
      CHECK(std::abs(d.theta_delta - d.theta_gamma) < 1e-9);
    }
  }
  for (int k = 1; k <= 2; ++k) {
    const CassonLinResult res = casson_lin_h2(parse_braid("s1^-" + std::to_string(2 * k), 2));
    CHECK(res.h2 == k);
    CHECK(res.lk == -k);
    CHECK(res.agrees);
    CHECK(res.complete);
    for (const IntersectionDatum& d : res.intersections) CHECK(d.sign == 1);
  }
}

TEST_CASE("result carries the braid text and the sign tuple") {
  const CassonLinResult res = casson_lin_h2(parse_braid("s1^2", 2));
  CHECK(res.braid == "s1^2");
  CHECK(res.epsilon == std::vector<int>{-1, -1});
}

TEST_CASE("input validation") {
  const BraidWord b = parse_braid("s1^2", 2);
  CHECK_THROWS_AS(casson_lin_h2(b, SignTuple({1, 1})), InvalidEpsilon);
  CHECK_THROWS_AS(casson_lin_h2(parse_braid("s1^3", 2)), NotTwoComponents);
  CHECK_THROWS_AS(casson_lin_h2(parse_braid("s1", 2)), NotTwoComponents);
}

TEST_CASE("equivalent words give the same invariant") {
  for (const char* text : {"s1^-1 s1^3", "s1^3 s1^-1"}) {
    const CassonLinResult res = casson_lin_h2(parse_braid(text, 2));
    CHECK(res.h2 == -1);
    CHECK(res.lk == 1);
    CHECK(res.complete);
  }
  ScanConfig coarse;
  coarse.resolution = 1024;
  const CassonLinResult res = casson_lin_h2(parse_braid("s1^4", 2), coarse);
  CHECK(res.h2 == -2);
  CHECK(res.complete);
}

TEST_CASE("hopf audit passes every stage") {
  const HopfTrace trace = verify_hopf();
  CHECK(trace.all_pass);
  CHECK(trace.entries.size() == 12);
  for (const TraceEntry& e : trace.entries) {
    CAPTURE(e.label);
    CHECK(!e.label.empty());
    CHECK(e.pass);
  }
}
