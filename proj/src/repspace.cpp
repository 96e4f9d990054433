#include "cassonlin/repspace.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cassonlin/errors.hpp"

namespace cassonlin {

SignTuple::SignTuple(std::vector<int> signs) : signs_(std::move(signs)) {
  int prod = 1;
  for (int s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("sign tuple entries must be +1 or -1");
    prod *= s;
  }
  if (prod != 1) throw std::invalid_argument("sign tuple must have product +1");
}

Quaternion evaluate_word(const FreeWord& w, const RepTuple& rho) {
  Quaternion acc = Quaternion::identity();
  for (int l : w.letters()) {
    const int g = std::abs(l);
    if (g > rho.size())
      throw IndexError("word uses generator " + std::to_string(g) + " beyond tuple size");
    const Quaternion e = rho[g - 1].as_quat();
    acc = acc * (l > 0 ? e : e.inverse());
  }
  return acc;
}

Quaternion evaluate_word_velocity(const FreeWord& w, const RepTuple& rho,
                                  const std::vector<Quaternion>& entry_velocity) {
  if (static_cast<int>(entry_velocity.size()) != rho.size())
    throw std::invalid_argument("one velocity per tuple entry required");
  Quaternion value = Quaternion::identity();
  Quaternion vel(0, 0, 0, 0);
  for (int l : w.letters()) {
    const int g = std::abs(l);
    if (g > rho.size())
      throw IndexError("word uses generator " + std::to_string(g) + " beyond tuple size");
    Quaternion f = rho[g - 1].as_quat();
    Quaternion fdot = entry_velocity[g - 1];
    if (l < 0) {
      const Quaternion finv = f.inverse();
      fdot = -(finv * fdot * finv);
      f = finv;
    }
    vel = vel * f + value * fdot;
    value = value * f;
  }
  return vel;
}

RepTuple eps_sigma(const SignTuple& eps, const BraidAutomorphism& a, const RepTuple& rho) {
  if (eps.size() != rho.size() || a.strand_count != rho.size() ||
      static_cast<int>(a.images.size()) != rho.size())
    throw IndexError("sign tuple, automorphism, and tuple sizes must agree");
  std::vector<TracelessElement> out;
  out.reserve(rho.size());
  for (int idx = 0; idx < rho.size(); ++idx) {
    Quaternion v = evaluate_word(a.images[idx], rho);
    if (eps[idx] < 0) v = -v;
    out.push_back(TracelessElement::from(v));
  }
  return RepTuple(std::move(out));
}

double fixed_point_residual(const SignTuple& eps, const BraidAutomorphism& a,
                            const RepTuple& rho) {
  const RepTuple image = eps_sigma(eps, a, rho);
  double r = 0.0;
  for (int idx = 0; idx < rho.size(); ++idx)
    r = std::max(r, distance(image[idx].as_quat(), rho[idx].as_quat()));
  return r;
}

bool is_irreducible(const RepTuple& rho) {
  for (int p = 0; p < rho.size(); ++p)
    for (int q = p + 1; q < rho.size(); ++q) {
      const Quaternion a = rho[p].as_quat();
      const Quaternion b = rho[q].as_quat();
      if (distance(a * b, b * a) > kCommutatorTol) return true;
    }
  return false;
}

Quaternion product_holonomy(const RepTuple& rho) {
  Quaternion acc = Quaternion::identity();
  for (int idx = 0; idx < rho.size(); ++idx) acc = acc * rho[idx].as_quat();
  return acc;
}

namespace {

// Word evaluation specialized to a pair, on raw quaternions; the scan is
// hot enough that skipping tuple revalidation matters.
Quaternion evaluate_pair(const FreeWord& w, const Quaternion& x, const Quaternion& y) {
  Quaternion acc = Quaternion::identity();
  for (int l : w.letters()) {
    switch (l) {
      case 1: acc = acc * x; break;
      case -1: acc = acc * (-x); break;
      case 2: acc = acc * y; break;
      case -2: acc = acc * (-y); break;
      default: throw IndexError("pair evaluation saw generator beyond rank 2");
    }
  }
  return acc;
}

}  // namespace

std::vector<GridHit> fixed_point_grid_scan(const SignTuple& eps, const BraidAutomorphism& a,
                                           int resolution, double residual_threshold) {
  if (a.strand_count != 2 || eps.size() != 2)
    throw std::invalid_argument("grid scan is defined for 2-strand data");
  if (resolution < 2) throw std::invalid_argument("grid resolution too small");
  const double step = 2.0 * std::numbers::pi / resolution;
  const FreeWord& w1 = a.images[0];
  const FreeWord& w2 = a.images[1];

  std::vector<Quaternion> circle(resolution);
  for (int s = 0; s < resolution; ++s) {
    const double t = step * s;
    // e^{kt} i lies on the (i, j)-circle.
    circle[s] = Quaternion(0, std::cos(t), std::sin(t), 0);
  }

  std::vector<GridHit> hits;
  for (int s1 = 0; s1 < resolution; ++s1) {
    const Quaternion& x = circle[s1];
    for (int s2 = 0; s2 < resolution; ++s2) {
      const Quaternion& y = circle[s2];
      Quaternion v1 = evaluate_pair(w1, x, y);
      Quaternion v2 = evaluate_pair(w2, x, y);
      if (eps[0] < 0) v1 = -v1;
      if (eps[1] < 0) v2 = -v2;
      const double r = std::max(distance(v1, x), distance(v2, y));
      if (r < residual_threshold) hits.push_back({step * s1, step * s2, r});
    }
  }
  return hits;
}

}  // namespace cassonlin
