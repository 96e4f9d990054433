#pragma once

#include <vector>

#include "cassonlin/braid.hpp"
#include "cassonlin/quat.hpp"

// Tuples of traceless SU(2) elements, word evaluation, and the sign-twisted
// braid action whose fixed points feed the intersection picture.

namespace cassonlin {

// Two tuple entries commute when the norm of their commutator is below this.
inline constexpr double kCommutatorTol = 1e-8;

// Tuple of signs, one per strand, with product +1.
class SignTuple {
 public:
  explicit SignTuple(std::vector<int> signs);

  int size() const { return static_cast<int>(signs_.size()); }
  int operator[](int idx) const { return signs_.at(idx); }
  const std::vector<int>& signs() const { return signs_; }
  bool operator==(const SignTuple&) const = default;

 private:
  std::vector<int> signs_;
};

// Tuple (X_1, ..., X_n) of traceless elements, one per strand.
class RepTuple {
 public:
  explicit RepTuple(std::vector<TracelessElement> entries) : entries_(std::move(entries)) {}

  int size() const { return static_cast<int>(entries_.size()); }
  const TracelessElement& operator[](int idx) const { return entries_.at(idx); }
  const std::vector<TracelessElement>& entries() const { return entries_; }

 private:
  std::vector<TracelessElement> entries_;
};

// Evaluates a free word at the tuple; the empty word gives 1.  Throws
// IndexError when the word uses a generator beyond the tuple size.
Quaternion evaluate_word(const FreeWord& w, const RepTuple& rho);

// d/dt of the evaluation along a path of tuples with the given entrywise
// velocities, by the product rule.  Exact up to floating arithmetic.
Quaternion evaluate_word_velocity(const FreeWord& w, const RepTuple& rho,
                                  const std::vector<Quaternion>& entry_velocity);

// The sign-twisted action: entry i of the result is eps_i times the image
// word of x_i evaluated at rho.  Entries stay traceless because braid
// automorphisms send generators to conjugates of generators.
RepTuple eps_sigma(const SignTuple& eps, const BraidAutomorphism& a, const RepTuple& rho);

// Max entrywise distance between eps_sigma(rho) and rho.
double fixed_point_residual(const SignTuple& eps, const BraidAutomorphism& a,
                            const RepTuple& rho);

// True when some pair of entries fails to commute, i.e. the axes are not
// all parallel.
bool is_irreducible(const RepTuple& rho);

// Product of all entries in order.
Quaternion product_holonomy(const RepTuple& rho);

// Diagnostic scan for fixed points of the twisted action of a 2-strand
// braid over the torus of tuples (e^{k t1} i, e^{k t2} i).  Returns grid
// points whose residual falls below the threshold.
struct GridHit {
  double theta1;
  double theta2;
  double residual;
};

std::vector<GridHit> fixed_point_grid_scan(const SignTuple& eps, const BraidAutomorphism& a,
                                           int resolution, double residual_threshold);

}  // namespace cassonlin
