#pragma once

// Angular momentum wavefunctions D^j_{n m}(phi, theta, chi) with an arbitrary
// (real or symbolic) body-frame projection n.  The theta dependence is the
// sum of two half-angle branches:
//
//   branch A:  seeded at m = +j as e^{+i pi/4} cos^{j+n} sin^{j-n},
//              reached by lowering;
//   branch B:  seeded at m = -j as e^{-i pi/4} sin^{j+n} cos^{j-n},
//              reached by raising.
//
// Each interior ladder step divides by sqrt(j(j+1) - m(m +- 1)).  The states
// at |m| = j + 1 ("edge states") are obtained by one further unnormalized
// step; they are annihilated by the inward ladder operator and have zero
// norm, which closes the ladder algebra.
//
// The overall normalization constant N_j is kept symbolic: all inner
// products are reported in units of |N_j|^2.

#include <gwd/halfangle.hpp>

namespace gwd {

struct SpinState {
  Rational j;
  Scalar n;
  Rational m;
};

class Wavefunction {
 public:
  // Builds D^j_{n m}.  Requires 2j integer >= 0 and j - m integer with
  // |m| <= j + 1 (|m| = j + 1 selects an edge state).
  static Wavefunction build(const Rational& j, const Scalar& n, const Rational& m);

  const SpinState& state() const { return st_; }
  const HalfAngleExpr& branch_a() const { return a_; }
  const HalfAngleExpr& branch_b() const { return b_; }
  bool at_edge() const;
  bool is_null() const { return a_.empty() && b_.empty(); }

  // Normalized ladder step m -> m + dir.  Stepping onto the edge applies the
  // raw operator (the normalization factor vanishes there); stepping inward
  // from the edge annihilates the state (returns a null wavefunction);
  // stepping outward beyond the edge is a domain error.
  Wavefunction ladder(int dir) const;

  // Body-frame reflection n -> -n.
  Wavefunction spin_inverted() const;

  // Theta part of one branch (0 = A, 1 = B) at a given angle.
  std::complex<double> evaluate_branch(int branch, double theta) const;
  // Full value including the phi/chi phases (per unit N_j).
  std::complex<double> evaluate(double phi, double theta, double chi) const;

  // sqrt(j(j+1) - m(m+dir)), the interior step normalization.
  static Scalar ladder_norm(const Rational& j, const Rational& m, int dir);

 private:
  Wavefunction(SpinState st, HalfAngleExpr a, HalfAngleExpr b)
      : st_(std::move(st)), a_(std::move(a)), b_(std::move(b)) {}
  SpinState st_;
  HalfAngleExpr a_, b_;
};

}  // namespace gwd
