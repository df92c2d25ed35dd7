#pragma once

#include <utility>
#include <vector>

#include "orbitope/sm_curve.hpp"

namespace orbitope {

struct HarmonicTerm {
  int frequency;      // positive
  double cos_coeff;   // alpha
  double sin_coeff;   // beta
};

/// Real trigonometric polynomial c0 + sum_f (alpha_f cos ft + beta_f sin ft),
/// stored with strictly increasing frequencies.
class TrigPoly {
 public:
  TrigPoly() = default;
  TrigPoly(double constant, std::vector<HarmonicTerm> terms);

  double constant() const { return c0_; }
  const std::vector<HarmonicTerm>& terms() const { return terms_; }
  /// Max frequency with a stored term; 0 for a pure constant.
  int degree() const;
  /// l2 norm of all coefficients including the constant.
  double coefficient_norm() const;
  /// linf norm of all coefficients including the constant.
  double coefficient_max() const;

  double operator()(double t) const;

 private:
  double c0_ = 0.0;
  std::vector<HarmonicTerm> terms_;
};

double eval_poly(const TrigPoly& p, CirclePoint t);

/// Termwise derivative; the constant term of the result is always 0.
TrigPoly differentiate(const TrigPoly& p);

/// n-th derivative, n >= 0.
TrigPoly derivative(const TrigPoly& p, int n);

/// p evaluated at t0, t0+step, ..., t0+(n-1)*step with per-frequency rotation
/// recurrences. Intended for dense scans inside search loops.
std::vector<double> eval_on_grid(const TrigPoly& p, double t0, double step, int n);

struct CircleRoot {
  CirclePoint location;
  int multiplicity;
};

struct CircleRootSet {
  std::vector<CircleRoot> roots;  // sorted by angle
  double residual = 0.0;          // max |p| over reported roots

  int total_multiplicity() const;
};

/// All circle roots of p with multiplicities.
///
/// Method: map p to the algebraic polynomial q(z) = z^degree * p(t) with
/// z = e^{it} (degree 2*degree, complex coefficients), take companion-matrix
/// eigenvalues, keep the unimodular ones, then polish each candidate with a
/// multiplicity-adaptive Newton iteration on the first derivative that has a
/// simple zero there. Candidates slightly off the circle are projected and
/// kept only when the residual gate |p(t)| < tol * |coeffs| passes, which is
/// how eigenvalue scatter around multiple roots is recovered. A root has
/// multiplicity m when |p^(j)(t)| stays below tol * |coeffs| * degree^j for
/// all j < m and not for j = m. Roots closer than 1e-7 * (2*pi/degree) are
/// merged.
///
/// Throws IdenticallyZero when every coefficient is below tol, and
/// IllConditioned when the eigensolver fails or the total multiplicity
/// exceeds the 2*degree cap.
CircleRootSet circle_roots(const TrigPoly& p, double tol = 1e-9);

/// Global minimizer of p over the circle: evaluates p at the roots of p' and
/// on a 64*degree safety grid, then polishes the best candidate locally.
std::pair<CirclePoint, double> global_min(const TrigPoly& p);

/// Global maximizer, via global_min of -p.
std::pair<CirclePoint, double> global_max(const TrigPoly& p);

/// Minimum of p over [t0, t0 + span] by an n-point scan plus golden-section
/// polish. Heuristic seeding helper for search loops; global_min is the
/// certified path.
std::pair<double, double> min_on_interval(const TrigPoly& p, double t0, double span, int n);

}  // namespace orbitope
