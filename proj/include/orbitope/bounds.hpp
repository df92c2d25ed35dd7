#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "orbitope/sm_curve.hpp"

namespace orbitope {

/// Closed-form data for one k: the smallest positive root of the gap
/// function and the two k^{-3/2} constants it must clear.
struct GapProfile {
  int k;
  double epsilon_star;
  double thm31_bound;  // sqrt(3/2) * k^{-3/2}
  double thm12_bound;  // exactly 2 * thm31_bound
};

/// gap(k, eps) = (k - 1 - sin(2k eps) / (2 sin eps)) / 2. Equals the squared
/// norm defect |x(t+pi+eps)+x(t)|^2/4 - 1/2 of the midpoint between a contact
/// and a near-antipodal contact. The removable singularity at eps = 0 returns
/// the limit -1/2; a series is used for |eps| < 1e-4 to avoid cancellation.
double gap(int k, double eps);

/// -1/2 + k^3 eps^2 / 3, valid on (0, pi/(2k)] where it strictly dominates
/// gap. Throws DomainError outside that interval.
double gap_upper_envelope(int k, double eps);

/// Smallest positive root of gap(k, .), by bracket scan plus bisection to
/// tol. Throws BracketFailure when no sign change is found.
double epsilon_star(int k, double tol = 1e-12);

GapProfile gap_profile(int k, double tol = 1e-12);

/// x(s)/2 + ((s-tj)/(2(ti-tj))) x(ti) + ((ti-s)/(2(ti-tj))) x(tj), evaluated
/// on the canonical parameter values as given. The coefficients always sum
/// to 1. Throws CoincidentPoints when |ti - tj| < 1e-12.
Eigen::VectorXd refined_point(const CurveSpec& spec, CirclePoint s, CirclePoint ti, CirclePoint tj);

struct RefinedScalingRow {
  int k;
  double threshold_eps;  // smallest eps at which the face-point norm reaches 1/sqrt(2)
  double delta;          // optimized tangency separation tj - ti at the threshold
  double s_param;        // antipodal-frame placement parameter used for s
  double ti;
  double tj;
};

struct RefinedScalingResult {
  std::vector<RefinedScalingRow> rows;
  double fitted_exponent;  // least-squares slope of log(threshold) vs log(k)
};

/// Three-point refinement experiment: for each k, places the near-antipodal
/// contact midway between two tangency parameters at distance eps and finds
/// by bisection the smallest eps at which the refined face point can no
/// longer dip inside the inscribed sphere of radius 1/sqrt(2). The tangency
/// separation delta is optimized by an inner search. Exploratory: callers
/// compare the fitted exponent against a window rather than a sharp value.
RefinedScalingResult refined_scaling_experiment(const std::vector<int>& k_list, uint64_t seed);

}  // namespace orbitope
