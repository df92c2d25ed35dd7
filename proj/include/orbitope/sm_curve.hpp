#pragma once

#include <Eigen/Core>
#include <vector>

namespace orbitope {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.1415926535897932384626433832795;

/// Wraps an angle to the canonical range [0, 2*pi). Idempotent.
double canonical_angle(double t);

/// A point of the circle, stored as its canonical parameter in [0, 2*pi).
class CirclePoint {
 public:
  CirclePoint() = default;
  explicit CirclePoint(double t) : t_(canonical_angle(t)) {}
  double value() const { return t_; }

 private:
  double t_ = 0.0;
};

/// Arc distance min(|a-b|, 2*pi - |a-b|).
double arc_distance(CirclePoint a, CirclePoint b);

/// Closed arc of the circle given by center and length. Membership uses the
/// half-open convention [start, start + length) so boundary ties resolve
/// deterministically during bisection sweeps.
struct Arc {
  CirclePoint center;
  double length = 0.0;  // in (0, 2*pi)

  Arc() = default;
  Arc(CirclePoint c, double len);

  double start() const;
  bool contains(CirclePoint t) const;
  /// Position of t relative to the arc start, in [0, 2*pi); points inside the
  /// arc order by this offset.
  double offset_from_start(CirclePoint t) const;
  /// The antipodal arc: same length, center shifted by pi.
  Arc opposite() const;
};

/// Parameters of the odd-frequency symmetric moment curve in R^{2k}:
/// t -> (cos t, sin t, cos 3t, sin 3t, ..., cos (2k-1)t, sin (2k-1)t).
struct CurveSpec {
  int k;

  explicit CurveSpec(int k_in);
  int dim() const { return 2 * k; }
  int frequency(int j) const { return 2 * j + 1; }  // j in [0, k)
  std::vector<int> frequencies() const;
};

/// Curve point x(t).
Eigen::VectorXd eval(const CurveSpec& spec, CirclePoint t);

/// n-th derivative of x at t, from the closed form: the pair at frequency f
/// scales by f^n with its phase shifted by n*pi/2.
Eigen::VectorXd deriv(const CurveSpec& spec, CirclePoint t, int n);

/// x(t + pi); equals -x(t) to machine precision by central symmetry.
Eigen::VectorXd antipode(const CurveSpec& spec, CirclePoint t);

}  // namespace orbitope
