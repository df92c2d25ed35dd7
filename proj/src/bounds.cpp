#include "orbitope/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "orbitope/errors.hpp"

namespace orbitope {

double gap(int k, double eps) {
  if (k < 1) throw DomainError("gap requires k >= 1");
  if (eps < 0.0 || eps >= kPi) throw DomainError("gap requires eps in [0, pi)");
  if (std::abs(eps) < 1e-4) {
    // series of (k - 1 - sin(2k eps)/(2 sin eps))/2 about eps = 0
    double kk = static_cast<double>(k);
    double e2 = eps * eps;
    double quadratic = kk * (4.0 * kk * kk - 1.0) / 12.0;
    double quartic = -0.5 * kk * (2.0 * std::pow(kk, 4) / 15.0 - kk * kk / 9.0 + 7.0 / 360.0);
    return -0.5 + quadratic * e2 + quartic * e2 * e2;
  }
  return 0.5 * (k - 1.0 - std::sin(2.0 * k * eps) / (2.0 * std::sin(eps)));
}

double gap_upper_envelope(int k, double eps) {
  if (k < 1) throw DomainError("envelope requires k >= 1");
  if (!(eps > 0.0) || eps > kPi / (2.0 * k)) {
    throw DomainError("envelope only valid on (0, pi/(2k)]");
  }
  double kk = static_cast<double>(k);
  return -0.5 + kk * kk * kk * eps * eps / 3.0;
}

double epsilon_star(int k, double tol) {
  if (k < 1) throw DomainError("epsilon_star requires k >= 1");
  if (!(tol > 0.0)) throw DomainError("epsilon_star requires tol > 0");
  // gap(k, pi/(2k)) = (k-1)/2 > 0 for k >= 2; for k = 1 the root is at pi/2
  double hi = k >= 2 ? kPi / (2.0 * k) : kPi - 1e-9;

  const int scan = 4096;
  double lo = 0.0;  // gap(k, 0) = -1/2 < 0
  double found = -1.0;
  double prev_x = 1e-12;
  double prev_v = gap(k, prev_x);
  for (int i = 1; i <= scan; ++i) {
    double x = 1e-12 + (hi - 1e-12) * static_cast<double>(i) / scan;
    double v = gap(k, x);
    if (prev_v < 0.0 && v >= 0.0) {
      lo = prev_x;
      found = x;
      break;
    }
    prev_x = x;
    prev_v = v;
  }
  if (found < 0.0) throw BracketFailure("no sign change of the gap function in the bracket");

  double a = lo, b = found;
  while (b - a > tol) {
    double m = 0.5 * (a + b);
    if (gap(k, m) < 0.0) {
      a = m;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

GapProfile gap_profile(int k, double tol) {
  double thm31 = std::sqrt(1.5) * std::pow(static_cast<double>(k), -1.5);
  return {k, epsilon_star(k, tol), thm31, 2.0 * thm31};
}

Eigen::VectorXd refined_point(const CurveSpec& spec, CirclePoint s, CirclePoint ti,
                              CirclePoint tj) {
  double si = s.value(), a = ti.value(), b = tj.value();
  if (std::abs(a - b) < 1e-12) throw CoincidentPoints("refined point needs ti != tj");
  double ci = (si - b) / (2.0 * (a - b));
  double cj = (a - si) / (2.0 * (a - b));
  return 0.5 * eval(spec, s) + ci * eval(spec, ti) + cj * eval(spec, tj);
}

namespace {

// Norm of the refined face point in the antipodal frame: the contact sits at
// s = sigma + pi, and the displayed combination is evaluated with the
// parameter differences measured from sigma = s - pi, which is where the
// tangency points live. Equivalent to |refined_point(sigma, ti, tj) - x(sigma)|.
double face_point_norm(const CurveSpec& spec, double sigma, double ti, double tj) {
  Eigen::VectorXd q =
      refined_point(spec, CirclePoint(sigma), CirclePoint(ti), CirclePoint(tj)) -
      eval(spec, CirclePoint(sigma));
  return q.norm();
}

// min over admissible separations delta >= 2*eps of the face-point norm;
// returns {norm, delta}.
std::pair<double, double> best_violation(const CurveSpec& spec, double sigma, double eps) {
  double lo = 2.0 * eps;
  double hi = std::min(kPi / 2.0, 2.0 * eps + 1.0);
  const int scan = 48;
  double best_delta = lo;
  double best = face_point_norm(spec, sigma, sigma - eps, sigma - eps + lo);
  for (int i = 1; i <= scan; ++i) {
    double delta = lo + (hi - lo) * static_cast<double>(i) / scan;
    double v = face_point_norm(spec, sigma, sigma - eps, sigma - eps + delta);
    if (v < best) {
      best = v;
      best_delta = delta;
    }
  }
  // golden refinement around the best sample
  double span = (hi - lo) / scan;
  double a = std::max(lo, best_delta - span);
  double b = std::min(hi, best_delta + span);
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = face_point_norm(spec, sigma, sigma - eps, sigma - eps + x1);
  double f2 = face_point_norm(spec, sigma, sigma - eps, sigma - eps + x2);
  for (int it = 0; it < 60 && b - a > 1e-13; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = face_point_norm(spec, sigma, sigma - eps, sigma - eps + x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = face_point_norm(spec, sigma, sigma - eps, sigma - eps + x2);
    }
  }
  double mid = 0.5 * (a + b);
  double v = face_point_norm(spec, sigma, sigma - eps, sigma - eps + mid);
  if (v < best) return {v, mid};
  return {best, best_delta};
}

}  // namespace

RefinedScalingResult refined_scaling_experiment(const std::vector<int>& k_list, uint64_t seed) {
  (void)seed;  // the placement is deterministic; kept for interface stability
  const double target = 1.0 / std::sqrt(2.0);
  const double sigma = kPi / 2.0;  // wrap-free placement center

  RefinedScalingResult result;
  result.rows.reserve(k_list.size());
  for (int k : k_list) {
    if (k < 2 || k > 64) throw DomainError("refined scaling experiment supports k in [2, 64]");
    CurveSpec spec(k);
    auto clearance = [&](double eps) { return best_violation(spec, sigma, eps).first - target; };

    // bracket the first eps where the violation disappears
    double lo = 1e-6, hi = 1.2;
    double prev = clearance(lo);
    double step_lo = lo, step_hi = -1.0;
    const int scan = 256;
    for (int i = 1; i <= scan; ++i) {
      double x = lo * std::pow(hi / lo, static_cast<double>(i) / scan);  // log-spaced
      double v = clearance(x);
      if (prev < 0.0 && v >= 0.0) {
        step_hi = x;
        break;
      }
      step_lo = x;
      prev = v;
    }
    if (step_hi < 0.0) throw BracketFailure("refined threshold not bracketed");
    double a = step_lo, b = step_hi;
    while (b - a > 1e-10) {
      double m = 0.5 * (a + b);
      if (clearance(m) < 0.0) {
        a = m;
      } else {
        b = m;
      }
    }
    double threshold = 0.5 * (a + b);
    auto [norm_at, delta_at] = best_violation(spec, sigma, threshold);
    (void)norm_at;
    result.rows.push_back(
        {k, threshold, delta_at, sigma, sigma - threshold, sigma - threshold + delta_at});
  }

  // least-squares slope of log(threshold) against log(k)
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  double n = static_cast<double>(result.rows.size());
  for (const auto& row : result.rows) {
    double x = std::log(static_cast<double>(row.k));
    double y = std::log(row.threshold_eps);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  result.fitted_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return result;
}

}  // namespace orbitope
