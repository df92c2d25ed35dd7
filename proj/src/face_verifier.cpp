#include "orbitope/face_verifier.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <limits>

#include "orbitope/errors.hpp"

namespace orbitope {

namespace {
constexpr double kContactMatchTolerance = 1e-6;

int affine_rank(const CurveSpec& spec, const std::vector<CirclePoint>& points) {
  if (points.size() <= 1) return 0;
  Eigen::MatrixXd diffs(points.size() - 1, spec.dim());
  Eigen::VectorXd base = eval(spec, points.front());
  for (size_t i = 1; i < points.size(); ++i) {
    diffs.row(static_cast<Eigen::Index>(i - 1)) = (eval(spec, points[i]) - base).transpose();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(diffs);
  const auto& sigma = svd.singularValues();
  double threshold = 1e-7 * sigma[0];
  int rank = 0;
  for (int i = 0; i < sigma.size(); ++i) {
    if (sigma[i] > threshold) ++rank;
  }
  return rank;
}

}  // namespace

double support_tolerance(const Hyperplane& plane) {
  return 1e-9 * (1.0 + std::abs(plane.offset));
}

FaceCertificate certify_hyperplane(const CurveSpec& spec, const Hyperplane& plane,
                                   const std::vector<CirclePoint>& reference_points,
                                   const Arc* reference_arc, double tol) {
  TrigPoly p = support_polynomial(spec, plane);
  FaceCertificate cert;
  auto [tmin, vmin] = global_min(p);
  (void)tmin;
  cert.global_min_value = vmin;
  cert.is_supporting = vmin >= -support_tolerance(plane);
  cert.min_opposite_gap = std::numeric_limits<double>::infinity();
  if (!cert.is_supporting) return cert;

  cert.contact_set = circle_roots(p, tol);

  std::vector<CirclePoint> contact_points;
  contact_points.reserve(cert.contact_set.roots.size());
  for (const auto& root : cert.contact_set.roots) contact_points.push_back(root.location);
  cert.face_dim = affine_rank(spec, contact_points);

  for (const auto& root : cert.contact_set.roots) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& ref : reference_points) {
      nearest = std::min(nearest, arc_distance(root.location, ref));
    }
    if (nearest > kContactMatchTolerance) cert.extra_contacts.push_back(root.location);
  }

  for (const auto& s : cert.extra_contacts) {
    for (const auto& ref : reference_points) {
      double gap = arc_distance(s, CirclePoint(ref.value() + kPi));
      cert.min_opposite_gap = std::min(cert.min_opposite_gap, gap);
    }
    if (reference_arc != nullptr && !reference_arc->opposite().contains(s)) {
      cert.extras_localized = false;
    }
  }
  return cert;
}

FaceCertificate verify_support(const CurveSpec& spec, const Hyperplane& plane,
                               const TangencyPattern& pattern, double tol) {
  std::vector<CirclePoint> refs;
  refs.reserve(pattern.entries().size());
  for (const auto& e : pattern.entries()) refs.push_back(e.point);
  Arc arc = pattern.arc();
  return certify_hyperplane(spec, plane, refs, &arc, tol);
}

double opposite_arc_distance(const CurveSpec& spec, const Hyperplane& plane, const Arc& arc) {
  TrigPoly p = support_polynomial(spec, plane);
  Arc opp = arc.opposite();
  int n = 512 * spec.k;
  double step = opp.length / (n - 1);
  std::vector<double> vals = eval_on_grid(p, opp.start(), step, n);
  int best = 0;
  double best_abs = std::abs(vals[0]);
  for (int i = 1; i < n; ++i) {
    double a = std::abs(vals[static_cast<size_t>(i)]);
    if (a < best_abs) {
      best_abs = a;
      best = i;
    }
  }
  // local polish on |p| via a short ternary refinement
  double lo = opp.start() + (best - 1) * step;
  double hi = opp.start() + (best + 1) * step;
  lo = std::max(lo, opp.start());
  hi = std::min(hi, opp.start() + opp.length);
  for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
    double m1 = lo + (hi - lo) / 3.0;
    double m2 = hi - (hi - lo) / 3.0;
    if (std::abs(p(m1)) < std::abs(p(m2))) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return std::min(best_abs, std::abs(p(0.5 * (lo + hi))));
}

double contact_separation(const TangencyPattern& pattern, CirclePoint s) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : pattern.entries()) {
    best = std::min(best, arc_distance(s, CirclePoint(e.point.value() + kPi)));
  }
  return best;
}

}  // namespace orbitope
