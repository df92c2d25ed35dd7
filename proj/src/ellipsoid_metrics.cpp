#include "orbitope/ellipsoid_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "orbitope/errors.hpp"
#include "orbitope/parallel.hpp"
#include "orbitope/tangent_hyperplane.hpp"
#include "orbitope/trig_poly.hpp"

namespace orbitope {

MinVolEllipsoid min_vol_ellipsoid(int k) {
  if (k < 1) throw DomainError("ellipsoid requires k >= 1");
  return {k, 1.0 / k, std::vector<double>(static_cast<size_t>(k), 1.0),
          std::sqrt(static_cast<double>(k))};
}

bool emin_membership(const MinVolEllipsoid& e, const Eigen::VectorXd& x) {
  if (x.size() != 2 * e.k) throw DimensionMismatch("membership test needs a vector in R^{2k}");
  double sum = 0.0;
  for (int i = 0; i < e.k; ++i) {
    double pair_sq = x[2 * i] * x[2 * i] + x[2 * i + 1] * x[2 * i + 1];
    sum += e.block_weight * pair_sq / e.base_block_norms[static_cast<size_t>(i)];
  }
  return sum <= 1.0 + 1e-12;
}

double emin_radius(int k) {
  if (k < 1) throw DomainError("radius requires k >= 1");
  return std::sqrt(static_cast<double>(k));
}

std::pair<double, double> inradius_bounds(int k) {
  if (k < 1) throw DomainError("inradius bounds require k >= 1");
  // (2k)^{-1/2} * sqrt(k) = 1/sqrt(2) for every k
  return {1.0 / std::sqrt(2.0), 1.0};
}

namespace {

TrigPoly direction_polynomial(const CurveSpec& spec, const Eigen::VectorXd& u) {
  std::vector<HarmonicTerm> terms;
  terms.reserve(static_cast<size_t>(spec.k));
  for (int j = 0; j < spec.k; ++j) {
    terms.push_back({spec.frequency(j), u[2 * j], u[2 * j + 1]});
  }
  return TrigPoly(0.0, std::move(terms));
}

// Support value h(u) = max_t <u, x(t)> with its maximizer, from a grid scan
// plus golden polish. Cheap inner step of the descent; the certified value
// comes from global_max at the end.
std::pair<double, double> support_scan(const CurveSpec& spec, const Eigen::VectorXd& u) {
  TrigPoly np = direction_polynomial(spec, -u);
  auto [t, v] = min_on_interval(np, 0.0, kTwoPi, 64 * std::max(np.degree(), 1));
  return {-v, t};
}

double descend_direction(const CurveSpec& spec, Eigen::VectorXd u) {
  u.normalize();
  auto [h, tstar] = support_scan(spec, u);
  double step = 0.3;
  for (int iter = 0; iter < 300 && step > 1e-10; ++iter) {
    Eigen::VectorXd g = eval(spec, CirclePoint(tstar));  // supergradient of h at u
    Eigen::VectorXd tangent = g - g.dot(u) * u;
    if (tangent.norm() < 1e-13) break;
    Eigen::VectorXd candidate = (u - step * tangent).normalized();
    auto [hc, tc] = support_scan(spec, candidate);
    if (hc < h) {
      u = candidate;
      h = hc;
      tstar = tc;
      step *= 1.2;
    } else {
      step *= 0.5;
    }
  }
  auto [tmax, certified] = global_max(direction_polynomial(spec, u));
  (void)tmax;
  return certified;
}

}  // namespace

double inradius_estimate(const CurveSpec& spec, int grid, uint64_t seed) {
  if (spec.k > 8) throw DomainError("inradius estimate supports k <= 8");
  if (grid < 0) throw DomainError("inradius estimate needs a nonnegative start count");

  std::vector<Eigen::VectorXd> starts;
  starts.reserve(static_cast<size_t>(spec.dim() + grid));
  for (int i = 0; i < spec.dim(); ++i) {
    starts.push_back(Eigen::VectorXd::Unit(spec.dim(), i));
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < grid; ++i) {
    Eigen::VectorXd u(spec.dim());
    for (int j = 0; j < spec.dim(); ++j) u[j] = gauss(rng);
    if (u.norm() < 1e-12) u = Eigen::VectorXd::Unit(spec.dim(), 0);
    starts.push_back(u.normalized());
  }

  std::vector<double> values(starts.size());
  parallel_for(static_cast<int>(starts.size()), [&](int i) {
    values[static_cast<size_t>(i)] = descend_direction(spec, starts[static_cast<size_t>(i)]);
  });
  return *std::min_element(values.begin(), values.end());
}

Hyperplane top_face_hyperplane(const CurveSpec& spec) {
  // stored as <-e_{2k-1}, x> = -1, the orientation with p = 1 - cos((2k-1)t) >= 0
  Eigen::VectorXd normal = Eigen::VectorXd::Zero(spec.dim());
  normal[spec.dim() - 2] = -1.0;
  return {normal, -1.0};
}

FaceCertificate top_face_certificate(const CurveSpec& spec) {
  if (spec.k < 2) throw DomainError("the top-face certificate requires k >= 2");
  Hyperplane plane = top_face_hyperplane(spec);
  int contacts = 2 * spec.k - 1;
  std::vector<CirclePoint> refs;
  refs.reserve(static_cast<size_t>(contacts));
  for (int j = 0; j < contacts; ++j) {
    refs.push_back(CirclePoint(kTwoPi * j / contacts));
  }
  return certify_hyperplane(spec, plane, refs, nullptr);
}

}  // namespace orbitope
