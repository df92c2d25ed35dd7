#include "orbitope/tangent_hyperplane.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

#include "orbitope/errors.hpp"

namespace orbitope {

namespace {
constexpr double kMergeSeparation = 1e-6;
// null-space extraction threshold for DegeneratePattern decisions
constexpr double kNullSpaceThreshold = 1e-10;
// numeric-rank threshold for the independence diagnostic: a modest multiple
// of n*eps, since genuine singular values of clustered confluent families can
// sit many decades below the null-space threshold while still being nonzero
constexpr double kRankThreshold = 1e-13;
}  // namespace

TangencyPattern::TangencyPattern(std::vector<TangencyEntry> entries, const Arc& arc)
    : entries_(std::move(entries)), arc_(arc) {}

TangencyPattern TangencyPattern::create(const CurveSpec& spec, std::vector<TangencyEntry> entries,
                                        const Arc& arc) {
  if (!(arc.length < kPi)) throw DomainError("tangency pattern arc must be shorter than pi");
  if (entries.empty()) throw DomainError("tangency pattern needs at least one point");
  for (const auto& e : entries) {
    if (e.multiplicity < 2) throw DomainError("tangency multiplicities must be at least 2");
    if (!arc.contains(e.point)) throw DomainError("tangency point outside the pattern arc");
  }
  std::sort(entries.begin(), entries.end(), [&arc](const TangencyEntry& a, const TangencyEntry& b) {
    return arc.offset_from_start(a.point) < arc.offset_from_start(b.point);
  });
  // merge nearly coincident points, summing multiplicities
  std::vector<TangencyEntry> merged;
  merged.push_back(entries.front());
  for (size_t i = 1; i < entries.size(); ++i) {
    if (arc_distance(entries[i].point, merged.back().point) < kMergeSeparation) {
      merged.back().multiplicity += entries[i].multiplicity;
    } else {
      merged.push_back(entries[i]);
    }
  }
  int total = 0;
  for (const auto& e : merged) total += e.multiplicity;
  if (total != 2 * spec.k) throw DomainError("tangency multiplicities must sum to 2k");
  return TangencyPattern(std::move(merged), arc);
}

int TangencyPattern::total_multiplicity() const {
  int total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

bool TangencyPattern::has_odd_multiplicity() const {
  for (const auto& e : entries_) {
    if (e.multiplicity % 2 != 0) return true;
  }
  return false;
}

Eigen::MatrixXd tangency_matrix(const CurveSpec& spec, const TangencyPattern& pattern) {
  const auto& entries = pattern.entries();
  int l = static_cast<int>(entries.size());
  Eigen::MatrixXd m(2 * spec.k - 1, spec.dim());
  int row = 0;
  Eigen::VectorXd last = eval(spec, entries[static_cast<size_t>(l - 1)].point);
  for (int i = 0; i + 1 < l; ++i) {
    m.row(row++) = (eval(spec, entries[static_cast<size_t>(i)].point) - last).transpose();
  }
  for (int i = 0; i < l; ++i) {
    for (int n = 1; n < entries[static_cast<size_t>(i)].multiplicity; ++n) {
      m.row(row++) = deriv(spec, entries[static_cast<size_t>(i)].point, n).transpose();
    }
  }
  return m;
}

namespace {

// Row-equilibrated copy; derivative rows mix scales up to (2k-1)^{m-1}, and
// rank decisions must not depend on that.
Eigen::MatrixXd equilibrate_rows(const Eigen::MatrixXd& m) {
  Eigen::MatrixXd e = m;
  for (int r = 0; r < e.rows(); ++r) {
    double norm = e.row(r).norm();
    if (norm > 0.0) e.row(r) /= norm;
  }
  return e;
}

}  // namespace

IndependenceReport independence_check(const CurveSpec& spec, const TangencyPattern& pattern) {
  Eigen::MatrixXd family(2 * spec.k, spec.dim());
  family.topRows(2 * spec.k - 1) = tangency_matrix(spec, pattern);
  family.row(2 * spec.k - 1) =
      deriv(spec, pattern.entries().front().point, pattern.entries().front().multiplicity)
          .transpose();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(equilibrate_rows(family));
  const auto& sigma = svd.singularValues();
  double threshold = kRankThreshold * sigma[0];
  int rank = 0;
  for (int i = 0; i < sigma.size(); ++i) {
    if (sigma[i] > threshold) ++rank;
  }
  double smallest = sigma[sigma.size() - 1];
  double condition = smallest > 0.0 ? sigma[0] / smallest : std::numeric_limits<double>::infinity();
  return {rank, condition};
}

Hyperplane construct_hyperplane(const CurveSpec& spec, const TangencyPattern& pattern) {
  Eigen::MatrixXd m = tangency_matrix(spec, pattern);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(equilibrate_rows(m), Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  // null space of the (2k-1) x 2k system must be exactly one-dimensional
  if (sigma[sigma.size() - 1] <= kNullSpaceThreshold * sigma[0]) {
    throw DegeneratePattern("tangency system is rank deficient; null space is not a line");
  }
  Eigen::VectorXd normal = svd.matrixV().col(spec.dim() - 1);
  normal.normalize();
  double offset = normal.dot(eval(spec, pattern.entries().back().point));

  // orient so p >= 0 holds at the antipode of the arc midpoint
  CirclePoint probe(pattern.arc().center.value() + kPi);
  double probe_value = normal.dot(eval(spec, probe)) - offset;
  if (probe_value < 0.0) {
    normal = -normal;
    offset = -offset;
  }
  return {normal, offset};
}

TrigPoly support_polynomial(const CurveSpec& spec, const Hyperplane& plane) {
  if (plane.normal.size() != spec.dim()) {
    throw DimensionMismatch("hyperplane normal has the wrong dimension");
  }
  std::vector<HarmonicTerm> terms;
  terms.reserve(static_cast<size_t>(spec.k));
  for (int j = 0; j < spec.k; ++j) {
    terms.push_back({spec.frequency(j), plane.normal[2 * j], plane.normal[2 * j + 1]});
  }
  return TrigPoly(-plane.offset, std::move(terms));
}

}  // namespace orbitope
