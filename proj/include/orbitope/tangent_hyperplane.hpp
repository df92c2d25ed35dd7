#pragma once

#include <Eigen/Core>
#include <vector>

#include "orbitope/sm_curve.hpp"
#include "orbitope/trig_poly.hpp"

namespace orbitope {

struct TangencyEntry {
  CirclePoint point;
  int multiplicity;
};

/// Points t_i with multiplicities m_i >= 2 summing to 2k, on an arc shorter
/// than pi. Entries are kept sorted by arc position; points closer than 1e-6
/// are merged with their multiplicities summed, which is exactly the
/// degeneration produced when configurations coalesce during arc-length
/// bisection.
class TangencyPattern {
 public:
  static TangencyPattern create(const CurveSpec& spec, std::vector<TangencyEntry> entries,
                                const Arc& arc);

  const std::vector<TangencyEntry>& entries() const { return entries_; }
  const Arc& arc() const { return arc_; }
  int total_multiplicity() const;
  /// Lemma hypotheses only need m_i > 1, but facehood workflows use even
  /// multiplicities; odd entries are accepted and flagged here.
  bool has_odd_multiplicity() const;

 private:
  TangencyPattern(std::vector<TangencyEntry> entries, const Arc& arc);

  std::vector<TangencyEntry> entries_;
  Arc arc_;
};

/// Affine hyperplane {x : <normal, x> = offset} with |normal| = 1.
struct Hyperplane {
  Eigen::VectorXd normal;
  double offset = 0.0;
};

/// The (2k-1) x 2k system whose null space carries the tangent hyperplane:
/// rows x(t_i) - x(t_l) for i < l, then derivatives d^n x(t_i) for
/// n = 1..m_i-1, grouped by i ascending, n ascending.
Eigen::MatrixXd tangency_matrix(const CurveSpec& spec, const TangencyPattern& pattern);

struct IndependenceReport {
  int rank;
  double condition;  // sigma_max / sigma_min of the row-equilibrated family
};

/// Numeric rank of the full 2k-vector family (tangency rows plus the m_1-th
/// derivative at t_1). Rank 2k is guaranteed for arcs shorter than pi; a
/// deficient rank is reported rather than thrown since it would falsify that
/// guarantee.
IndependenceReport independence_check(const CurveSpec& spec, const TangencyPattern& pattern);

/// The unique hyperplane tangent to the curve at each t_i with multiplicity
/// m_i. The normal spans the null space of tangency_matrix; the sign makes
/// the support polynomial nonnegative at the antipode of the arc midpoint.
/// Throws DegeneratePattern when the null space is not one-dimensional at
/// threshold 1e-10.
Hyperplane construct_hyperplane(const CurveSpec& spec, const TangencyPattern& pattern);

/// Support polynomial p(t) = <normal, x(t)> - offset; odd harmonics up to
/// 2k-1 with constant term -offset.
TrigPoly support_polynomial(const CurveSpec& spec, const Hyperplane& plane);

}  // namespace orbitope
