#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orbitope/face_verifier.hpp"
#include "orbitope/sm_curve.hpp"
#include "orbitope/tangent_hyperplane.hpp"

namespace orbitope {

/// Bracket for the largest arc length on which every k-point tangency
/// configuration stays a face. The lower end is heuristic (finite search
/// starts); the upper end is rigorous up to search completeness.
struct PhiEstimate {
  int k;
  double phi_lower_numeric;  // largest arc length certified safe
  double phi_upper_numeric;  // smallest arc length with a failing configuration (pi if none found)
  double paper_bound;        // sqrt(6) * k^{-3/2}
  int trials;                // arc lengths probed
  uint64_t seed;
};

struct WorstConfiguration {
  TangencyPattern pattern;
  double score;  // certified global minimum of the support polynomial
  FaceCertificate certificate;
};

/// Multi-start coordinate-descent search for the worst k-point configuration
/// (each point multiplicity 2) inside the arc of length psi centered at 0.
/// Minimizes the signed clearance of the support polynomial over the opposite
/// arc, mirroring the infimum of dist(H, x(arc+pi)). Deterministic given the
/// seed and independent of the thread count.
WorstConfiguration worst_configuration(const CurveSpec& spec, double psi, int starts,
                                       uint64_t seed);

/// Whether a configuration counts as safe: certified supporting with the
/// contact set exactly the pattern.
bool configuration_safe(const WorstConfiguration& wc);

/// Bisection on arc length between the known-safe seed sqrt(6) k^{-3/2} and
/// pi. Throws SearchInconclusive if the seed itself fails to certify, which
/// would numerically falsify the proven lower bound.
PhiEstimate estimate_phi(const CurveSpec& spec, double tol, int starts, uint64_t seed);

struct PhiTableRow {
  int k;
  double paper_bound;
  std::optional<double> phi_lower_numeric;  // absent on bound-only rows
  std::optional<double> phi_upper_numeric;
};

/// One row per k up to k_max; full estimation for k <= 4, bound-only beyond.
std::vector<PhiTableRow> bound_comparison_table(int k_max, double tol, int starts, uint64_t seed);

}  // namespace orbitope
