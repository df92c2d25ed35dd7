#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <utility>
#include <vector>

#include "orbitope/face_verifier.hpp"
#include "orbitope/sm_curve.hpp"

namespace orbitope {

/// Minimum volume ellipsoid of the orbitope, specialized to this curve: the
/// ambient space splits into k coordinate pairs of equal weight 1/k and unit
/// base norm, so the ellipsoid is the sphere of radius sqrt(k).
struct MinVolEllipsoid {
  int k;
  double block_weight;                  // dim V_i / dim V = 1/k
  std::vector<double> base_block_norms; // <v_i, v_i> = 1 for each pair
  double radius;                        // sqrt(k)
};

MinVolEllipsoid min_vol_ellipsoid(int k);

/// Membership test sum_i (1/k) |x_pair_i|^2 <= 1 (+1e-12 slack), which
/// reduces to |x|^2 <= k. Throws DimensionMismatch on wrong length.
bool emin_membership(const MinVolEllipsoid& e, const Eigen::VectorXd& x);

/// Radius sqrt(k) of the minimum volume ellipsoid.
double emin_radius(int k);

/// The (lower, upper) = (1/sqrt(2), 1) sandwich for the inradius; the lower
/// end is (2k)^{-1/2} * sqrt(k), independent of k.
std::pair<double, double> inradius_bounds(int k);

/// Numeric inradius: min over unit directions u of max_t <u, x(t)>, by
/// multi-start projected subgradient descent over u with the inner maximum
/// taken from the support polynomial of u. grid counts the random direction
/// starts added to the 2k coordinate directions. Deterministic given seed.
double inradius_estimate(const CurveSpec& spec, int grid, uint64_t seed);

/// The hyperplane x_{2k-1} = 1 (stored in the orientation whose support
/// polynomial 1 - cos((2k-1)t) is nonnegative).
Hyperplane top_face_hyperplane(const CurveSpec& spec);

/// Certificate for the x_{2k-1} = 1 face: 2k-1 contacts at the multiples of
/// 2*pi/(2k-1) and face dimension 2k-2. Requires k >= 2.
FaceCertificate top_face_certificate(const CurveSpec& spec);

}  // namespace orbitope
