#pragma once

#include <vector>

#include "orbitope/sm_curve.hpp"
#include "orbitope/tangent_hyperplane.hpp"
#include "orbitope/trig_poly.hpp"

namespace orbitope {

/// Verdict of the support / facehood check for one hyperplane.
struct FaceCertificate {
  bool is_supporting = false;
  double global_min_value = 0.0;
  CircleRootSet contact_set;                // empty when not supporting
  int face_dim = -1;                        // affine rank of curve points at contacts
  std::vector<CirclePoint> extra_contacts;  // contacts not matching the input points
  double min_opposite_gap = 0.0;            // min_i |s - pi - t_i| over extras; +inf if none
  bool extras_localized = true;             // every extra lies in the opposite arc
};

/// One-sided support band 1e-9 * (1 + |offset|); tangency pins the minimum of
/// the support polynomial at exactly zero, so the test only needs slack below.
double support_tolerance(const Hyperplane& plane);

/// Certifies whether the hyperplane supports the orbitope and extracts the
/// contact data. reference_points are the tangencies the plane was built
/// from (or the contacts it is expected to have); contacts farther than 1e-6
/// from every reference are reported as extra. When reference_arc is given,
/// extras are checked to lie in its opposite arc.
FaceCertificate certify_hyperplane(const CurveSpec& spec, const Hyperplane& plane,
                                   const std::vector<CirclePoint>& reference_points,
                                   const Arc* reference_arc, double tol = 1e-9);

/// certify_hyperplane against the pattern the plane was constructed from.
FaceCertificate verify_support(const CurveSpec& spec, const Hyperplane& plane,
                               const TangencyPattern& pattern, double tol = 1e-9);

/// min over s in arc+pi of |p(s)|, i.e. the distance from the opposite arc to
/// the hyperplane (the normal is unit). Grid of 512*k points plus local polish.
double opposite_arc_distance(const CurveSpec& spec, const Hyperplane& plane, const Arc& arc);

/// min over i of the arc distance between s and t_i + pi.
double contact_separation(const TangencyPattern& pattern, CirclePoint s);

}  // namespace orbitope
