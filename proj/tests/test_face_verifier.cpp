#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "orbitope/errors.hpp"
#include "orbitope/face_verifier.hpp"

using namespace orbitope;

namespace {

TangencyPattern pattern_of(const CurveSpec& spec, std::vector<std::pair<double, int>> pts,
                           double arc_center, double arc_length) {
  std::vector<TangencyEntry> entries;
  for (auto [t, m] : pts) entries.push_back({CirclePoint(t), m});
  return TangencyPattern::create(spec, entries, Arc(CirclePoint(arc_center), arc_length));
}

// Symmetric k=2 pair at +-span/2; by rotation invariance its safety depends
// only on the span.
std::pair<Hyperplane, TangencyPattern> symmetric_pair(const CurveSpec& spec, double span) {
  TangencyPattern p = pattern_of(spec, {{-span / 2, 2}, {span / 2, 2}}, 0.0, span + 1e-9);
  return {construct_hyperplane(spec, p), p};
}

}  // namespace

TEST_SUITE("face_verifier") {

TEST_CASE("point face of the disc") {
  CurveSpec spec(1);
  TangencyPattern pattern = pattern_of(spec, {{0.0, 2}}, 0.0, 1.0);
  FaceCertificate cert = verify_support(spec, construct_hyperplane(spec, pattern), pattern);
  CHECK(cert.is_supporting);
  REQUIRE(cert.contact_set.roots.size() == 1);
  CHECK(arc_distance(cert.contact_set.roots[0].location, CirclePoint(0.0)) < 1e-9);
  CHECK(cert.contact_set.roots[0].multiplicity == 2);
  CHECK(cert.face_dim == 0);
  CHECK(cert.extra_contacts.empty());
  CHECK(std::isinf(cert.min_opposite_gap));
  CHECK(cert.extras_localized);
}

TEST_CASE("osculating point face of the k=2 orbitope") {
  CurveSpec spec(2);
  TangencyPattern pattern = pattern_of(spec, {{0.0, 4}}, 0.0, 1.0);
  FaceCertificate cert = verify_support(spec, construct_hyperplane(spec, pattern), pattern);
  CHECK(cert.is_supporting);
  REQUIRE(cert.contact_set.roots.size() == 1);
  CHECK(cert.contact_set.roots[0].multiplicity == 4);
  CHECK(cert.face_dim == 0);
  CHECK(cert.extra_contacts.empty());
}

TEST_CASE("wide pair is rejected") {
  CurveSpec spec(2);
  auto [plane, pattern] = symmetric_pair(spec, 2.4);

  // grid oracle: the support polynomial dips negative
  TrigPoly p = support_polynomial(spec, plane);
  double grid_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 100000; ++i) grid_min = std::min(grid_min, p(kTwoPi * i / 100000));
  REQUIRE(grid_min < -1e-3);

  FaceCertificate cert = verify_support(spec, plane, pattern);
  CHECK_FALSE(cert.is_supporting);
  CHECK(cert.global_min_value < -1e-3);
  CHECK(cert.global_min_value == doctest::Approx(grid_min).epsilon(1e-6));
  CHECK(cert.contact_set.roots.empty());
  CHECK(cert.face_dim == -1);
}

TEST_CASE("small pair is an edge") {
  CurveSpec spec(2);
  auto [plane, pattern] = symmetric_pair(spec, 0.8);
  FaceCertificate cert = verify_support(spec, plane, pattern);
  CHECK(cert.is_supporting);
  CHECK(cert.contact_set.roots.size() == 2);
  CHECK(cert.face_dim == 1);
  CHECK(cert.extra_contacts.empty());
  // supporting with contacts exactly the pattern: positive opposite clearance
  CHECK(opposite_arc_distance(spec, plane, pattern.arc()) > 1e-6);
}

TEST_CASE("opposite arc distance closed form for the disc") {
  CurveSpec spec(1);
  TangencyPattern pattern = pattern_of(spec, {{0.0, 2}}, 0.0, 1.0);
  Hyperplane plane = construct_hyperplane(spec, pattern);
  // min over s in [pi - 1/2, pi + 1/2] of 1 - cos s
  double expected = 1.0 - std::cos(kPi - 0.5);
  CHECK(opposite_arc_distance(spec, plane, pattern.arc()) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("opposite arc distance positive for the osculating plane") {
  CurveSpec spec(2);
  TangencyPattern pattern = pattern_of(spec, {{0.0, 4}}, 0.0, 0.2);
  Hyperplane plane = construct_hyperplane(spec, pattern);
  double dist = opposite_arc_distance(spec, plane, pattern.arc());
  CHECK(dist > 0.0);
  // grid oracle over the opposite arc
  TrigPoly p = support_polynomial(spec, plane);
  double oracle = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 20000; ++i) {
    double s = (kPi - 0.1) + 0.2 * i / 20000;
    oracle = std::min(oracle, std::abs(p(s)));
  }
  CHECK(dist == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("contact separation distances") {
  CurveSpec spec1(1);
  TangencyPattern single = pattern_of(spec1, {{0.0, 2}}, 0.0, 1.0);
  CHECK(contact_separation(single, CirclePoint(kPi)) == doctest::Approx(0.0));
  CHECK(contact_separation(single, CirclePoint(kPi + 0.3)) == doctest::Approx(0.3));

  CurveSpec spec2(2);
  TangencyPattern pair = pattern_of(spec2, {{-0.1, 2}, {0.2, 2}}, 0.05, 1.0);
  CHECK(contact_separation(pair, CirclePoint(kPi)) == doctest::Approx(0.1));
}

TEST_CASE("boundary pair meets the opposite arc with the proven separation") {
  CurveSpec spec(2);
  // bisect the span at which the pair stops being a certified face; at that
  // span the plane first touches the opposite arc (at pi, by symmetry)
  auto pair_supports = [&](double span) {
    auto [plane, pattern] = symmetric_pair(spec, span);
    (void)pattern;
    auto [t, v] = global_min(support_polynomial(spec, plane));
    (void)t;
    return v >= -support_tolerance(plane);
  };
  double lo = 0.5, hi = 3.0;
  REQUIRE(pair_supports(lo));
  REQUIRE_FALSE(pair_supports(hi));
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    (pair_supports(mid) ? lo : hi) = mid;
  }
  double critical_span = lo;  // safe side of the boundary
  // the critical pair span is 2*pi/3 for the four-dimensional orbitope
  CHECK(critical_span == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-9));

  auto [plane, pattern] = symmetric_pair(spec, critical_span);
  FaceCertificate cert = verify_support(spec, plane, pattern);
  CHECK(cert.is_supporting);
  REQUIRE(cert.extra_contacts.size() == 1);
  CHECK(arc_distance(cert.extra_contacts[0], CirclePoint(kPi)) < 1e-5);
  CHECK(cert.extras_localized);

  // separation between the new contact and the antipodes of the tangencies
  double sep = contact_separation(pattern, cert.extra_contacts[0]);
  CHECK(sep == doctest::Approx(kPi / 3.0).epsilon(1e-5));
  CHECK(sep > std::sqrt(1.5) * std::pow(2.0, -1.5) - 1e-9);
  CHECK(cert.min_opposite_gap == doctest::Approx(sep).epsilon(1e-9));

  // midpoints of contact pairs stay outside the inscribed sphere
  std::vector<CirclePoint> contacts;
  for (const auto& r : cert.contact_set.roots) contacts.push_back(r.location);
  for (size_t a = 0; a < contacts.size(); ++a) {
    for (size_t b = a + 1; b < contacts.size(); ++b) {
      double norm = 0.5 * (eval(spec, contacts[a]) + eval(spec, contacts[b])).norm();
      CHECK(norm >= 1.0 / std::sqrt(2.0) - 1e-9);
    }
  }
}

TEST_CASE("random supporting planes keep extras on the opposite arc") {
  std::mt19937_64 rng(77);
  int supported = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int k = 2 + static_cast<int>(rng() % 3);
    CurveSpec spec(k);
    double psi = 0.4 * kPi;
    std::uniform_real_distribution<double> unit(0.1, 0.9);
    std::vector<std::pair<double, int>> pts;
    for (int i = 0; i < k; ++i) {
      double lo = -0.45 * psi + 0.9 * psi * i / k;
      pts.push_back({lo + 0.9 * psi / k * unit(rng), 2});
    }
    TangencyPattern pattern = pattern_of(spec, pts, 0.0, psi);
    FaceCertificate cert = verify_support(spec, construct_hyperplane(spec, pattern), pattern);
    if (!cert.is_supporting) continue;
    ++supported;
    CHECK(cert.extras_localized);
    if (cert.extra_contacts.empty()) {
      CHECK(opposite_arc_distance(spec, construct_hyperplane(spec, pattern), pattern.arc()) > 0.0);
    }
  }
  CHECK(supported > 0);
}

}  // TEST_SUITE
