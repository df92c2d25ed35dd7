#include <doctest.h>

#include <cmath>
#include <random>

#include "orbitope/bounds.hpp"
#include "orbitope/errors.hpp"
#include "orbitope/sm_curve.hpp"

using namespace orbitope;

namespace {

// Independent root of gap(k, .) on the direct formula, no series switch.
double oracle_epsilon_star(int k) {
  auto g = [&](double e) { return 0.5 * (k - 1.0 - std::sin(2.0 * k * e) / (2.0 * std::sin(e))); };
  double hi = k >= 2 ? kPi / (2.0 * k) : kPi - 1e-9;
  double lo = 1e-6;
  REQUIRE(g(lo) < 0.0);
  REQUIRE(g(hi) > 0.0);
  while (hi - lo > 1e-13) {
    double m = 0.5 * (lo + hi);
    (g(m) < 0.0 ? lo : hi) = m;
  }
  return 0.5 * (lo + hi);
}

// Independent threshold for the refined experiment: root in eps of
// sum_j sin^4((2j-1) eps / 2) = 1/2 under the symmetric placement.
double oracle_refined_threshold(int k) {
  auto f = [&](double e) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) {
      double v = std::sin((2.0 * j - 1.0) * e / 2.0);
      s += v * v * v * v;
    }
    return s - 0.5;
  };
  double lo = 1e-8, hi = 2.0;
  while (f(hi) < 0.0) hi *= 1.5;
  // first crossing: scan then bisect
  double prev = lo;
  for (int i = 1; i <= 4000; ++i) {
    double x = lo + (hi - lo) * i / 4000.0;
    if (f(x) >= 0.0) {
      hi = x;
      lo = prev;
      break;
    }
    prev = x;
  }
  while (hi - lo > 1e-12) {
    double m = 0.5 * (lo + hi);
    (f(m) < 0.0 ? lo : hi) = m;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("gap limit, closed form at k=1, and domain") {
  for (int k : {1, 2, 5, 20}) CHECK(gap(k, 0.0) == doctest::Approx(-0.5));
  // gap(1, eps) = -cos(eps)/2, so the k=1 root sits at pi/2
  CHECK(gap(1, kPi / 2.0) == doctest::Approx(0.0).epsilon(1e-14));
  for (double e : {0.3, 1.0, 2.0}) {
    CHECK(gap(1, e) == doctest::Approx(-std::cos(e) / 2.0).epsilon(1e-13));
  }
  CHECK(gap(2, 0.4852) == doctest::Approx(0.0).epsilon(1e-3));
  CHECK_THROWS_AS(gap(2, -0.1), DomainError);
  CHECK_THROWS_AS(gap(2, kPi), DomainError);
  CHECK_THROWS_AS(gap(0, 0.1), DomainError);
}

TEST_CASE("series branch matches the direct formula near the switch") {
  for (int k : {1, 2, 7, 20, 50}) {
    for (double e : {2e-5, 6e-5, 1e-4 - 1e-12}) {
      double direct = 0.5 * (k - 1.0 - std::sin(2.0 * k * e) / (2.0 * std::sin(e)));
      CHECK(std::abs(gap(k, e) - direct) < 1e-12);
    }
  }
}

TEST_CASE("summation identity behind the gap function") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(1e-3, kTwoPi - 1e-3);
  for (int trial = 0; trial < 1000; ++trial) {
    int k = 1 + static_cast<int>(rng() % 50);
    double theta = u(rng);
    if (std::abs(theta - kPi) < 1e-3) continue;
    double sum = 0.0;
    for (int i = 1; i <= k; ++i) sum += std::cos((2.0 * i - 1.0) * theta);
    CHECK(std::abs(sum - std::sin(2.0 * k * theta) / (2.0 * std::sin(theta))) < 1e-10);
  }
}

TEST_CASE("gap matches the midpoint geometry") {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> ut(0.0, kTwoPi);
  std::uniform_real_distribution<double> ue(1e-6, kPi - 0.1);
  for (int trial = 0; trial < 1000; ++trial) {
    int k = 1 + static_cast<int>(rng() % 20);
    CurveSpec spec(k);
    double t = ut(rng), eps = ue(rng);
    Eigen::VectorXd sum = eval(spec, CirclePoint(t + kPi + eps)) + eval(spec, CirclePoint(t));
    double defect = sum.squaredNorm() / 4.0 - 0.5;
    CHECK(std::abs(defect - gap(k, eps)) < 1e-10);
  }
}

TEST_CASE("envelope dominates the gap on its domain") {
  CHECK(gap_upper_envelope(1, 1.0) == doctest::Approx(-0.5 + 1.0 / 3.0));
  CHECK(gap(1, 1.0) < gap_upper_envelope(1, 1.0));
  // the envelope root is exactly the contact-separation constant
  double eps3 = std::sqrt(1.5) * std::pow(3.0, -1.5);
  CHECK(std::abs(gap_upper_envelope(3, eps3)) < 1e-15);
  CHECK_THROWS_AS(gap_upper_envelope(2, 0.0), DomainError);
  CHECK_THROWS_AS(gap_upper_envelope(2, kPi / 4.0 + 1e-9), DomainError);

  std::mt19937_64 rng(21);
  for (int k = 1; k <= 20; ++k) {
    std::uniform_real_distribution<double> u(1e-6 * kPi / (2 * k), kPi / (2 * k));
    for (int i = 0; i < 1000; ++i) {
      double eps = u(rng);
      CHECK(gap(k, eps) < gap_upper_envelope(k, eps));
    }
  }
}

TEST_CASE("epsilon_star fixtures and the contact-separation constant") {
  CHECK(epsilon_star(1) == doctest::Approx(kPi / 2.0).epsilon(1e-9));
  double oracle2 = oracle_epsilon_star(2);
  CHECK(epsilon_star(2) == doctest::Approx(oracle2).epsilon(1e-9));
  CHECK(std::abs(epsilon_star(2) - 0.4852) < 1e-3);

  for (int k = 1; k <= 50; ++k) {
    double es = epsilon_star(k, 1e-12);
    CHECK(es > std::sqrt(1.5) * std::pow(static_cast<double>(k), -1.5));
  }
}

TEST_CASE("profile constants are tied exactly") {
  for (int k : {1, 2, 3, 10, 50}) {
    GapProfile profile = gap_profile(k);
    CHECK(profile.thm12_bound == 2.0 * profile.thm31_bound);
    CHECK(profile.epsilon_star > profile.thm31_bound);
    CHECK(profile.thm31_bound == doctest::Approx(std::sqrt(1.5) * std::pow(k, -1.5)));
  }
}

TEST_CASE("refined point reduces to curve points at the ends") {
  CurveSpec spec(3);
  CirclePoint ti(0.4), tj(0.9);
  Eigen::VectorXd at_ti = refined_point(spec, ti, ti, tj);
  CHECK((at_ti - eval(spec, ti)).lpNorm<Eigen::Infinity>() < 1e-13);
  Eigen::VectorXd at_tj = refined_point(spec, tj, ti, tj);
  CHECK((at_tj - eval(spec, tj)).lpNorm<Eigen::Infinity>() < 1e-13);
  CHECK_THROWS_AS(refined_point(spec, ti, ti, CirclePoint(0.4 + 1e-13)), CoincidentPoints);
}

TEST_CASE("refined-point coefficients are affine") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int trial = 0; trial < 200; ++trial) {
    double s = u(rng), a = u(rng), b = u(rng);
    if (std::abs(a - b) < 1e-6) continue;
    double ci = (s - b) / (2.0 * (a - b));
    double cj = (a - s) / (2.0 * (a - b));
    CHECK(std::abs(0.5 + ci + cj - 1.0) < 1e-13 * (1.0 + std::abs(ci) + std::abs(cj)));
    // the operation applies exactly these weights to the three curve points
    CurveSpec spec(2);
    Eigen::VectorXd direct = 0.5 * eval(spec, CirclePoint(s)) + ci * eval(spec, CirclePoint(a)) +
                             cj * eval(spec, CirclePoint(b));
    Eigen::VectorXd rp = refined_point(spec, CirclePoint(s), CirclePoint(a), CirclePoint(b));
    CHECK((rp - direct).lpNorm<Eigen::Infinity>() < 1e-12);
  }
}

TEST_CASE("refined scaling experiment") {
  RefinedScalingResult result = refined_scaling_experiment({4, 8, 16, 32, 64}, 42);
  REQUIRE(result.rows.size() == 5);

  // the fitted exponent lies between the two closed-form exponents
  CHECK(result.fitted_exponent > -1.6);
  CHECK(result.fitted_exponent < -1.0);

  double prev = 1e9;
  for (const auto& row : result.rows) {
    // thresholds decrease with k and clear the contact-separation constant
    CHECK(row.threshold_eps < prev);
    prev = row.threshold_eps;
    CHECK(row.threshold_eps > std::sqrt(1.5) * std::pow(static_cast<double>(row.k), -1.5));
    // the optimized separation is the symmetric placement
    CHECK(row.delta == doctest::Approx(2.0 * row.threshold_eps).epsilon(1e-3));
    // independent closed-form oracle for the symmetric placement
    CHECK(row.threshold_eps == doctest::Approx(oracle_refined_threshold(row.k)).epsilon(1e-6));
  }
  CHECK_THROWS_AS(refined_scaling_experiment({1}, 0), DomainError);
}

}  // TEST_SUITE
