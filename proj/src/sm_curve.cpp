#include "orbitope/sm_curve.hpp"

#include <cmath>
#include <stdexcept>

#include "orbitope/errors.hpp"

namespace orbitope {

double canonical_angle(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;  // fmod result can round up to 2*pi
  return r;
}

double arc_distance(CirclePoint a, CirclePoint b) {
  double d = std::abs(a.value() - b.value());
  return std::min(d, kTwoPi - d);
}

Arc::Arc(CirclePoint c, double len) : center(c), length(len) {
  if (!(len > 0.0) || !(len < kTwoPi)) {
    throw DomainError("arc length must lie in (0, 2*pi)");
  }
}

double Arc::start() const { return canonical_angle(center.value() - 0.5 * length); }

double Arc::offset_from_start(CirclePoint t) const {
  return canonical_angle(t.value() - start());
}

bool Arc::contains(CirclePoint t) const { return offset_from_start(t) < length; }

Arc Arc::opposite() const { return Arc(CirclePoint(center.value() + kPi), length); }

CurveSpec::CurveSpec(int k_in) : k(k_in) {
  if (k < 1) throw DomainError("curve spec requires k >= 1");
}

std::vector<int> CurveSpec::frequencies() const {
  std::vector<int> f(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) f[static_cast<size_t>(j)] = 2 * j + 1;
  return f;
}

Eigen::VectorXd eval(const CurveSpec& spec, CirclePoint t) {
  Eigen::VectorXd x(spec.dim());
  for (int j = 0; j < spec.k; ++j) {
    double arg = spec.frequency(j) * t.value();
    x[2 * j] = std::cos(arg);
    x[2 * j + 1] = std::sin(arg);
  }
  return x;
}

Eigen::VectorXd deriv(const CurveSpec& spec, CirclePoint t, int n) {
  if (n < 1) throw DomainError("derivative order must be >= 1");
  Eigen::VectorXd x(spec.dim());
  double shift = n * (kPi / 2.0);
  for (int j = 0; j < spec.k; ++j) {
    double f = spec.frequency(j);
    double scale = std::pow(f, n);
    double arg = f * t.value() + shift;
    x[2 * j] = scale * std::cos(arg);
    x[2 * j + 1] = scale * std::sin(arg);
  }
  return x;
}

Eigen::VectorXd antipode(const CurveSpec& spec, CirclePoint t) {
  return eval(spec, CirclePoint(t.value() + kPi));
}

}  // namespace orbitope
