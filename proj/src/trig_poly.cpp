#include "orbitope/trig_poly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>

#include "orbitope/errors.hpp"

namespace orbitope {

TrigPoly::TrigPoly(double constant, std::vector<HarmonicTerm> terms)
    : c0_(constant), terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(),
            [](const HarmonicTerm& a, const HarmonicTerm& b) { return a.frequency < b.frequency; });
  std::vector<HarmonicTerm> kept;
  kept.reserve(terms_.size());
  for (const auto& term : terms_) {
    if (term.frequency < 1) throw DomainError("harmonic frequencies must be positive");
    if (!kept.empty() && kept.back().frequency == term.frequency) {
      throw DomainError("harmonic frequencies must be strictly increasing");
    }
    if (term.cos_coeff == 0.0 && term.sin_coeff == 0.0) continue;
    kept.push_back(term);
  }
  terms_ = std::move(kept);
}

int TrigPoly::degree() const { return terms_.empty() ? 0 : terms_.back().frequency; }

double TrigPoly::coefficient_norm() const {
  double s = c0_ * c0_;
  for (const auto& term : terms_) {
    s += term.cos_coeff * term.cos_coeff + term.sin_coeff * term.sin_coeff;
  }
  return std::sqrt(s);
}

double TrigPoly::coefficient_max() const {
  double m = std::abs(c0_);
  for (const auto& term : terms_) {
    m = std::max({m, std::abs(term.cos_coeff), std::abs(term.sin_coeff)});
  }
  return m;
}

double TrigPoly::operator()(double t) const {
  double v = c0_;
  for (const auto& term : terms_) {
    double arg = term.frequency * t;
    v += term.cos_coeff * std::cos(arg) + term.sin_coeff * std::sin(arg);
  }
  return v;
}

double eval_poly(const TrigPoly& p, CirclePoint t) { return p(t.value()); }

TrigPoly differentiate(const TrigPoly& p) {
  std::vector<HarmonicTerm> dterms;
  dterms.reserve(p.terms().size());
  for (const auto& term : p.terms()) {
    double f = term.frequency;
    dterms.push_back({term.frequency, f * term.sin_coeff, -f * term.cos_coeff});
  }
  return TrigPoly(0.0, std::move(dterms));
}

TrigPoly derivative(const TrigPoly& p, int n) {
  TrigPoly d = p;
  for (int i = 0; i < n; ++i) d = differentiate(d);
  return d;
}

std::vector<double> eval_on_grid(const TrigPoly& p, double t0, double step, int n) {
  std::vector<double> vals(static_cast<size_t>(n), p.constant());
  for (const auto& term : p.terms()) {
    double c = std::cos(term.frequency * t0);
    double s = std::sin(term.frequency * t0);
    double rc = std::cos(term.frequency * step);
    double rs = std::sin(term.frequency * step);
    for (int i = 0; i < n; ++i) {
      vals[static_cast<size_t>(i)] += term.cos_coeff * c + term.sin_coeff * s;
      double cn = c * rc - s * rs;
      s = s * rc + c * rs;
      c = cn;
    }
  }
  return vals;
}

int CircleRootSet::total_multiplicity() const {
  int m = 0;
  for (const auto& r : roots) m += r.multiplicity;
  return m;
}

namespace {

// Derivative chain p, p', p'', ... computed on demand.
class DerivChain {
 public:
  explicit DerivChain(const TrigPoly& p) { chain_.push_back(p); }

  const TrigPoly& operator[](int j) {
    while (static_cast<int>(chain_.size()) <= j) chain_.push_back(differentiate(chain_.back()));
    return chain_[static_cast<size_t>(j)];
  }

 private:
  std::vector<TrigPoly> chain_;
};

// Multiplicity by counting successive derivatives below the tolerance ladder
// tol_j = tol * |coeffs| * degree^j. Returns 0 when t is not a root at tol.
int count_multiplicity(DerivChain& derivs, double t, double tol, double coeff_norm, int degree) {
  double ladder = tol * coeff_norm;
  double base = std::max(degree, 1);
  int cap = 2 * std::max(degree, 1);
  for (int j = 0; j <= cap; ++j) {
    if (std::abs(derivs[j](t)) >= ladder) return j;
    ladder *= base;
  }
  return cap;
}

// Newton polish on the derivative order whose zero at the root is simple,
// re-detecting the multiplicity as the iterate converges.
double polish_root(DerivChain& derivs, double t, double tol, double coeff_norm, int degree) {
  double origin = t;
  double cap = 0.25 * (kTwoPi / std::max(degree, 1));
  int m = 0;
  for (int round = 0; round < 6; ++round) {
    int m_now = count_multiplicity(derivs, t, tol, coeff_norm, degree);
    if (m_now == 0) break;
    if (m_now == m && round > 0) break;
    m = m_now;
    const TrigPoly& g = derivs[m - 1];
    const TrigPoly& dg = derivs[m];
    // keep the iterate with the smallest |g|: once inside the rounding noise
    // basin of a multiple root the raw Newton steps wander
    double best_t = t;
    double best_g = std::abs(g(t));
    for (int it = 0; it < 60; ++it) {
      double gv = g(t);
      if (std::abs(gv) < best_g) {
        best_g = std::abs(gv);
        best_t = t;
      }
      double den = dg(t);
      if (std::abs(den) < 1e-300) break;
      double step = gv / den;
      double limit = 0.1 * cap;
      step = std::clamp(step, -limit, limit);
      double next = t - step;
      if (std::abs(next - origin) > cap && arc_distance(CirclePoint(next), CirclePoint(origin)) > cap) {
        break;
      }
      t = next;
      if (std::abs(step) < 1e-16) break;
    }
    if (std::abs(g(t)) > best_g) t = best_t;
  }
  return t;
}

}  // namespace

CircleRootSet circle_roots(const TrigPoly& p, double tol) {
  if (!(tol > 0.0)) throw DomainError("root tolerance must be positive");
  if (p.coefficient_max() < tol) {
    throw IdenticallyZero("polynomial coefficients all below tolerance");
  }
  int d = p.degree();
  if (d == 0) return CircleRootSet{};  // nonzero constant: no roots

  double norm = p.coefficient_norm();
  double residual_gate = tol * norm;

  // q(z) = z^d p(t)|_{z=e^{it}}: contributes (a - ib)/2 at z^{d+f},
  // (a + ib)/2 at z^{d-f}, and c0 at z^d.
  using Cx = std::complex<double>;
  Eigen::VectorXcd q = Eigen::VectorXcd::Zero(2 * d + 1);
  q[d] = Cx(p.constant() / norm, 0.0);
  for (const auto& term : p.terms()) {
    Cx half(0.5 * term.cos_coeff / norm, -0.5 * term.sin_coeff / norm);
    q[d + term.frequency] += half;
    q[d - term.frequency] += std::conj(half);
  }

  int n = 2 * d;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -q[i] / q[n];

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw IllConditioned("companion eigensolver did not converge");
  }

  DerivChain derivs(p);

  // Unimodular filter at 1e-8; candidates moderately off the circle are
  // projected and must pass the residual gate after polish (multiple-root
  // eigenvalue clusters scatter radially far beyond 1e-8).
  std::vector<double> candidates;
  for (int i = 0; i < n; ++i) {
    Cx z = solver.eigenvalues()[i];
    double off = std::abs(std::abs(z) - 1.0);
    if (off >= 1e-2) continue;
    double t = canonical_angle(std::atan2(z.imag(), z.real()));
    t = polish_root(derivs, t, tol, norm, d);
    if (off < 1e-8 || std::abs(p(t)) < residual_gate) {
      candidates.push_back(canonical_angle(t));
    }
  }

  std::sort(candidates.begin(), candidates.end());
  double merge_tol = 1e-7 * (kTwoPi / d);

  CircleRootSet out;
  size_t i = 0;
  while (i < candidates.size()) {
    size_t j = i + 1;
    double rep = candidates[i];
    double rep_abs = std::abs(p(rep));
    while (j < candidates.size() &&
           arc_distance(CirclePoint(candidates[j]), CirclePoint(candidates[j - 1])) <= merge_tol) {
      double v = std::abs(p(candidates[j]));
      if (v < rep_abs) {
        rep = candidates[j];
        rep_abs = v;
      }
      ++j;
    }
    if (rep_abs < residual_gate) {
      int m = count_multiplicity(derivs, rep, tol, norm, d);
      if (m >= 1) {
        out.roots.push_back({CirclePoint(rep), m});
        out.residual = std::max(out.residual, rep_abs);
      }
    }
    i = j;
  }

  // merge the first and last roots when they straddle the 0/2*pi seam
  if (out.roots.size() > 1) {
    const auto& first = out.roots.front();
    const auto& last = out.roots.back();
    if (arc_distance(first.location, last.location) <= merge_tol) {
      out.roots.front().multiplicity = std::max(first.multiplicity, last.multiplicity);
      out.roots.pop_back();
    }
  }

  if (out.total_multiplicity() > 2 * d) {
    throw IllConditioned("total root multiplicity exceeds the 2*degree cap");
  }
  return out;
}

namespace {

// Golden-section descent of p on [lo, hi].
std::pair<double, double> golden_min(const TrigPoly& p, double lo, double hi) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = p(x1), f2 = p(x2);
  for (int it = 0; it < 90 && (b - a) > 1e-15; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = p(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = p(x2);
    }
  }
  double xm = 0.5 * (a + b);
  return {xm, p(xm)};
}

}  // namespace

std::pair<double, double> min_on_interval(const TrigPoly& p, double t0, double span, int n) {
  n = std::max(n, 3);
  double step = span / (n - 1);
  std::vector<double> vals = eval_on_grid(p, t0, step, n);
  int best = 0;
  for (int i = 1; i < n; ++i) {
    if (vals[static_cast<size_t>(i)] < vals[static_cast<size_t>(best)]) best = i;
  }
  double tb = t0 + best * step;
  auto [tp, vp] = golden_min(p, tb - step, tb + step);
  if (vals[static_cast<size_t>(best)] < vp) return {tb, vals[static_cast<size_t>(best)]};
  return {tp, vp};
}

std::pair<CirclePoint, double> global_min(const TrigPoly& p) {
  if (p.terms().empty()) return {CirclePoint(0.0), p.constant()};

  int d = p.degree();
  double best_t = 0.0;
  double best_v = p(0.0);

  auto consider = [&](double t) {
    double v = p(t);
    if (v < best_v) {
      best_v = v;
      best_t = t;
    }
  };

  try {
    CircleRootSet crit = circle_roots(differentiate(p), 1e-9);
    for (const auto& r : crit.roots) consider(r.location.value());
  } catch (const IdenticallyZero&) {
    // numerically constant derivative: fall through to the grid
  }

  int n = 64 * std::max(d, 1);
  double step = kTwoPi / n;
  std::vector<double> vals = eval_on_grid(p, 0.0, step, n);
  int gbest = 0;
  for (int i = 1; i < n; ++i) {
    if (vals[static_cast<size_t>(i)] < vals[static_cast<size_t>(gbest)]) gbest = i;
  }
  consider(gbest * step);

  auto [tp, vp] = golden_min(p, best_t - step, best_t + step);
  if (vp < best_v) {
    best_v = vp;
    best_t = tp;
  }
  return {CirclePoint(best_t), best_v};
}

std::pair<CirclePoint, double> global_max(const TrigPoly& p) {
  std::vector<HarmonicTerm> neg;
  neg.reserve(p.terms().size());
  for (const auto& term : p.terms()) {
    neg.push_back({term.frequency, -term.cos_coeff, -term.sin_coeff});
  }
  auto [t, v] = global_min(TrigPoly(-p.constant(), std::move(neg)));
  return {t, -v};
}

}  // namespace orbitope
