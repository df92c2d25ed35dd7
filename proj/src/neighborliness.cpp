#include "orbitope/neighborliness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "orbitope/errors.hpp"
#include "orbitope/parallel.hpp"

namespace orbitope {

namespace {

uint64_t mix_seed(uint64_t seed, uint64_t salt) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct StartOutcome {
  std::vector<double> offsets;  // sorted positions within [-psi/2, psi/2]
  double certified_score = 0.0;
  double opposite_clearance = 0.0;
  bool issue = false;  // not supporting, or extra contacts present
  bool valid = false;
  FaceCertificate certificate;
};

TangencyPattern pattern_from_offsets(const CurveSpec& spec, const Arc& arc,
                                     const std::vector<double>& offsets) {
  std::vector<TangencyEntry> entries;
  entries.reserve(offsets.size());
  for (double t : offsets) entries.push_back({CirclePoint(t), 2});
  return TangencyPattern::create(spec, entries, arc);
}

// Collapse groups of coalescing points onto their means before certifying.
// Descent drives worst configurations into merged degenerations; separations
// below ~1e-3 make the tangency system too ill-conditioned to certify
// faithfully, while the merged representative is clean and equivalent.
void snap_coalesced(std::vector<double>& offsets) {
  constexpr double kSnap = 5e-3;
  size_t i = 0;
  while (i < offsets.size()) {
    size_t j = i + 1;
    while (j < offsets.size() && offsets[j] - offsets[j - 1] < kSnap) ++j;
    if (j - i > 1) {
      double mean = 0.0;
      for (size_t a = i; a < j; ++a) mean += offsets[a];
      mean /= static_cast<double>(j - i);
      for (size_t a = i; a < j; ++a) offsets[a] = mean;
    }
    i = j;
  }
}

// Signed clearance of the support polynomial over the opposite arc; falls
// back to the (negative) quick global minimum when support already fails.
double search_objective(const CurveSpec& spec, const Arc& arc, const std::vector<double>& offsets) {
  TangencyPattern pattern = pattern_from_offsets(spec, arc, offsets);
  Hyperplane plane = construct_hyperplane(spec, pattern);
  TrigPoly p = support_polynomial(spec, plane);

  auto [gt, gmin] = min_on_interval(p, 0.0, kTwoPi, 64 * std::max(p.degree(), 1));
  (void)gt;
  if (gmin < -10.0 * support_tolerance(plane)) return gmin;

  Arc opposite = arc.opposite();
  auto [ot, omin] = min_on_interval(p, opposite.start(), opposite.length, 64 * spec.k);
  (void)ot;
  return omin;
}

// Seed layout: start 0 spreads the points evenly across the arc, start 1
// clusters them at the two endpoints (the maximal-span candidates where
// failures appear first), remaining starts are uniform draws. The failing
// basin shrinks to a sliver near the critical arc length, so random starts
// alone routinely miss it.
std::vector<double> seed_offsets(const CurveSpec& spec, double edge, int index,
                                 std::mt19937_64& rng) {
  std::vector<double> offsets(static_cast<size_t>(spec.k));
  if (index == 0) {
    for (int i = 0; i < spec.k; ++i) {
      offsets[static_cast<size_t>(i)] =
          spec.k == 1 ? 0.0 : -edge + 2.0 * edge * i / (spec.k - 1);
    }
  } else if (index == 1) {
    for (int i = 0; i < spec.k; ++i) {
      offsets[static_cast<size_t>(i)] = (2 * i < spec.k) ? -edge : edge;
    }
  } else {
    std::uniform_real_distribution<double> uniform(-edge, edge);
    for (auto& t : offsets) t = uniform(rng);
  }
  std::sort(offsets.begin(), offsets.end());
  return offsets;
}

StartOutcome run_start(const CurveSpec& spec, const Arc& arc, double psi, int index,
                       uint64_t seed) {
  std::mt19937_64 rng(seed);
  // stay a hair inside the half-open arc so clamped moves remain members
  const double edge = 0.5 * psi * (1.0 - 1e-12);
  std::uniform_real_distribution<double> uniform(-edge, edge);

  StartOutcome out;
  std::vector<double> offsets;

  double value = 0.0;
  bool seeded = false;
  for (int attempt = 0; attempt < 16 && !seeded; ++attempt) {
    offsets = seed_offsets(spec, edge, attempt == 0 ? index : 2, rng);
    try {
      // endpoint clusters certify through their merged representative
      snap_coalesced(offsets);
      value = search_objective(spec, arc, offsets);
      seeded = true;
    } catch (const DegeneratePattern&) {
      // resample the start
    }
  }
  if (!seeded) return out;

  double step = psi / 8.0;
  const int budget = 200;
  for (int iter = 0; iter < budget && step > 1e-7; ++iter) {
    bool improved = false;
    for (size_t i = 0; i < offsets.size(); ++i) {
      for (double direction : {+1.0, -1.0}) {
        double original = offsets[i];
        double moved = std::clamp(original + direction * step, -edge, edge);
        if (moved == original) continue;
        offsets[i] = moved;
        double candidate;
        try {
          candidate = search_objective(spec, arc, offsets);
        } catch (const DegeneratePattern&) {
          offsets[i] = original;
          continue;
        }
        if (candidate < value) {
          value = candidate;
          improved = true;
        } else {
          offsets[i] = original;
        }
      }
    }
    if (!improved) step *= 0.5;
  }

  std::sort(offsets.begin(), offsets.end());
  snap_coalesced(offsets);
  TangencyPattern pattern = pattern_from_offsets(spec, arc, offsets);
  Hyperplane plane = construct_hyperplane(spec, pattern);
  FaceCertificate cert = verify_support(spec, plane, pattern);

  out.offsets = offsets;
  out.certificate = cert;
  out.certified_score = cert.global_min_value;
  out.opposite_clearance = opposite_arc_distance(spec, plane, arc);
  out.issue = !cert.is_supporting || !cert.extra_contacts.empty();
  out.valid = true;
  return out;
}

// Worse-first ordering: failing or extra-contact configurations before safe
// ones, deeper violations first, then smaller opposite clearance, then
// lexicographic offsets for determinism.
bool worse_than(const StartOutcome& a, const StartOutcome& b) {
  if (a.issue != b.issue) return a.issue;
  if (a.issue) {
    if (a.certified_score != b.certified_score) return a.certified_score < b.certified_score;
  } else if (a.opposite_clearance != b.opposite_clearance) {
    return a.opposite_clearance < b.opposite_clearance;
  }
  return a.offsets < b.offsets;
}

}  // namespace

WorstConfiguration worst_configuration(const CurveSpec& spec, double psi, int starts,
                                       uint64_t seed) {
  if (!(psi > 0.0) || !(psi < kPi)) throw DomainError("worst_configuration needs 0 < psi < pi");
  if (starts < 1) throw DomainError("worst_configuration needs at least one start");

  Arc arc(CirclePoint(0.0), psi);
  std::vector<StartOutcome> outcomes(static_cast<size_t>(starts));
  parallel_for(starts, [&](int i) {
    outcomes[static_cast<size_t>(i)] =
        run_start(spec, arc, psi, i, mix_seed(seed, static_cast<uint64_t>(i)));
  });

  const StartOutcome* worst = nullptr;
  for (const auto& outcome : outcomes) {
    if (!outcome.valid) continue;
    if (worst == nullptr || worse_than(outcome, *worst)) worst = &outcome;
  }
  if (worst == nullptr) {
    throw SearchInconclusive("every start degenerated; no configuration evaluated");
  }
  return {pattern_from_offsets(spec, arc, worst->offsets), worst->certified_score,
          worst->certificate};
}

bool configuration_safe(const WorstConfiguration& wc) {
  return wc.certificate.is_supporting && wc.certificate.extra_contacts.empty();
}

PhiEstimate estimate_phi(const CurveSpec& spec, double tol, int starts, uint64_t seed) {
  if (!(tol > 0.0)) throw DomainError("estimate_phi requires tol > 0");
  double paper = std::sqrt(6.0) * std::pow(static_cast<double>(spec.k), -1.5);

  int trials = 0;
  auto safe_at = [&](double psi, uint64_t salt) {
    ++trials;
    return configuration_safe(worst_configuration(spec, psi, starts, mix_seed(seed, salt)));
  };

  if (!safe_at(paper, 0)) {
    throw SearchInconclusive("the proven-safe arc length failed to certify");
  }

  double lo = paper;
  double hi = kPi;  // stays pi when no failing configuration is ever found
  uint64_t salt = 1;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (safe_at(mid, salt++)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {spec.k, lo, hi, paper, trials, seed};
}

std::vector<PhiTableRow> bound_comparison_table(int k_max, double tol, int starts,
                                                uint64_t seed) {
  if (k_max < 1) throw DomainError("bound table requires k_max >= 1");
  std::vector<PhiTableRow> rows;
  rows.reserve(static_cast<size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    CurveSpec spec(k);
    double paper = std::sqrt(6.0) * std::pow(static_cast<double>(k), -1.5);
    if (k <= 4) {
      PhiEstimate est = estimate_phi(spec, tol, starts, mix_seed(seed, static_cast<uint64_t>(k)));
      rows.push_back({k, paper, est.phi_lower_numeric, est.phi_upper_numeric});
    } else {
      rows.push_back({k, paper, std::nullopt, std::nullopt});
    }
  }
  return rows;
}

}  // namespace orbitope
