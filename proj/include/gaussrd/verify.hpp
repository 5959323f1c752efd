// Self-check suite: pairs every closed form with its independent route and
// reports the worst residual per check. Used by `gaussrd verify` and by the
// test suites.

#ifndef GAUSSRD_VERIFY_HPP
#define GAUSSRD_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "gaussrd/mmse.hpp"
#include "gaussrd/oracles.hpp"
#include "gaussrd/regions.hpp"
#include "gaussrd/test_channel.hpp"

namespace gaussrd {

/// Feasible instance with σx² = 1, rates uniform on [0, max_rate] and side
/// distortions log-uniform between their floors d1* exp(−2Ri) and d1*.
struct RandomInstance {
  RateTuple rates;
  double d2 = 0.0;
  double d3 = 0.0;
};

class InstanceSampler {
 public:
  explicit InstanceSampler(std::uint64_t seed, double max_rate = 3.0) : rng_(seed), max_rate_(max_rate) {}

  RandomInstance next() {
    RandomInstance inst;
    inst.rates = {max_rate_ * rng_.uniform(), max_rate_ * rng_.uniform(), max_rate_ * rng_.uniform(),
                  max_rate_ * rng_.uniform()};
    const double d1 = std::exp(-2.0 * inst.rates.r1);
    inst.d2 = d1 * std::exp(-2.0 * inst.rates.r2 * rng_.uniform());
    inst.d3 = d1 * std::exp(-2.0 * inst.rates.r3 * rng_.uniform());
    return inst;
  }

  /// Instance with Π* ≥ Δ*, the branch where the witness is non-trivial.
  RandomInstance next_non_degenerate() {
    for (;;) {
      RandomInstance inst = next();
      const auto dr = dr_bound(GaussianSource(1.0), inst.rates, kUnconstrained, inst.d2, inst.d3);
      if (dr.pi >= dr.delta) return inst;
    }
  }

  double uniform() { return rng_.uniform(); }

 private:
  NormalStream rng_;
  double max_rate_;
};

struct CheckResult {
  std::string name;
  double tolerance = 0.0;
  double worst_residual = 0.0;
  std::size_t cases = 0;
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};

inline double relative_error(double got, double want) { return std::abs(got - want) / std::abs(want); }

/// Achieved d4 of the certified test channel against the d4 bound.
inline CheckResult check_tightness(std::uint64_t seed, int instances, double tol = 1e-9) {
  CheckResult r{"tightness", tol};
  InstanceSampler sampler(seed);
  const GaussianSource source(1.0);
  for (int i = 0; i < instances; ++i) {
    const auto inst = sampler.next();
    const auto cert = certify_achievability(source, inst.rates, inst.d2, inst.d3, tol);
    const double res = relative_error(cert.achieved.d4, cert.bound.d4_bound);
    r.worst_residual = std::max(r.worst_residual, res);
    ++r.cases;
    if (!cert.matches_bound || !(res <= tol)) ++r.failures;
  }
  return r;
}

/// Closed-form witness bound against a numeric maximization of t(ε).
inline CheckResult check_witness(std::uint64_t seed, int instances, double tol = 1e-6) {
  CheckResult r{"converse_witness", tol};
  InstanceSampler sampler(seed);
  const GaussianSource source(1.0);
  for (int i = 0; i < instances; ++i) {
    const auto inst = sampler.next_non_degenerate();
    const auto w = converse_witness(source, inst.rates, kUnconstrained, inst.d2, inst.d3);
    const double s = std::exp(-2.0 * (inst.rates.r2 + inst.rates.r3));
    const auto numeric = oracle::maximize_converse_t(w.d1_star, inst.d2, inst.d3, s);
    double res = relative_error(w.t_bound, numeric.value);
    if (std::isfinite(w.epsilon_star) && w.epsilon_star > 0.0) {
      res = std::max(res, relative_error(converse_t(w.d1_star, inst.d2, inst.d3, s, w.epsilon_star), numeric.value));
    }
    r.worst_residual = std::max(r.worst_residual, res);
    ++r.cases;
    if (!(res <= tol)) ++r.failures;
  }
  return r;
}

/// Closed-form excess rate L against bisection inversion of the d4 bound.
inline CheckResult check_excess_rate(std::uint64_t seed, int instances, double tol = 1e-8) {
  CheckResult r{"excess_rate", tol};
  InstanceSampler sampler(seed, 2.0);
  const GaussianSource source(1.0);
  while (r.cases < static_cast<std::size_t>(instances)) {
    const auto inst = sampler.next();
    const double d1 = std::exp(-2.0 * inst.rates.r1);
    const double lo = std::max(inst.d2 + inst.d3 - d1, 0.0);
    const double hi = 1.0 / (1.0 / inst.d2 + 1.0 / inst.d3 - 1.0 / d1);
    if (!(hi > lo)) continue;
    const double d4_hat = lo + (hi - lo) * (0.02 + 0.96 * sampler.uniform());
    const DistortionTuple dist{kUnconstrained, inst.d2, inst.d3, d4_hat * std::exp(-2.0 * inst.rates.r4)};
    const auto rd = rd_bound(source, inst.rates.r1, inst.rates.r4, dist);
    if (rd.regime != RegimeTag::RdRegimeExcess) continue;
    const double res = std::abs(rate_of(rd.d4_hat / rd.d1_star) + rd.excess - rd.sum_bound);
    r.worst_residual = std::max(r.worst_residual, res);
    ++r.cases;
    if (!(res <= tol)) ++r.failures;
  }
  return r;
}

/// Monte Carlo MSE of each decoder of a certified channel against its
/// Schur-complement value, in units of the Monte Carlo standard error.
inline CheckResult check_monte_carlo(std::uint64_t seed, int channels, long samples, double max_z = 4.0) {
  CheckResult r{"monte_carlo", max_z};
  InstanceSampler sampler(seed, 1.5);
  const GaussianSource source(1.0);
  for (int c = 0; c < channels; ++c) {
    const auto inst = sampler.next();
    const auto cert = certify_achievability(source, inst.rates, inst.d2, inst.d3);
    const auto cov = assemble_msr_covariance(source, cert.channel);
    std::vector<int> central{kU2, kU3};
    if (std::isfinite(cert.channel.sigma4_sq)) central.push_back(kU4);
    const auto analytic = conditional_mmse(cov, kXPrime, std::span<const int>(central));
    const auto mc = mc_estimate_mse(cov, kXPrime, std::span<const int>(central), samples,
                                    seed + static_cast<std::uint64_t>(c));
    const double z = std::abs(mc.estimate - analytic.error_variance) / mc.std_error;
    r.worst_residual = std::max(r.worst_residual, z);
    ++r.cases;
    if (!(z <= max_z)) ++r.failures;
  }
  return r;
}

/// Grid spanning all three rate-distortion regimes; `density` scales the
/// number of values on the rate and d4 axes.
inline EquivalenceGrid default_equivalence_grid(int density) {
  const auto linspace = [](double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    return v;
  };
  const auto logspace = [](double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(lo * std::pow(hi / lo, n == 1 ? 0.0 : double(i) / (n - 1)));
    return v;
  };
  EquivalenceGrid g;
  g.r1 = {0.0, 0.3};
  g.r4 = {0.0, 0.2};
  g.d1 = {kUnconstrained, 0.6};
  g.d2 = {0.3, 0.45, 0.6, 0.95};
  g.d3 = {0.25, 0.45, 0.7};
  g.r2 = linspace(0.0, 1.5, density);
  g.r3 = linspace(0.0, 1.5, density);
  g.d4 = logspace(1e-3, 0.7, 2 * density);
  return g;
}

struct VerifySummary {
  std::vector<CheckResult> checks;
  EquivalenceReport equivalence;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
  }
};

inline VerifySummary run_verification(std::uint64_t seed, int density) {
  if (density < 1) throw Error(ErrorKind::InvalidArgument, "grid density must be at least 1");
  VerifySummary out;
  out.equivalence = equivalence_scan(GaussianSource(1.0), default_equivalence_grid(std::max(density, 2)));
  CheckResult eq{"equivalence", 1e-9, static_cast<double>(out.equivalence.mismatches.size()),
                 out.equivalence.evaluated, out.equivalence.mismatches.size()};
  out.checks.push_back(eq);
  out.checks.push_back(check_tightness(seed, 50 * density));
  out.checks.push_back(check_witness(seed + 1, 20 * density));
  out.checks.push_back(check_excess_rate(seed + 2, 20 * density));
  out.checks.push_back(check_monte_carlo(seed + 3, density, 20000L * density));
  return out;
}

}  // namespace gaussrd

#endif  // GAUSSRD_VERIFY_HPP
