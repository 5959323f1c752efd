// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are pinned here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gaussrd/analysis.hpp"
#include "gaussrd/discrete.hpp"
#include "gaussrd/oracles.hpp"
#include "gaussrd/verify.hpp"
#include "support.hpp"

using namespace gaussrd;

namespace {

constexpr std::uint64_t kSeed = 20070601;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome tightness() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = check_tightness(kSeed, 1000, 1e-9);
  const double t = seconds_since(t0);
  return {r.passed() && r.cases == 1000 && t < 10.0,
          fmt("%zu instances, %zu failures, worst rel %.3g (tol 1e-9), %.2fs (limit 10s)", r.cases, r.failures,
              r.worst_residual, t)};
}

Outcome equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = equivalence_scan(GaussianSource(1.0), default_equivalence_grid(6), 1e-9);
  const double t = seconds_since(t0);
  const bool all_regimes = rep.regime_counts.size() == 3;
  return {rep.evaluated >= 10000 && all_regimes && rep.mismatches.empty() && t < 10.0,
          fmt("%zu points evaluated (%zu skipped), %zu regimes, %zu mismatches at tol 1e-9, %.2fs (limit 10s)",
              rep.evaluated, rep.skipped, rep.regime_counts.size(), rep.mismatches.size(), t)};
}

Outcome witness() {
  const auto r = check_witness(kSeed + 1, 1000, 1e-6);
  return {r.passed() && r.cases == 1000,
          fmt("%zu instances, worst rel %.3g (tol 1e-6)", r.cases, r.worst_residual)};
}

Outcome fig3() {
  const GaussianSource src(1.0);
  const RateTuple rates{1.0, 0.5, 1.0, 0.5};
  const double lo = std::exp(-4.0), hi = std::exp(-2.0);
  const double e_lo = std::abs(wz_region(src, rates, lo).d4_bound - md_region_slice(src, rates, lo).d4_bound);
  const double e_hi = std::abs(wz_region(src, rates, hi).d4_bound - md_region_slice(src, rates, hi).d4_bound);
  const auto rows = fig3_sweep(src, rates, 201);
  const double mid = rows[100].gap;
  return {e_lo <= 1e-9 && e_hi <= 1e-9 && mid > 1e-6,
          fmt("|WZ-MD| at e^-4: %.3g, at e^-2: %.3g (tol 1e-9); midpoint gap %.6g (> 1e-6)", e_lo, e_hi, mid)};
}

Outcome unbounded_loss() {
  const GaussianSource src(1.0);
  bool increasing = true, exceeds = true;
  double prev = 0.0;
  std::string shortfall;
  for (double r1 : {1.0, 2.0, 4.0, 8.0}) {
    const double ratio = fixed_channel_loss(src, r1, 1.0, {1.0}).ratio;
    const double floor = std::expm1(2.0 * r1);
    increasing = increasing && ratio > prev;
    if (!(ratio > floor)) {
      exceeds = false;
      shortfall += fmt(" R1=%g: %.6g <= %.6g;", r1, ratio, floor);
    }
    prev = ratio;
  }
  const auto l = fixed_channel_loss(src, 1.0, 1.0, {1.0});
  const double want = std::exp(2.0) + std::exp(-2.0) - 1.0;
  const double plug = std::abs(l.ratio - want);
  const double cross = oracle::min_d2_for_trivial_central(src, {1.0, 1.0, 1.0, 1.0}) / l.d2_star;
  const double cross_err = std::abs(cross - want);
  return {increasing && exceeds && plug <= 1e-12 && cross_err <= 1e-12 * want,
          fmt("increasing %s; exceeds e^(2R1)-1 %s%s ratio(1,1) err %.3g, dr_bound cross-check err %.3g (tol 1e-12)",
              increasing ? "yes" : "no", exceeds ? "yes" : "no", shortfall.empty() ? ";" : shortfall.c_str(), plug,
              cross_err)};
}

Outcome mdcr() {
  const GaussianSource src(1.0);
  const double at0 = mdcr_compare(src, 0.5, 0.5, 0.0, {0.5}, 0.45, 0.45).ratio;
  bool ok = at0 == 1.0;
  std::string vals;
  for (double r4 : {0.1, 0.2, 0.4}) {
    const double ratio = mdcr_compare(src, 0.5, 0.5, r4, {0.5}, 0.45, 0.45).ratio;
    ok = ok && ratio > 1.0 + 1e-9;
    vals += fmt(" %.9g", ratio);
  }
  return {ok, fmt("ratio at R4=0: %.17g; R4=0.1,0.2,0.4:%s (> 1+1e-9)", at0, vals.c_str())};
}

Outcome asymptotics() {
  bool ok = true;
  std::string vals;
  for (auto [eta, b] : {std::pair{0.0, 1.0}, {0.3, 1.0}, {0.3, 2.0}}) {
    const AsymptoticConfig c{8.0, b, eta, eta};
    const double ratio = balanced_md_exact(c) / high_rate_asymptote(c).d4_md;
    ok = ok && ratio >= 0.95 && ratio <= 1.05;
    vals += fmt(" (%g,%g)->%.6g", eta, b, ratio);
  }
  const AsymptoticConfig c{8.0, 1.0, 0.3, 0.3};
  const double factor = balanced_mdcr_exact(c) / balanced_md_exact(c);
  ok = ok && std::abs(factor - 2.0) <= 0.04;
  return {ok, fmt("exact/asymptote at R'=8:%s in [0.95,1.05]; MDCR loss factor %.6g (2 +- 2%%)", vals.c_str(), factor)};
}

Outcome monte_carlo() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = check_monte_carlo(kSeed + 3, 20, 1000000L, 4.0);
  const double t = seconds_since(t0);
  return {r.passed() && r.cases == 20 && t < 30.0,
          fmt("20 channels x 1e6 samples, worst |z| %.3g (limit 4), %.2fs (limit 30s)", r.worst_residual, t)};
}

Outcome discrete() {
  NormalStream rng(kSeed + 4);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    JointPmf::Sizes s{2 + t % 3, 1 + t % 3, 1 + (t / 3) % 3, 1 + (t / 9) % 3, 1 + t % 2};
    const auto p = testsupport::random_pmf(rng, s);
    worst = std::max(worst, testsupport::max_abs_diff(eval_region_bounds(p), testsupport::bounds_by_entropies(p)));
  }
  double worst_ts = 0.0;
  for (int t = 0; t < 10; ++t) {
    const std::vector<double> px{0.2, 0.5, 0.3};
    const auto a = testsupport::random_pmf_given_x(rng, {3, 2, 2, 3, 2}, px);
    const auto b = testsupport::random_pmf_given_x(rng, {3, 3, 2, 2, 1}, px);
    const auto ba = eval_region_bounds(a), bb = eval_region_bounds(b);
    for (double lam : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const auto m = eval_region_bounds(timeshare(a, b, lam));
      const RateRegionBounds want{lam * ba.b1 + (1 - lam) * bb.b1, lam * ba.b12 + (1 - lam) * bb.b12,
                                  lam * ba.b13 + (1 - lam) * bb.b13, lam * ba.b123 + (1 - lam) * bb.b123,
                                  lam * ba.b1234 + (1 - lam) * bb.b1234};
      worst_ts = std::max(worst_ts, testsupport::max_abs_diff(m, want));
    }
  }
  return {worst <= 1e-12 && worst_ts <= 1e-12,
          fmt("100 pmfs vs entropy oracle worst %.3g; timeshare linearity worst %.3g (tol 1e-12)", worst, worst_ts)};
}

/// Two-description bound in its textbook form, written out independently.
double md_reference(double var, double r2, double r3, double d2, double d3) {
  const double s = std::exp(-2.0 * (r2 + r3));
  const double a = std::min(d2 / var, 1.0), b = std::min(d3 / var, 1.0);
  if (a + b >= 1.0 + s) return var * s;
  const double g = std::sqrt((1 - a) * (1 - b)) - std::sqrt(std::max(0.0, a * b - s));
  return var * s / (1.0 - g * g);
}

Outcome md_reduction() {
  const GaussianSource src(2.0);
  InstanceSampler sampler(kSeed + 5);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    auto inst = sampler.next();
    const RateTuple r{0.0, inst.rates.r2, inst.rates.r3, 0.0};
    const double d2 = 2.0 * std::exp(-2.0 * r.r2 * sampler.uniform());
    const double d3 = 2.0 * std::exp(-2.0 * r.r3 * sampler.uniform());
    const double got = dr_bound(src, r, kUnconstrained, d2, d3).d4_bound;
    worst = std::max(worst, relative_error(got, md_reference(2.0, r.r2, r.r3, d2, d3)));
  }
  const GaussianSource unit(1.0);
  const RateTuple sym{0.0, 0.5, 0.5, 0.0};
  const double bound = dr_bound(unit, sym, kUnconstrained, 0.45, 0.45).d4_bound;
  const double eps_oracle = std::exp(-2.0) * oracle::maximize_converse_t(1.0, 0.45, 0.45, std::exp(-2.0)).value;
  const auto cert = certify_achievability(unit, sym, 0.45, 0.45);
  const bool golden = std::abs(bound - 0.14785) < 5e-5 && relative_error(eps_oracle, bound) <= 1e-9 &&
                      cert.matches_bound && relative_error(cert.achieved.d4, bound) <= 1e-9;
  return {worst <= 1e-12 && golden,
          fmt("500 MD points vs textbook form worst rel %.3g (tol 1e-12); symmetric d4 %.10g, eps-oracle %.10g, "
              "channel %.10g",
              worst, bound, eps_oracle, cert.achieved.d4)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 tightness", tightness},
      {"2 D-R/R-D equivalence", equivalence},
      {"3 converse witness", witness},
      {"4 WZ vs MD sweep", fig3},
      {"5 unbounded fixed-channel loss", unbounded_loss},
      {"6 MDCR needs R4=0", mdcr},
      {"7 high-rate asymptotics", asymptotics},
      {"8 Monte Carlo agreement", monte_carlo},
      {"9 discrete region", discrete},
      {"10 MD reduction", md_reduction},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
