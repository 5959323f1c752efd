// Numeric cross-checks for the closed forms in regions.hpp and analysis.hpp.
// Nothing here calls the closed form it is meant to check.

#ifndef GAUSSRD_ORACLES_HPP
#define GAUSSRD_ORACLES_HPP

#include <cmath>
#include <functional>
#include <numbers>

#include "gaussrd/core.hpp"
#include "gaussrd/regions.hpp"

namespace gaussrd::oracle {

struct Maximum {
  double argmax = 0.0;
  double value = 0.0;
};

/// Golden-section maximization of a unimodal f on [lo, hi].
inline Maximum golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                                  double rel_tol = 1e-10, int max_iter = 500) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iter; ++i) {
    if (std::abs(hi - lo) <= rel_tol * (std::abs(c) + std::abs(d))) break;
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  const double x = 0.5 * (lo + hi);
  return {x, f(x)};
}

/// max over ε ∈ [1e−9, 1e9] of t(ε), searched in log ε: a coarse grid picks
/// the bracket, golden section refines it.
inline Maximum maximize_converse_t(double d1_star, double d2, double d3, double s) {
  const auto t_of_log = [&](double log_eps) { return converse_t(d1_star, d2, d3, s, std::exp(log_eps)); };
  const double lo = std::log(1e-9);
  const double hi = std::log(1e9);
  constexpr int kGrid = 2000;
  const double step = (hi - lo) / kGrid;
  int best = 0;
  double best_value = t_of_log(lo);
  for (int i = 1; i <= kGrid; ++i) {
    const double v = t_of_log(lo + i * step);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  const double a = lo + std::max(best - 1, 0) * step;
  const double b = lo + std::min(best + 1, kGrid) * step;
  Maximum m = golden_section_max(t_of_log, a, b);
  if (best_value > m.value) m = {lo + best * step, best_value};
  return {std::exp(m.argmax), m.value};
}

/// Stationary point of t(ε) found by bisection on the sign of N′D − ND′,
/// i.e. without any closed form for ε*. Returns +inf when t is increasing
/// on the whole search range.
inline double stationary_epsilon(double d1_star, double d2, double d3, double s) {
  const double c = d2 + d3 - d1_star * s;
  const double e = d2 * d3 - d1_star * d1_star * s;
  // N = ε² + d1*ε,  D = ε² + cε + e
  const auto slope_sign = [&](double eps) {
    const double n = eps * eps + d1_star * eps;
    const double dn = 2.0 * eps + d1_star;
    const double den = eps * eps + c * eps + e;
    const double dden = 2.0 * eps + c;
    return dn * den - n * dden;
  };
  double lo = 1e-300;
  double hi = 1e12 * d1_star;
  if (slope_sign(hi) > 0.0) return std::numeric_limits<double>::infinity();
  if (slope_sign(lo) <= 0.0) return 0.0;
  // bisect in log space
  double llo = std::log(lo);
  double lhi = std::log(hi);
  for (int i = 0; i < 400 && lhi - llo > 1e-15; ++i) {
    const double mid = 0.5 * (llo + lhi);
    if (slope_sign(std::exp(mid)) > 0.0) {
      llo = mid;
    } else {
      lhi = mid;
    }
  }
  return std::exp(0.5 * (llo + lhi));
}

/// Smallest d2 for which the central distortion can reach its single-layer
/// floor exp(−2ΣR)σ² when d3 sits at its own floor, found by bisection on
/// the regime predicate Π ≤ Δ of dr_bound.
inline double min_d2_for_trivial_central(const GaussianSource& source, const RateTuple& rates) {
  const double var = source.variance();
  const double d3 = distortion_floor(var, rates.r1 + rates.r3);
  double lo = distortion_floor(var, rates.r1 + rates.r2);
  double hi = distortion_floor(var, rates.r1);
  const auto reaches_floor = [&](double d2) {
    const auto dr = dr_bound(source, rates, kUnconstrained, d2, d3);
    return dr.pi <= dr.delta;
  };
  if (reaches_floor(lo)) return lo;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (reaches_floor(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace gaussrd::oracle

#endif  // GAUSSRD_ORACLES_HPP
