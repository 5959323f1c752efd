// Comparison studies built on the Gaussian region: Wyner-Ziv vs multiple
// description second layers, the loss of a fixed channel configuration, the
// cost of a central refinement description, and high-rate asymptotics of
// balanced descriptions.

#ifndef GAUSSRD_ANALYSIS_HPP
#define GAUSSRD_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "gaussrd/core.hpp"
#include "gaussrd/regions.hpp"

namespace gaussrd {

// --- Wyner-Ziv vs MD second layer -------------------------------------------

struct WzChannel {
  double sigma1_sq = 0.0;
  double sigma2_sq = 0.0;
  double gamma = 0.0;
};

struct WzResult {
  WzChannel channel;
  double d1_star = 0.0;
  double d2_star = 0.0;
  double d4_bound = 0.0;
};

/// Degraded side-information noises matching d1* and d2*:
///   d1* = σx²(σ1²+σ2²)/(σx²+σ1²+σ2²),  d2* = σx²σ2²/(σx²+σ2²),  γ = σ2²/(σ1²+σ2²).
inline WzChannel solve_wz_channel(double var, double d1_star, double d2_star) {
  if (!(d2_star < d1_star && d1_star < var)) {
    throw Error(ErrorKind::InvalidArgument, "WZ comparison needs R1 > 0 and R2 > 0");
  }
  WzChannel ch;
  const double total = var * d1_star / (var - d1_star);
  ch.sigma2_sq = var * d2_star / (var - d2_star);
  ch.sigma1_sq = total - ch.sigma2_sq;
  ch.gamma = ch.sigma2_sq / total;
  return ch;
}

/// Lower bound on d4' for WZ-based second-layer coding with d1 = d1*, d2 = d2*.
inline WzResult wz_region(const GaussianSource& source, const RateTuple& rates, double d3_prime) {
  validate(rates);
  validate_distortion(d3_prime);
  const double var = source.variance();
  if (!at_least(d3_prime, distortion_floor(var, rates.r1 + rates.r3))) {
    throw Error(ErrorKind::InfeasibleDistortion, "d3' is below sigma^2 exp(-2(R1+R3))");
  }
  WzResult out;
  out.d1_star = distortion_floor(var, rates.r1);
  out.d2_star = distortion_floor(var, rates.r1 + rates.r2);
  out.channel = solve_wz_channel(var, out.d1_star, out.d2_star);
  const auto& ch = out.channel;
  const double g = ch.gamma;
  out.d4_bound = std::exp(-2.0 * (rates.r3 + rates.r4)) * var * ch.sigma1_sq * ch.sigma2_sq /
                 ((var + ch.sigma1_sq + ch.sigma2_sq) *
                  ((1.0 - g) * (1.0 - g) * std::min(d3_prime, out.d1_star) + g * ch.sigma1_sq));
  return out;
}

struct MdSliceResult {
  DrBoundResult general;
  double pi_specialized = 0.0;
  double delta_specialized = 0.0;
  double d4_bound = 0.0;
};

/// MD-based d4 bound along d3 with d1 = d1* and d2 = d2*.
inline MdSliceResult md_region_slice(const GaussianSource& source, const RateTuple& rates, double d3) {
  const double var = source.variance();
  const double d1_star = distortion_floor(var, rates.r1);
  const double d2_star = distortion_floor(var, rates.r1 + rates.r2);
  MdSliceResult out;
  out.general = dr_bound(source, rates, d1_star, d2_star, d3);
  const double d3_hat = std::min(d3, d1_star);
  out.pi_specialized = -std::expm1(-2.0 * rates.r2) * (1.0 - d3_hat / d1_star);
  out.delta_specialized = std::max(0.0, std::exp(-2.0 * rates.r2) * (d3_hat / d1_star - std::exp(-2.0 * rates.r3)));
  out.d4_bound = out.general.d4_bound;
  return out;
}

struct Fig3Row {
  double d3 = 0.0;
  double d4_wz = 0.0;
  double d4_md = 0.0;
  double gap = 0.0;
};

/// (d3, d4) trade-off of both approaches over [σx² exp(−2(R1+R3)), d1*].
inline std::vector<Fig3Row> fig3_sweep(const GaussianSource& source, const RateTuple& rates, int points) {
  if (points < 2) throw Error(ErrorKind::InvalidArgument, "sweep needs at least 2 points");
  const double lo = distortion_floor(source.variance(), rates.r1 + rates.r3);
  const double hi = distortion_floor(source.variance(), rates.r1);
  std::vector<Fig3Row> rows;
  rows.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double d3 = i == points - 1 ? hi : lo + (hi - lo) * i / (points - 1);
    Fig3Row row{d3, wz_region(source, rates, d3).d4_bound, md_region_slice(source, rates, d3).d4_bound, 0.0};
    row.gap = row.d4_wz - row.d4_md;
    rows.push_back(row);
  }
  return rows;
}

// --- Fixed channel configuration ----------------------------------------------

struct FixedChannelConfig {
  double alpha = 1.0;  // R2 = αR1, R4 = αR3
};

struct FixedChannelLoss {
  double ratio = 1.0;     // d2 / d2*
  double d2_floor = 0.0;  // d1*[1 + exp(−2(αR1+R3)) − exp(−2R3)]
  double d2_star = 0.0;   // σx² exp(−2(1+α)R1)
};

/// Loss on d2 when the system is forced to the second-layer-optimal d3, d4.
inline FixedChannelLoss fixed_channel_loss(const GaussianSource& source, double r1, double r3,
                                           FixedChannelConfig config) {
  if (!(config.alpha > 0.0)) throw Error(ErrorKind::InvalidArgument, "alpha must be positive");
  if (!(r1 > 0.0) || !(r3 > 0.0)) throw Error(ErrorKind::InvalidArgument, "R1 and R3 must be positive");
  const double var = source.variance();
  const double a = config.alpha;
  FixedChannelLoss out;
  out.d2_floor = distortion_floor(var, r1) * (1.0 + std::exp(-2.0 * (a * r1 + r3)) - std::exp(-2.0 * r3));
  out.d2_star = distortion_floor(var, (1.0 + a) * r1);
  out.ratio = std::exp(2.0 * a * r1) + std::exp(-2.0 * r3) - std::exp(2.0 * (a * r1 - r3));
  return out;
}

// --- MD with central refinement -------------------------------------------------

struct MdcrSplit {
  double beta = 0.5;  // R2' = R2 + βR4, R3' = R3 + (1−β)R4
};

struct MdcrComparison {
  double d4_mdcr = 0.0;
  double d4_md = 0.0;
  double ratio = 1.0;
  DrBoundResult mdcr;
  DrBoundResult md;
};

/// Central distortion of an MDCR system (R1 = 0, refinement R4) against
/// the plain MD system that folds R4 into the two descriptions.
inline MdcrComparison mdcr_compare(const GaussianSource& source, double r2, double r3, double r4,
                                   MdcrSplit split, double d2, double d3) {
  if (!(split.beta >= 0.0 && split.beta <= 1.0)) throw Error(ErrorKind::InvalidArgument, "beta must lie in [0, 1]");
  if (!(d2 < source.variance() && d3 < source.variance())) {
    throw Error(ErrorKind::InvalidArgument, "side distortions must be below the source variance");
  }
  const RateTuple folded{0.0, r2 + split.beta * r4, r3 + (1.0 - split.beta) * r4, 0.0};
  MdcrComparison out;
  out.md = dr_bound(source, folded, kUnconstrained, d2, d3);
  if (out.md.pi < out.md.delta) {
    throw Error(ErrorKind::OutOfRegime, "the folded MD system is in its degenerate regime");
  }
  out.mdcr = dr_bound(source, {0.0, r2, r3, r4}, kUnconstrained, d2, d3);
  out.d4_mdcr = out.mdcr.d4_bound;
  out.d4_md = out.md.d4_bound;
  out.ratio = out.d4_mdcr / out.d4_md;
  return out;
}

// --- High-rate asymptotics for balanced descriptions ------------------------------

/// Balanced MD at rate R' per description with side distortion
/// b·exp(−2(1−η)R'); η1 sets the MDCR refinement rate R4 = 2η1R'.
/// Unit source variance.
struct AsymptoticConfig {
  double r_prime = 1.0;
  double b = 1.0;
  double eta = 0.0;
  double eta1 = 0.0;
};

inline void validate(const AsymptoticConfig& c) {
  if (!(c.r_prime > 0.0) || !(c.b >= 1.0) || !(c.eta >= 0.0 && c.eta < 1.0) ||
      !(c.eta1 >= 0.0 && c.eta1 <= c.eta)) {
    throw Error(ErrorKind::InvalidArgument, "need R' > 0, b >= 1, 0 <= eta < 1, 0 <= eta1 <= eta");
  }
}

struct Asymptote {
  double d4_md = 0.0;
  double d4_mdcr = 0.0;
  double product_bound = 0.0;  // floor on d4' d2'
};

inline Asymptote high_rate_asymptote(const AsymptoticConfig& c) {
  validate(c);
  const double full = 2.0 * (c.b + std::sqrt(c.b * c.b - 1.0));
  Asymptote out;
  out.d4_md = c.eta == 0.0 ? std::exp(-2.0 * c.r_prime) / full
                           : std::exp(-2.0 * c.r_prime * (1.0 + c.eta)) / (4.0 * c.b);
  const double mdcr_base = std::exp(-2.0 * c.r_prime * (1.0 + c.eta));
  out.d4_mdcr = c.eta1 == c.eta ? mdcr_base / full : mdcr_base / (4.0 * c.b);
  out.product_bound = std::exp(-4.0 * c.r_prime) / 4.0;
  return out;
}

inline double balanced_side_distortion(const AsymptoticConfig& c) {
  return c.b * std::exp(-2.0 * (1.0 - c.eta) * c.r_prime);
}

/// Exact central-distortion bound of the balanced MD system.
inline double balanced_md_exact(const AsymptoticConfig& c) {
  const double side = balanced_side_distortion(c);
  return dr_bound(GaussianSource(1.0), {0.0, c.r_prime, c.r_prime, 0.0}, kUnconstrained, side, side).d4_bound;
}

/// Exact central-distortion bound of the balanced MDCR system with
/// R2 = R3 = (1−η1)R' and R4 = 2η1R'.
inline double balanced_mdcr_exact(const AsymptoticConfig& c) {
  const double side = balanced_side_distortion(c);
  const double base = (1.0 - c.eta1) * c.r_prime;
  return dr_bound(GaussianSource(1.0), {0.0, base, base, 2.0 * c.eta1 * c.r_prime}, kUnconstrained, side, side)
      .d4_bound;
}

struct ConvergenceRow {
  double r_prime = 0.0;
  double exact_md = 0.0;
  double asymptote_md = 0.0;
  double ratio_md = 0.0;
  double exact_mdcr = 0.0;
  double asymptote_mdcr = 0.0;
  double ratio_mdcr = 0.0;
};

/// Exact/asymptote ratios along an increasing grid of R' ≥ 1 nat.
inline std::vector<ConvergenceRow> asymptote_convergence(AsymptoticConfig c, const std::vector<double>& r_grid) {
  std::vector<ConvergenceRow> rows;
  double prev = 0.0;
  for (double r : r_grid) {
    if (!(r >= 1.0) || r <= prev) throw Error(ErrorKind::InvalidArgument, "grid must be increasing with R' >= 1");
    prev = r;
    c.r_prime = r;
    validate(c);
    const Asymptote a = high_rate_asymptote(c);
    ConvergenceRow row;
    row.r_prime = r;
    row.exact_md = balanced_md_exact(c);
    row.asymptote_md = a.d4_md;
    row.ratio_md = row.exact_md / row.asymptote_md;
    row.exact_mdcr = balanced_mdcr_exact(c);
    row.asymptote_mdcr = a.d4_mdcr;
    row.ratio_mdcr = row.exact_mdcr / row.asymptote_mdcr;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gaussrd

#endif  // GAUSSRD_ANALYSIS_HPP
