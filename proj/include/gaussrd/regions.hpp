// Distortion-rate and rate-distortion characterizations of the Gaussian
// two-user two-layer region, the auxiliary-noise converse witness, and a
// grid scan that checks the two characterizations describe the same set.

#ifndef GAUSSRD_REGIONS_HPP
#define GAUSSRD_REGIONS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <vector>

#include "gaussrd/core.hpp"

namespace gaussrd {

/// Normalized side/central quantities shared by both characterizations.
/// `a` and `b` are the side distortions divided by d1* and clipped to 1,
/// `s` is exp(−2(R2+R3)).
struct ProductExcess {
  double pi = 0.0;
  double delta = 0.0;
};

namespace detail {

inline constexpr double kDeltaClampRel = 8.0 * kBoundaryRelTol;

inline ProductExcess product_excess(double a, double b, double s) {
  ProductExcess pe{(1.0 - a) * (1.0 - b), a * b - s};
  if (pe.delta < 0.0) {
    if (pe.delta < -kDeltaClampRel * std::max(s, a * b)) {
      throw Error(ErrorKind::NegativeDelta, "excess term is negative for a feasible input");
    }
    pe.delta = 0.0;
  }
  return pe;
}

/// 1 − (|√Π − √Δ|⁺)²; always in (0, 1].
inline double central_denominator(const ProductExcess& pe) {
  const double gap = std::max(std::sqrt(pe.pi) - std::sqrt(pe.delta), 0.0);
  const double denom = 1.0 - gap * gap;
  if (!(denom > 0.0)) throw Error(ErrorKind::NegativeDelta, "central-distortion denominator is not positive");
  return denom;
}

}  // namespace detail

/// Lower bound on d̂4/d1* for normalized side distortions (a, b) and
/// s = exp(−2(R2+R3)); non-decreasing in s.
inline double normalized_central_bound(double a, double b, double s) {
  return s / detail::central_denominator(detail::product_excess(a, b, s));
}

struct DrBoundResult {
  double d1_star = 0.0;
  double d2_hat = 0.0;
  double d3_hat = 0.0;
  double pi = 0.0;
  double delta = 0.0;
  double d4_bound = 0.0;
  RegimeTag regime = RegimeTag::NonDegenerate;
};

/// Minimal achievable d4 for the given rates and side distortions.
inline DrBoundResult dr_bound(const GaussianSource& source, const RateTuple& rates,
                              const FirstLayerDistortion& d1, double d2, double d3) {
  validate(rates);
  validate(d1);
  validate_distortion(d2);
  validate_distortion(d3);
  if (!feasible_individual(source, rates, d1, d2, d3)) {
    throw Error(ErrorKind::InfeasibleDistortion, "a single-branch distortion bound is violated");
  }
  DrBoundResult out;
  out.d1_star = distortion_floor(source.variance(), rates.r1);
  out.d2_hat = std::min(d2, out.d1_star);
  out.d3_hat = std::min(d3, out.d1_star);
  const double s = std::exp(-2.0 * (rates.r2 + rates.r3));
  const auto pe = detail::product_excess(out.d2_hat / out.d1_star, out.d3_hat / out.d1_star, s);
  out.pi = pe.pi;
  out.delta = pe.delta;
  out.d4_bound = distortion_floor(source.variance(), rates.sum()) / detail::central_denominator(pe);
  out.regime = pe.pi < pe.delta ? RegimeTag::DegeneratePiLessDelta : RegimeTag::NonDegenerate;
  return out;
}

inline DrBoundResult dr_bound(const GaussianSource& source, const RateTuple& rates,
                              const DistortionTuple& dist) {
  return dr_bound(source, rates, dist.d1, dist.d2, dist.d3);
}

/// Lower bound on t = exp(2/n I(X̂2;X̂3|φ1)) for auxiliary noise variance ε.
inline double converse_t(double d1_star, double d2, double d3, double s, double epsilon) {
  const double num = epsilon * (d1_star + epsilon);
  const double den = (d2 + epsilon) * (d3 + epsilon) - (d1_star + epsilon) * d1_star * s;
  return num / den;
}

struct ConverseWitness {
  double d1_star = 0.0;
  double epsilon_star = 0.0;  // +inf on the trivial branch
  double pi_star = 0.0;
  double delta_star = 0.0;
  double t_bound = 1.0;
};

inline ConverseWitness converse_witness(const GaussianSource& source, const RateTuple& rates,
                                        const FirstLayerDistortion& d1, double d2, double d3) {
  validate(rates);
  validate(d1);
  validate_distortion(d2);
  validate_distortion(d3);
  if (!feasible_individual(source, rates, d1, d2, d3)) {
    throw Error(ErrorKind::InfeasibleDistortion, "a single-branch distortion bound is violated");
  }
  ConverseWitness w;
  w.d1_star = distortion_floor(source.variance(), rates.r1);
  if (d2 > w.d1_star || d3 > w.d1_star) {
    throw Error(ErrorKind::OutOfRegime, "witness needs d2 <= d1* and d3 <= d1*");
  }
  const double s = std::exp(-2.0 * (rates.r2 + rates.r3));
  const auto pe = detail::product_excess(d2 / w.d1_star, d3 / w.d1_star, s);
  w.pi_star = pe.pi;
  w.delta_star = pe.delta;
  if (pe.pi >= pe.delta) {
    const double gap = std::sqrt(pe.pi) - std::sqrt(pe.delta);
    w.epsilon_star = gap > 0.0 ? w.d1_star * std::sqrt(pe.delta) / gap
                               : std::numeric_limits<double>::infinity();
    w.t_bound = 1.0 / (1.0 - gap * gap);
  } else {
    w.epsilon_star = std::numeric_limits<double>::infinity();
    w.t_bound = 1.0;
  }
  return w;
}

struct RdBoundResult {
  double r1_star = 0.0;
  double d1_star = 0.0;
  double d2_hat = 0.0;
  double d3_hat = 0.0;
  double d4_hat = 0.0;
  double r2_bound = 0.0;
  double r3_bound = 0.0;
  double low_threshold = 0.0;       // d̂2 + d̂3 − d1*
  double harmonic_threshold = 0.0;  // (d̂2⁻¹ + d̂3⁻¹ − d1*⁻¹)⁻¹
  double sum_bound = 0.0;           // on R2 + R3
  double excess = 0.0;              // L, closed form
  RegimeTag regime = RegimeTag::RdRegimeSlack;
};

/// Closed-form excess sum rate L for the middle regime, with the signs that
/// make L ≥ 0 and continuous at d̂4 = d̂2 + d̂3 − d1*.
inline double excess_rate(double d1_star, double d2_hat, double d3_hat, double d4_hat) {
  const double pi = (1.0 - d2_hat / d1_star) * (1.0 - d3_hat / d1_star);
  const double head = d1_star - d4_hat;
  const double cross = d1_star * std::sqrt(pi) -
                       std::sqrt(std::max(d2_hat - d4_hat, 0.0)) * std::sqrt(std::max(d3_hat - d4_hat, 0.0));
  return 0.5 * std::log(head * head / (head * head - cross * cross));
}

/// Smallest R2 + R3 whose central bound reaches d̂4, by bisection on
/// s = exp(−2(R2+R3)) over [0, a·b]. Requires d̂4 below the harmonic
/// threshold so that a crossing exists.
inline double invert_sum_rate(double d1_star, double d2_hat, double d3_hat, double d4_hat) {
  const double a = d2_hat / d1_star;
  const double b = d3_hat / d1_star;
  const double target = d4_hat / d1_star;
  double lo = 0.0;
  double hi = a * b;
  if (normalized_central_bound(a, b, hi) <= target) return rate_of(hi);
  for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (normalized_central_bound(a, b, mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return rate_of(0.5 * (lo + hi));
}

/// Rate bounds for given distortions and first/second-round rates R1, R4.
inline RdBoundResult rd_bound(const GaussianSource& source, double r1, double r4,
                              const DistortionTuple& dist) {
  validate(RateTuple{r1, 0.0, 0.0, r4});
  validate(dist);
  const double var = source.variance();
  RdBoundResult out;
  out.r1_star = dist.d1 ? rate_of(std::min(*dist.d1, var) / var) : 0.0;
  if (r1 < out.r1_star && !at_least(*dist.d1, distortion_floor(var, r1))) {
    throw Error(ErrorKind::InfeasibleDistortion, "R1 is below R1*(d1)");
  }
  out.d1_star = distortion_floor(var, r1);
  out.d2_hat = std::min(dist.d2, out.d1_star);
  out.d3_hat = std::min(dist.d3, out.d1_star);
  out.d4_hat = dist.d4 * std::exp(2.0 * r4);
  out.r2_bound = rate_of(out.d2_hat / out.d1_star);
  out.r3_bound = rate_of(out.d3_hat / out.d1_star);
  out.low_threshold = out.d2_hat + out.d3_hat - out.d1_star;
  out.harmonic_threshold = 1.0 / (1.0 / out.d2_hat + 1.0 / out.d3_hat - 1.0 / out.d1_star);
  if (out.low_threshold > out.harmonic_threshold * (1.0 + kBoundaryRelTol)) {
    throw Error(ErrorKind::InvalidRegimeInput, "regime thresholds cross");
  }

  // At an exact threshold the regime with the smaller sum bound wins.
  if (out.d4_hat >= out.harmonic_threshold) {
    out.regime = RegimeTag::RdRegimeSlack;
    out.sum_bound = 0.0;
  } else if (out.d4_hat <= out.low_threshold) {
    out.regime = RegimeTag::RdRegimeLow;
    out.sum_bound = rate_of(out.d4_hat / out.d1_star);
  } else {
    out.regime = RegimeTag::RdRegimeExcess;
    out.excess = excess_rate(out.d1_star, out.d2_hat, out.d3_hat, out.d4_hat);
    out.sum_bound = invert_sum_rate(out.d1_star, out.d2_hat, out.d3_hat, out.d4_hat);
  }
  return out;
}

enum class Membership { In, Boundary, Out };

namespace detail {

class MembershipAccumulator {
 public:
  explicit MembershipAccumulator(double tol) : tol_(tol) {}

  /// value ≥ floor, compared relatively.
  void ratio(double value, double floor) { margin(value / floor - 1.0); }
  /// value ≥ floor, compared absolutely (rates in nats).
  void difference(double value, double floor) { margin(value - floor); }

  Membership result() const { return out_ ? Membership::Out : (edge_ ? Membership::Boundary : Membership::In); }

 private:
  void margin(double m) {
    if (m < -tol_) {
      out_ = true;
    } else if (m <= tol_) {
      edge_ = true;
    }
  }

  double tol_;
  bool out_ = false;
  bool edge_ = false;
};

}  // namespace detail

/// Membership of (rates, dist) in the distortion-rate description.
inline Membership dr_membership(const GaussianSource& source, const RateTuple& rates,
                                const DistortionTuple& dist, double tol = 1e-9) {
  const double var = source.variance();
  detail::MembershipAccumulator acc(tol);
  if (dist.d1) acc.ratio(*dist.d1, distortion_floor(var, rates.r1));
  acc.ratio(dist.d2, distortion_floor(var, rates.r1 + rates.r2));
  acc.ratio(dist.d3, distortion_floor(var, rates.r1 + rates.r3));
  if (acc.result() == Membership::Out) return Membership::Out;
  // Clamp boundary-tolerance points onto the floors so the bound is defined.
  const double d2 = std::max(dist.d2, distortion_floor(var, rates.r1 + rates.r2));
  const double d3 = std::max(dist.d3, distortion_floor(var, rates.r1 + rates.r3));
  const auto d1 = dist.d1 ? FirstLayerDistortion(std::max(*dist.d1, distortion_floor(var, rates.r1)))
                          : kUnconstrained;
  acc.ratio(dist.d4, dr_bound(source, rates, d1, d2, d3).d4_bound);
  return acc.result();
}

/// Membership of (rates, dist) in the rate-distortion description.
inline Membership rd_membership(const GaussianSource& source, const RateTuple& rates,
                                const DistortionTuple& dist, double tol = 1e-9) {
  detail::MembershipAccumulator acc(tol);
  const double var = source.variance();
  const double r1_star = dist.d1 ? rate_of(std::min(*dist.d1, var) / var) : 0.0;
  // R1 ≥ 0 is the domain, not a constraint: only a positive R1* is checked.
  if (r1_star > 0.0) acc.difference(rates.r1, r1_star);
  if (acc.result() == Membership::Out) return Membership::Out;
  auto d1 = dist.d1;
  if (d1) d1 = std::max(*d1, distortion_floor(var, rates.r1));
  const RdBoundResult rd = rd_bound(source, rates.r1, rates.r4, {d1, dist.d2, dist.d3, dist.d4});
  acc.difference(rates.r2, rd.r2_bound);
  acc.difference(rates.r3, rd.r3_bound);
  acc.difference(rates.r2 + rates.r3, rd.sum_bound);
  return acc.result();
}

struct EquivalenceGrid {
  std::vector<double> r1;
  std::vector<double> r4;
  std::vector<FirstLayerDistortion> d1;
  std::vector<double> d2;
  std::vector<double> d3;
  std::vector<double> r2;
  std::vector<double> r3;
  std::vector<double> d4;

  std::size_t size() const {
    return r1.size() * r4.size() * d1.size() * d2.size() * d3.size() * r2.size() * r3.size() * d4.size();
  }
};

struct EquivalenceMismatch {
  RateTuple rates;
  DistortionTuple dist;
  Membership dr = Membership::Out;
  Membership rd = Membership::Out;
};

struct EquivalenceReport {
  std::size_t points = 0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;    // d1 infeasible at R1: outside both descriptions trivially
  std::size_t boundary = 0;   // either side within tolerance of its boundary
  std::size_t members = 0;
  std::map<RegimeTag, std::size_t> regime_counts;
  std::vector<EquivalenceMismatch> mismatches;
};

inline EquivalenceReport equivalence_scan(const GaussianSource& source, const EquivalenceGrid& grid,
                                          double tol = 1e-9) {
  EquivalenceReport report;
  report.points = grid.size();
  const double var = source.variance();
  for (double r1 : grid.r1)
    for (double r4 : grid.r4)
      for (const auto& d1 : grid.d1)
        for (double d2 : grid.d2)
          for (double d3 : grid.d3)
            for (double r2 : grid.r2)
              for (double r3 : grid.r3)
                for (double d4 : grid.d4) {
                  const RateTuple rates{r1, r2, r3, r4};
                  const DistortionTuple dist{d1, d2, d3, d4};
                  if (d1 && !at_least(*d1, distortion_floor(var, r1))) {
                    ++report.skipped;
                    continue;
                  }
                  ++report.evaluated;
                  const Membership dr = dr_membership(source, rates, dist, tol);
                  const Membership rd = rd_membership(source, rates, dist, tol);
                  ++report.regime_counts[rd_bound(source, r1, r4, dist).regime];
                  if (dr == Membership::Boundary || rd == Membership::Boundary) ++report.boundary;
                  if (dr == Membership::In && rd == Membership::In) ++report.members;
                  const bool disagree = (dr == Membership::In && rd == Membership::Out) ||
                                        (dr == Membership::Out && rd == Membership::In);
                  if (disagree) report.mismatches.push_back({rates, dist, dr, rd});
                }
  return report;
}

}  // namespace gaussrd

#endif  // GAUSSRD_REGIONS_HPP
