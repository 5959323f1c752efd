// Shared domain types for the two-user two-layer Gaussian successive
// refinement problem: source, rate and distortion tuples, regime tags and
// the single-branch feasibility predicate.
//
// All rates are carried in nats internally. Distortions are mean squared
// errors in squared source units.

#ifndef GAUSSRD_CORE_HPP
#define GAUSSRD_CORE_HPP

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gaussrd {

enum class ErrorKind {
  InvalidArgument,
  InfeasibleDistortion,
  NegativeDelta,
  OutOfRegime,
  InvalidRegimeInput,
  SingularObservation,
  InvalidChannel,
  InvalidCovariance,
  InvalidPmf,
  DimensionMismatch,
  AlphabetMismatch,
};

inline constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InfeasibleDistortion: return "InfeasibleDistortion";
    case ErrorKind::NegativeDelta: return "NegativeDelta";
    case ErrorKind::OutOfRegime: return "OutOfRegime";
    case ErrorKind::InvalidRegimeInput: return "InvalidRegimeInput";
    case ErrorKind::SingularObservation: return "SingularObservation";
    case ErrorKind::InvalidChannel: return "InvalidChannel";
    case ErrorKind::InvalidCovariance: return "InvalidCovariance";
    case ErrorKind::InvalidPmf: return "InvalidPmf";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Relative slack used for every boundary comparison against an exp() floor.
inline constexpr double kBoundaryRelTol = 1e-12;

class GaussianSource {
 public:
  explicit GaussianSource(double variance) : variance_(variance) {
    if (!(variance > 0.0) || !std::isfinite(variance)) {
      throw Error(ErrorKind::InvalidArgument, "source variance must be positive and finite");
    }
  }

  double variance() const noexcept { return variance_; }

 private:
  double variance_;
};

/// Description rates in nats per source symbol. Index 1 is the common
/// first-layer description, 2 and 3 the per-user first-round refinements,
/// 4 the second-round refinement seen by the good user.
struct RateTuple {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;
  double r4 = 0.0;

  double sum() const noexcept { return r1 + r2 + r3 + r4; }
};

inline void validate(const RateTuple& rates) {
  for (double r : {rates.r1, rates.r2, rates.r3, rates.r4}) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw Error(ErrorKind::InvalidArgument, "rates must be non-negative and finite");
    }
  }
}

/// First-layer distortion. An empty value means the decoder-1 constraint is
/// dropped, which is how the plain two-description problem is embedded.
using FirstLayerDistortion = std::optional<double>;

inline constexpr FirstLayerDistortion kUnconstrained = std::nullopt;

struct DistortionTuple {
  FirstLayerDistortion d1 = kUnconstrained;
  double d2 = 0.0;
  double d3 = 0.0;
  double d4 = 0.0;
};

inline void validate_distortion(double d) {
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw Error(ErrorKind::InvalidArgument, "distortions must be positive and finite");
  }
}

inline void validate(const FirstLayerDistortion& d1) {
  if (d1) validate_distortion(*d1);
}

inline void validate(const DistortionTuple& dist) {
  validate(dist.d1);
  validate_distortion(dist.d2);
  validate_distortion(dist.d3);
  validate_distortion(dist.d4);
}

enum class RegimeTag {
  NonDegenerate,
  DegeneratePiLessDelta,
  RdRegimeLow,
  RdRegimeSlack,
  RdRegimeExcess,
};

inline constexpr std::string_view to_string(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::NonDegenerate: return "NonDegenerate";
    case RegimeTag::DegeneratePiLessDelta: return "DegeneratePiLessDelta";
    case RegimeTag::RdRegimeLow: return "RdRegimeLow";
    case RegimeTag::RdRegimeSlack: return "RdRegimeSlack";
    case RegimeTag::RdRegimeExcess: return "RdRegimeExcess";
  }
  return "Unknown";
}

enum class RateUnit { Nats, Bits };

inline constexpr std::string_view to_string(RateUnit unit) {
  return unit == RateUnit::Nats ? "nats" : "bits";
}

inline std::optional<RateUnit> parse_rate_unit(std::string_view s) {
  if (s == "nats") return RateUnit::Nats;
  if (s == "bits") return RateUnit::Bits;
  return std::nullopt;
}

inline double convert_rate(double r, RateUnit from, RateUnit to) {
  if (from == to) return r;
  return from == RateUnit::Bits ? r * std::numbers::ln2 : r / std::numbers::ln2;
}

inline RateTuple convert_rates(const RateTuple& rates, RateUnit from, RateUnit to) {
  return {convert_rate(rates.r1, from, to), convert_rate(rates.r2, from, to),
          convert_rate(rates.r3, from, to), convert_rate(rates.r4, from, to)};
}

/// Gaussian distortion-rate function sigma^2 exp(-2R).
inline double distortion_floor(double variance, double rate) {
  return variance * std::exp(-2.0 * rate);
}

/// R(D) = 1/2 log(1/D) for a normalized distortion D in (0, 1].
inline double rate_of(double normalized_distortion) {
  return 0.5 * std::log(1.0 / normalized_distortion);
}

inline bool at_least(double value, double floor) {
  return value >= floor * (1.0 - kBoundaryRelTol);
}

/// The three single-branch bounds on (d1, d2, d3). d4 is not consulted.
inline bool feasible_individual(const GaussianSource& source, const RateTuple& rates,
                                const FirstLayerDistortion& d1, double d2, double d3) {
  const double var = source.variance();
  if (d1 && !at_least(*d1, distortion_floor(var, rates.r1))) return false;
  return at_least(d2, distortion_floor(var, rates.r1 + rates.r2)) &&
         at_least(d3, distortion_floor(var, rates.r1 + rates.r3));
}

inline bool feasible_individual(const GaussianSource& source, const RateTuple& rates,
                                const DistortionTuple& dist) {
  return feasible_individual(source, rates, dist.d1, dist.d2, dist.d3);
}

}  // namespace gaussrd

#endif  // GAUSSRD_CORE_HPP
