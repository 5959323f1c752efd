// Small dense linear-Gaussian engine: validated covariance matrices,
// Schur-complement conditional MMSE, and a seeded Monte Carlo check of the
// resulting estimators.

#ifndef GAUSSRD_MMSE_HPP
#define GAUSSRD_MMSE_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "gaussrd/core.hpp"

namespace gaussrd {

inline constexpr int kMaxCovarianceDim = 6;

/// Symmetric positive semidefinite matrix of dimension 1..6.
///
/// `Scalar` is double for sampling and long double where a Schur complement
/// must resolve error variances many orders below the prior variance.
template <typename Scalar>
class BasicCovariance {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit BasicCovariance(Matrix entries) : m_(std::move(entries)) {
    using std::abs;
    const auto n = m_.rows();
    if (n < 1 || n > kMaxCovarianceDim || m_.cols() != n) {
      throw Error(ErrorKind::InvalidCovariance, "dimension must be square and within 1..6");
    }
    if (!m_.allFinite()) throw Error(ErrorKind::InvalidCovariance, "non-finite entry");
    const Scalar scale = std::max<Scalar>(m_.cwiseAbs().maxCoeff(), Scalar(1e-300));
    if ((m_ - m_.transpose()).cwiseAbs().maxCoeff() > Scalar(1e-12) * scale) {
      throw Error(ErrorKind::InvalidCovariance, "matrix is not symmetric");
    }
    m_ = Scalar(0.5) * (m_ + m_.transpose());
    const Eigen::SelfAdjointEigenSolver<Matrix> eig(m_);
    if (eig.eigenvalues().minCoeff() < Scalar(-1e-10) * abs(m_.trace())) {
      throw Error(ErrorKind::InvalidCovariance, "matrix is not positive semidefinite");
    }
  }

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const noexcept { return m_; }
  Scalar operator()(int i, int j) const { return m_(i, j); }

 private:
  Matrix m_;
};

using CovarianceMatrix = BasicCovariance<double>;
using PreciseCovariance = BasicCovariance<long double>;

struct MmseResult {
  std::vector<double> coefficients;  // one weight per observed index, same order
  double error_variance = 0.0;
};

namespace detail {

template <typename Scalar>
void check_indices(const BasicCovariance<Scalar>& joint, int target, std::span<const int> observed) {
  auto in_range = [&](int i) { return i >= 0 && i < joint.dim(); };
  if (!in_range(target)) throw Error(ErrorKind::InvalidArgument, "target index out of range");
  for (int i : observed) {
    if (!in_range(i)) throw Error(ErrorKind::InvalidArgument, "observed index out of range");
  }
}

}  // namespace detail

/// Linear MMSE estimate of joint[target] from joint[observed]. The error
/// variance is the Schur complement Σ_tt − Σ_to Σ_oo⁻¹ Σ_ot.
template <typename Scalar>
MmseResult conditional_mmse(const BasicCovariance<Scalar>& joint, int target,
                            std::span<const int> observed) {
  using Matrix = typename BasicCovariance<Scalar>::Matrix;
  using Vector = typename BasicCovariance<Scalar>::Vector;
  detail::check_indices(joint, target, observed);
  const auto& s = joint.matrix();
  const auto k = static_cast<Eigen::Index>(observed.size());
  if (k == 0) return {{}, static_cast<double>(s(target, target))};

  Matrix soo(k, k);
  Vector sot(k);
  for (Eigen::Index a = 0; a < k; ++a) {
    sot(a) = s(observed[a], target);
    for (Eigen::Index b = 0; b < k; ++b) soo(a, b) = s(observed[a], observed[b]);
  }
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(soo);
  if (!(eig.eigenvalues().minCoeff() > Scalar(1e-12) * soo.trace())) {
    throw Error(ErrorKind::SingularObservation, "observation covariance is numerically singular");
  }
  const Vector w = soo.ldlt().solve(sot);
  const Scalar err = std::max<Scalar>(0, s(target, target) - sot.dot(w));
  MmseResult out;
  out.coefficients.reserve(static_cast<std::size_t>(k));
  for (Eigen::Index a = 0; a < k; ++a) out.coefficients.push_back(static_cast<double>(w(a)));
  out.error_variance = static_cast<double>(err);
  return out;
}

template <typename Scalar>
MmseResult conditional_mmse(const BasicCovariance<Scalar>& joint, int target,
                            std::initializer_list<int> observed) {
  return conditional_mmse(joint, target, std::span<const int>(observed.begin(), observed.size()));
}

/// Standard normal stream on top of std::mt19937_64.
///
/// mt19937_64 is fully specified by the standard, so its raw output for a
/// given seed is identical everywhere. std::normal_distribution is not, so
/// normals are produced here by Box-Muller from 53-bit uniforms.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

  /// Substream for shard `index`, seeded from (seed, index) via splitmix64.
  static NormalStream substream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return NormalStream(z ^ (z >> 31));
  }

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double operator()() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Factor L with L Lᵀ = Σ from a symmetric eigendecomposition; eigenvalues
/// above −1e−10·trace are clamped to zero.
inline Eigen::MatrixXd sampling_factor(const CovarianceMatrix& joint) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(joint.matrix());
  const Eigen::VectorXd root = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * root.asDiagonal();
}

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Empirical MSE of the analytic linear estimator over `samples` joint draws.
inline MonteCarloEstimate mc_estimate_mse(const CovarianceMatrix& joint, int target,
                                          std::span<const int> observed, long samples,
                                          std::uint64_t seed) {
  if (samples < 1000) throw Error(ErrorKind::InvalidArgument, "need at least 1000 samples");
  const MmseResult est = conditional_mmse(joint, target, observed);
  const Eigen::MatrixXd factor = sampling_factor(joint);
  const int n = joint.dim();

  NormalStream normal(seed);
  Eigen::VectorXd z(n);
  Eigen::VectorXd v(n);
  double mean = 0.0;
  double m2 = 0.0;
  for (long i = 0; i < samples; ++i) {
    for (int j = 0; j < n; ++j) z(j) = normal();
    v.noalias() = factor * z;
    double err = v(target);
    for (std::size_t a = 0; a < observed.size(); ++a) err -= est.coefficients[a] * v(observed[a]);
    const double sq = err * err;
    // Welford update
    const double delta = sq - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (sq - mean);
  }
  const double var = m2 / static_cast<double>(samples - 1);
  return {mean, std::sqrt(var / static_cast<double>(samples))};
}

inline MonteCarloEstimate mc_estimate_mse(const CovarianceMatrix& joint, int target,
                                          std::initializer_list<int> observed, long samples,
                                          std::uint64_t seed) {
  return mc_estimate_mse(joint, target, std::span<const int>(observed.begin(), observed.size()),
                         samples, seed);
}

}  // namespace gaussrd

#endif  // GAUSSRD_MMSE_HPP
