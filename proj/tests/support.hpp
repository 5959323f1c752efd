// Shared fixtures for the test suites: seeded random inputs and oracles
// that take a different computational route from the library.

#ifndef GAUSSRD_TESTS_SUPPORT_HPP
#define GAUSSRD_TESTS_SUPPORT_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "gaussrd/discrete.hpp"
#include "gaussrd/mmse.hpp"

namespace testsupport {

/// Random covariance A Aᵀ + 0.1 I of dimension n.
inline gaussrd::CovarianceMatrix random_covariance(gaussrd::NormalStream& rng, int n) {
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng();
  Eigen::MatrixXd m = a * a.transpose() + 0.1 * Eigen::MatrixXd::Identity(n, n);
  return gaussrd::CovarianceMatrix(m);
}

/// Error variance from the precision matrix of (target, observed):
/// 1 / (Σ_sub⁻¹)_00. No Schur complement is formed explicitly.
inline double precision_route_mmse(const gaussrd::CovarianceMatrix& c, int target, const std::vector<int>& obs) {
  std::vector<int> idx{target};
  idx.insert(idx.end(), obs.begin(), obs.end());
  const auto k = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd sub(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = c(idx[i], idx[j]);
  return 1.0 / sub.inverse()(0, 0);
}

/// Random pmf with the given alphabet sizes; a share of entries is zeroed
/// to exercise the 0·log 0 convention.
inline gaussrd::JointPmf random_pmf(gaussrd::NormalStream& rng, gaussrd::JointPmf::Sizes sizes,
                                    double zero_share = 0.2) {
  std::size_t total = 1;
  for (int n : sizes) total *= static_cast<std::size_t>(n);
  std::vector<double> p(total);
  double sum = 0.0;
  for (auto& v : p) {
    v = rng.uniform() < zero_share ? 0.0 : rng.uniform();
    sum += v;
  }
  if (sum == 0.0) {
    p[0] = 1.0;
    sum = 1.0;
  }
  for (auto& v : p) v /= sum;
  return gaussrd::JointPmf(sizes, std::move(p));
}

/// Random pmf whose X marginal is exactly `px`: P(x) times a random
/// conditional law of (U1..U4) given x.
inline gaussrd::JointPmf random_pmf_given_x(gaussrd::NormalStream& rng, gaussrd::JointPmf::Sizes sizes,
                                            const std::vector<double>& px) {
  std::size_t inner = 1;
  for (int v = 1; v < gaussrd::JointPmf::kVars; ++v) inner *= static_cast<std::size_t>(sizes[v]);
  std::vector<double> p;
  for (std::size_t x = 0; x < px.size(); ++x) {
    std::vector<double> cond(inner);
    double sum = 0.0;
    for (auto& v : cond) sum += (v = 0.05 + rng.uniform());
    for (double v : cond) p.push_back(px[x] * v / sum);
  }
  return gaussrd::JointPmf(sizes, std::move(p));
}

/// Joint entropy H(S) in nats of the variables whose bits are set in `mask`
/// (bit 0 = X, bit i = Ui), by hashing full coordinates into a map.
inline double joint_entropy(const gaussrd::JointPmf& pmf, unsigned mask) {
  std::map<std::vector<int>, double> m;
  const auto& p = pmf.probabilities();
  for (std::size_t flat = 0; flat < p.size(); ++flat) {
    const auto c = pmf.unflatten(flat);
    std::vector<int> key;
    for (int v = 0; v < gaussrd::JointPmf::kVars; ++v)
      if (mask & (1u << v)) key.push_back(c[v]);
    m[key] += p[flat];
  }
  double h = 0.0;
  for (const auto& [k, q] : m)
    if (q > 0.0) h -= q * std::log(q);
  return h;
}

/// I(A;B|C) = H(AC) + H(BC) − H(ABC) − H(C).
inline double cmi_by_entropies(const gaussrd::JointPmf& pmf, unsigned a, unsigned b, unsigned c) {
  return joint_entropy(pmf, a | c) + joint_entropy(pmf, b | c) - joint_entropy(pmf, a | b | c) -
         joint_entropy(pmf, c);
}

inline gaussrd::RateRegionBounds bounds_by_entropies(const gaussrd::JointPmf& pmf) {
  constexpr unsigned x = 1, u1 = 2, u2 = 4, u3 = 8, u4 = 16;
  const double coupling = cmi_by_entropies(pmf, u2, u3, u1);
  return {cmi_by_entropies(pmf, x, u1, 0), cmi_by_entropies(pmf, x, u1 | u2, 0),
          cmi_by_entropies(pmf, x, u1 | u3, 0), cmi_by_entropies(pmf, x, u1 | u2 | u3, 0) + coupling,
          cmi_by_entropies(pmf, x, u1 | u2 | u3 | u4, 0) + coupling};
}

inline double max_abs_diff(const gaussrd::RateRegionBounds& a, const gaussrd::RateRegionBounds& b) {
  return std::max({std::abs(a.b1 - b.b1), std::abs(a.b12 - b.b12), std::abs(a.b13 - b.b13),
                   std::abs(a.b123 - b.b123), std::abs(a.b1234 - b.b1234)});
}

/// Minimum-expected-distortion decoders chosen by brute force per argument.
inline gaussrd::DecoderMaps greedy_decoders(const gaussrd::JointPmf& pmf, std::vector<double> dmat, int k) {
  const auto& n = pmf.sizes();
  const auto& p = pmf.probabilities();
  gaussrd::DecoderMaps dec;
  dec.reconstruction_size = k;
  dec.distortion_matrix = dmat;
  // score[table][arg][xhat]
  std::vector<std::vector<double>> s1(static_cast<std::size_t>(n[1]), std::vector<double>(k));
  std::vector<std::vector<double>> s2(static_cast<std::size_t>(n[1] * n[2]), std::vector<double>(k));
  std::vector<std::vector<double>> s3(static_cast<std::size_t>(n[1] * n[3]), std::vector<double>(k));
  std::vector<std::vector<double>> s4(static_cast<std::size_t>(n[1] * n[2] * n[3] * n[4]), std::vector<double>(k));
  for (std::size_t flat = 0; flat < p.size(); ++flat) {
    const auto c = pmf.unflatten(flat);
    for (int xh = 0; xh < k; ++xh) {
      const double w = p[flat] * dmat[static_cast<std::size_t>(c[0] * k + xh)];
      s1[c[1]][xh] += w;
      s2[c[1] * n[2] + c[2]][xh] += w;
      s3[c[1] * n[3] + c[3]][xh] += w;
      s4[((c[1] * n[2] + c[2]) * n[3] + c[3]) * n[4] + c[4]][xh] += w;
    }
  }
  const auto argmin = [](const std::vector<double>& v) {
    return static_cast<int>(std::min_element(v.begin(), v.end()) - v.begin());
  };
  for (const auto& v : s1) dec.g1.push_back(argmin(v));
  for (const auto& v : s2) dec.g2.push_back(argmin(v));
  for (const auto& v : s3) dec.g3.push_back(argmin(v));
  for (const auto& v : s4) dec.g4.push_back(argmin(v));
  return dec;
}

/// E d(X, g(U)) by looping over every coordinate tuple through JointPmf::at.
inline std::array<double, 4> brute_force_distortions(const gaussrd::JointPmf& pmf, const gaussrd::DecoderMaps& d) {
  const auto& n = pmf.sizes();
  const int k = d.reconstruction_size;
  std::array<double, 4> e{};
  for (int x = 0; x < n[0]; ++x)
    for (int a = 0; a < n[1]; ++a)
      for (int b = 0; b < n[2]; ++b)
        for (int c = 0; c < n[3]; ++c)
          for (int q = 0; q < n[4]; ++q) {
            const double pr = pmf.at({x, a, b, c, q});
            const auto dd = [&](int xh) { return d.distortion_matrix[static_cast<std::size_t>(x * k + xh)]; };
            e[0] += pr * dd(d.g1[a]);
            e[1] += pr * dd(d.g2[a * n[2] + b]);
            e[2] += pr * dd(d.g3[a * n[3] + c]);
            e[3] += pr * dd(d.g4[((a * n[2] + b) * n[3] + c) * n[4] + q]);
          }
  return e;
}

inline std::vector<double> hamming(int n) {
  std::vector<double> m(static_cast<std::size_t>(n * n), 1.0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 0.0;
  return m;
}

}  // namespace testsupport

#endif  // GAUSSRD_TESTS_SUPPORT_HPP
