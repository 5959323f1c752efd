// Finite-alphabet achievable region: the five sum-rate bounds of a joint pmf
// of (X, U1, U2, U3, U4), expected distortions of deterministic decoders,
// and the Bernoulli time-sharing construction that makes the region convex.

#ifndef GAUSSRD_DISCRETE_HPP
#define GAUSSRD_DISCRETE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "gaussrd/core.hpp"

namespace gaussrd {

/// Largest alphabet per variable. Inputs are expected to stay within 8; the
/// extra headroom lets one time-sharing step double an alphabet.
inline constexpr int kMaxAlphabet = 16;

/// Variable order everywhere: X, U1, U2, U3, U4. Probabilities are flattened
/// row-major with X the slowest index.
class JointPmf {
 public:
  static constexpr int kVars = 5;
  using Sizes = std::array<int, kVars>;

  JointPmf(Sizes sizes, std::vector<double> probabilities)
      : sizes_(sizes), p_(std::move(probabilities)) {
    std::size_t total = 1;
    for (int n : sizes_) {
      if (n < 1 || n > kMaxAlphabet) throw Error(ErrorKind::InvalidPmf, "alphabet size out of range 1..16");
      total *= static_cast<std::size_t>(n);
    }
    if (p_.size() != total) throw Error(ErrorKind::InvalidPmf, "probability tensor has the wrong length");
    double sum = 0.0;
    for (double v : p_) {
      if (!(v >= 0.0) || !std::isfinite(v)) throw Error(ErrorKind::InvalidPmf, "negative or non-finite probability");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw Error(ErrorKind::InvalidPmf, "probabilities do not sum to 1");
    strides_[kVars - 1] = 1;
    for (int v = kVars - 2; v >= 0; --v) strides_[v] = strides_[v + 1] * static_cast<std::size_t>(sizes_[v + 1]);
  }

  const Sizes& sizes() const noexcept { return sizes_; }
  const std::vector<double>& probabilities() const noexcept { return p_; }
  std::size_t stride(int var) const { return strides_[static_cast<std::size_t>(var)]; }

  /// Coordinates of flat index `flat`.
  Sizes unflatten(std::size_t flat) const {
    Sizes c{};
    for (int v = 0; v < kVars; ++v) {
      c[v] = static_cast<int>(flat / strides_[v]);
      flat %= strides_[v];
    }
    return c;
  }

  double at(const Sizes& c) const {
    std::size_t flat = 0;
    for (int v = 0; v < kVars; ++v) flat += static_cast<std::size_t>(c[v]) * strides_[v];
    return p_[flat];
  }

 private:
  Sizes sizes_;
  std::vector<double> p_;
  std::array<std::size_t, kVars> strides_{};
};

/// Lower bounds on R1, R1+R2, R1+R3, R1+R2+R3 and R1+R2+R3+R4 (nats).
struct RateRegionBounds {
  double b1 = 0.0;
  double b12 = 0.0;
  double b13 = 0.0;
  double b123 = 0.0;
  double b1234 = 0.0;
};

namespace detail {

/// Bitmask over variables: bit 0 = X, bit i = Ui.
using VarMask = unsigned;

/// Marginal pmf over the variables in `mask`, indexed mixed-radix in the
/// fixed variable order.
struct Marginal {
  std::vector<double> p;
  std::vector<std::size_t> digit_stride;  // stride inside p for each variable (0 if absent)
};

inline Marginal marginalize(const JointPmf& pmf, VarMask mask) {
  Marginal m;
  m.digit_stride.assign(JointPmf::kVars, 0);
  std::size_t size = 1;
  for (int v = JointPmf::kVars - 1; v >= 0; --v) {
    if (mask & (1u << v)) {
      m.digit_stride[static_cast<std::size_t>(v)] = size;
      size *= static_cast<std::size_t>(pmf.sizes()[v]);
    }
  }
  m.p.assign(size, 0.0);
  const auto& p = pmf.probabilities();
  for (std::size_t flat = 0; flat < p.size(); ++flat) {
    if (p[flat] == 0.0) continue;
    const auto c = pmf.unflatten(flat);
    std::size_t idx = 0;
    for (int v = 0; v < JointPmf::kVars; ++v) idx += static_cast<std::size_t>(c[v]) * m.digit_stride[v];
    m.p[idx] += p[flat];
  }
  return m;
}

inline std::size_t project(const Marginal& m, const JointPmf::Sizes& c) {
  std::size_t idx = 0;
  for (int v = 0; v < JointPmf::kVars; ++v) idx += static_cast<std::size_t>(c[v]) * m.digit_stride[v];
  return idx;
}

/// I(A;B|C) = Σ p(a,b,c) log[p(a,b,c) p(c) / (p(a,c) p(b,c))], summed over
/// the joint tensor with 0 log 0 = 0. A, B, C are disjoint masks.
inline double conditional_mutual_information(const JointPmf& pmf, VarMask a, VarMask b, VarMask c) {
  const Marginal abc = marginalize(pmf, a | b | c);
  const Marginal ac = marginalize(pmf, a | c);
  const Marginal bc = marginalize(pmf, b | c);
  const Marginal cc = marginalize(pmf, c);
  double sum = 0.0;
  // Iterate over the support of p(a,b,c) via the full tensor's coordinates,
  // visiting each marginal cell once.
  std::vector<char> seen(abc.p.size(), 0);
  const auto& p = pmf.probabilities();
  for (std::size_t flat = 0; flat < p.size(); ++flat) {
    if (p[flat] == 0.0) continue;
    const auto coords = pmf.unflatten(flat);
    const std::size_t i = project(abc, coords);
    if (seen[i]) continue;
    seen[i] = 1;
    const double pabc = abc.p[i];
    const double pc = c == 0 ? 1.0 : cc.p[project(cc, coords)];
    sum += pabc * std::log(pabc * pc / (ac.p[project(ac, coords)] * bc.p[project(bc, coords)]));
  }
  return std::max(sum, 0.0);
}

inline constexpr VarMask kMaskX = 1u;
inline constexpr VarMask mask_u(int i) { return 1u << i; }

}  // namespace detail

inline RateRegionBounds eval_region_bounds(const JointPmf& pmf) {
  using namespace detail;
  const auto mi_x = [&](VarMask us) { return conditional_mutual_information(pmf, kMaskX, us, 0); };
  const double coupling = conditional_mutual_information(pmf, mask_u(2), mask_u(3), mask_u(1));
  RateRegionBounds b;
  b.b1 = mi_x(mask_u(1));
  b.b12 = mi_x(mask_u(1) | mask_u(2));
  b.b13 = mi_x(mask_u(1) | mask_u(3));
  b.b123 = mi_x(mask_u(1) | mask_u(2) | mask_u(3)) + coupling;
  b.b1234 = mi_x(mask_u(1) | mask_u(2) | mask_u(3) | mask_u(4)) + coupling;
  return b;
}

inline bool rates_in_region(const RateRegionBounds& b, const RateTuple& r, double tol = 1e-12) {
  return r.r1 >= b.b1 - tol && r.r1 + r.r2 >= b.b12 - tol && r.r1 + r.r3 >= b.b13 - tol &&
         r.r1 + r.r2 + r.r3 >= b.b123 - tol && r.sum() >= b.b1234 - tol;
}

/// Deterministic decoders into a common reconstruction alphabet of size
/// `reconstruction_size`. Tables are row-major over their arguments:
/// g1[u1], g2[u1·|U2| + u2], g3[u1·|U3| + u3], g4[((u1·|U2| + u2)·|U3| + u3)·|U4| + u4].
/// distortion_matrix is |X| × reconstruction_size, row-major.
struct DecoderMaps {
  int reconstruction_size = 0;
  std::vector<int> g1;
  std::vector<int> g2;
  std::vector<int> g3;
  std::vector<int> g4;
  std::vector<double> distortion_matrix;
};

inline void check_decoders(const JointPmf& pmf, const DecoderMaps& dec) {
  const auto& n = pmf.sizes();
  const auto want = [](std::size_t got, std::size_t expected, const char* what) {
    if (got != expected) throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has the wrong size");
  };
  const auto sz = [](int v) { return static_cast<std::size_t>(v); };
  want(dec.g1.size(), sz(n[1]), "g1");
  want(dec.g2.size(), sz(n[1]) * sz(n[2]), "g2");
  want(dec.g3.size(), sz(n[1]) * sz(n[3]), "g3");
  want(dec.g4.size(), sz(n[1]) * sz(n[2]) * sz(n[3]) * sz(n[4]), "g4");
  want(dec.distortion_matrix.size(), sz(n[0]) * sz(dec.reconstruction_size), "distortion_matrix");
  for (const auto* g : {&dec.g1, &dec.g2, &dec.g3, &dec.g4}) {
    for (int x : *g) {
      if (x < 0 || x >= dec.reconstruction_size) {
        throw Error(ErrorKind::DimensionMismatch, "decoder output outside the reconstruction alphabet");
      }
    }
  }
}

/// Expected distortions E d(X, g1(U1)), E d(X, g2(U1,U2)), E d(X, g3(U1,U3)),
/// E d(X, g4(U1..U4)).
inline DistortionTuple eval_distortions(const JointPmf& pmf, const DecoderMaps& dec) {
  check_decoders(pmf, dec);
  const auto& n = pmf.sizes();
  const auto& p = pmf.probabilities();
  const auto k = static_cast<std::size_t>(dec.reconstruction_size);
  const auto dist = [&](int x, int xhat) { return dec.distortion_matrix[static_cast<std::size_t>(x) * k + static_cast<std::size_t>(xhat)]; };
  double e1 = 0.0, e2 = 0.0, e3 = 0.0, e4 = 0.0;
  for (std::size_t flat = 0; flat < p.size(); ++flat) {
    if (p[flat] == 0.0) continue;
    const auto c = pmf.unflatten(flat);
    const auto u1 = static_cast<std::size_t>(c[1]);
    const auto u2 = static_cast<std::size_t>(c[2]);
    const auto u3 = static_cast<std::size_t>(c[3]);
    const auto u4 = static_cast<std::size_t>(c[4]);
    const auto n2 = static_cast<std::size_t>(n[2]);
    const auto n3 = static_cast<std::size_t>(n[3]);
    const auto n4 = static_cast<std::size_t>(n[4]);
    e1 += p[flat] * dist(c[0], dec.g1[u1]);
    e2 += p[flat] * dist(c[0], dec.g2[u1 * n2 + u2]);
    e3 += p[flat] * dist(c[0], dec.g3[u1 * n3 + u3]);
    e4 += p[flat] * dist(c[0], dec.g4[((u1 * n2 + u2) * n3 + u3) * n4 + u4]);
  }
  return {e1, e2, e3, e4};
}

/// Decoders that output their own refinement variable: g1 = U1, g2 = U2,
/// g3 = U3, g4 = U4. With these, a pmf over (X, X̂1..X̂4) is evaluated the
/// same way as one over auxiliaries, which embeds the reconstruction-only
/// region in the decoder-function region.
inline DecoderMaps identity_decoders(const JointPmf& pmf, std::vector<double> distortion_matrix,
                                     int reconstruction_size) {
  const auto& n = pmf.sizes();
  for (int v = 1; v < JointPmf::kVars; ++v) {
    if (n[v] > reconstruction_size) {
      throw Error(ErrorKind::DimensionMismatch, "auxiliary alphabet larger than the reconstruction alphabet");
    }
  }
  DecoderMaps dec;
  dec.reconstruction_size = reconstruction_size;
  dec.distortion_matrix = std::move(distortion_matrix);
  for (int u1 = 0; u1 < n[1]; ++u1) {
    dec.g1.push_back(u1);
    for (int u2 = 0; u2 < n[2]; ++u2) dec.g2.push_back(u2);
    for (int u3 = 0; u3 < n[3]; ++u3) dec.g3.push_back(u3);
    for (int u2 = 0; u2 < n[2]; ++u2)
      for (int u3 = 0; u3 < n[3]; ++u3)
        for (int u4 = 0; u4 < n[4]; ++u4) dec.g4.push_back(u4);
  }
  return dec;
}

/// Expected distortions when Ui is itself the reconstruction X̂i, computed
/// from the pairwise marginals P(X, X̂i).
inline DistortionTuple eval_reconstruction_distortions(const JointPmf& pmf,
                                                       const std::vector<double>& distortion_matrix,
                                                       int reconstruction_size) {
  const auto& n = pmf.sizes();
  const auto k = static_cast<std::size_t>(reconstruction_size);
  if (distortion_matrix.size() != static_cast<std::size_t>(n[0]) * k) {
    throw Error(ErrorKind::DimensionMismatch, "distortion_matrix has the wrong size");
  }
  std::array<double, 4> e{};
  for (int i = 1; i <= 4; ++i) {
    if (n[i] > reconstruction_size) {
      throw Error(ErrorKind::DimensionMismatch, "auxiliary alphabet larger than the reconstruction alphabet");
    }
    const auto m = detail::marginalize(pmf, detail::kMaskX | detail::mask_u(i));
    for (int x = 0; x < n[0]; ++x) {
      for (int u = 0; u < n[i]; ++u) {
        const double pxu = m.p[static_cast<std::size_t>(x) * m.digit_stride[0] +
                               static_cast<std::size_t>(u) * m.digit_stride[static_cast<std::size_t>(i)]];
        e[static_cast<std::size_t>(i - 1)] += pxu * distortion_matrix[static_cast<std::size_t>(x) * k + static_cast<std::size_t>(u)];
      }
    }
  }
  return {e[0], e[1], e[2], e[3]};
}

/// Joint law of (X, (U_i^Q, Q)) with P(Q = 0) = lambda and Q independent of X.
/// The extended alphabet for Ui has size 2·max(|Ui^A|, |Ui^B|); the pair
/// (u, q) sits at index q·max + u.
inline JointPmf timeshare(const JointPmf& a, const JointPmf& b, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw Error(ErrorKind::InvalidArgument, "lambda must lie in [0, 1]");
  if (a.sizes()[0] != b.sizes()[0]) throw Error(ErrorKind::AlphabetMismatch, "X alphabets differ");
  // Q must be independent of X, so both components need the same source law.
  const auto pa = detail::marginalize(a, detail::kMaskX).p;
  const auto pb = detail::marginalize(b, detail::kMaskX).p;
  for (std::size_t x = 0; x < pa.size(); ++x) {
    if (std::abs(pa[x] - pb[x]) > 1e-12) throw Error(ErrorKind::InvalidPmf, "X marginals differ");
  }
  JointPmf::Sizes base{};
  JointPmf::Sizes ext{};
  base[0] = ext[0] = a.sizes()[0];
  for (int v = 1; v < JointPmf::kVars; ++v) {
    base[v] = std::max(a.sizes()[v], b.sizes()[v]);
    ext[v] = 2 * base[v];
  }
  std::size_t total = 1;
  for (int n : ext) total *= static_cast<std::size_t>(n);
  std::vector<double> p(total, 0.0);

  const auto scatter = [&](const JointPmf& src, int q, double weight) {
    const auto& sp = src.probabilities();
    for (std::size_t flat = 0; flat < sp.size(); ++flat) {
      if (sp[flat] == 0.0) continue;
      const auto c = src.unflatten(flat);
      std::size_t idx = static_cast<std::size_t>(c[0]);
      for (int v = 1; v < JointPmf::kVars; ++v) {
        idx = idx * static_cast<std::size_t>(ext[v]) + static_cast<std::size_t>(q * base[v] + c[v]);
      }
      p[idx] += weight * sp[flat];
    }
  };
  scatter(a, 0, lambda);
  scatter(b, 1, 1.0 - lambda);
  // Renormalize away rounding in the weights.
  const double sum = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& v : p) v /= sum;
  return JointPmf(ext, std::move(p));
}

/// Decoders for a time-shared pmf: each looks at Q (carried in U1) and
/// applies the matching component decoder. Both inputs must share the
/// reconstruction alphabet and distortion matrix.
inline DecoderMaps timeshare_decoders(const JointPmf& a, const DecoderMaps& da, const JointPmf& b,
                                      const DecoderMaps& db) {
  check_decoders(a, da);
  check_decoders(b, db);
  if (da.reconstruction_size != db.reconstruction_size || da.distortion_matrix != db.distortion_matrix) {
    throw Error(ErrorKind::AlphabetMismatch, "decoders use different reconstruction alphabets");
  }
  std::array<int, JointPmf::kVars> base{};
  for (int v = 1; v < JointPmf::kVars; ++v) base[v] = std::max(a.sizes()[v], b.sizes()[v]);
  const int e1 = 2 * base[1], e2 = 2 * base[2], e3 = 2 * base[3], e4 = 2 * base[4];

  // Off-component codes never occur with positive probability; map them to 0.
  const auto pick = [&](int q, const std::array<int, 4>& u, int arity) -> std::optional<std::array<int, 4>> {
    std::array<int, 4> local{};
    const JointPmf& src = q == 0 ? a : b;
    for (int i = 0; i < arity; ++i) {
      const int code = u[static_cast<std::size_t>(i)];
      if (code / base[i + 1] != q) return std::nullopt;
      local[static_cast<std::size_t>(i)] = code % base[i + 1];
      if (local[static_cast<std::size_t>(i)] >= src.sizes()[i + 1]) return std::nullopt;
    }
    return local;
  };

  DecoderMaps out;
  out.reconstruction_size = da.reconstruction_size;
  out.distortion_matrix = da.distortion_matrix;
  for (int c1 = 0; c1 < e1; ++c1) {
    const int q = c1 / base[1];
    const DecoderMaps& d = q == 0 ? da : db;
    const JointPmf& src = q == 0 ? a : b;
    const auto& n = src.sizes();
    auto l1 = pick(q, {c1, 0, 0, 0}, 1);
    out.g1.push_back(l1 ? d.g1[static_cast<std::size_t>((*l1)[0])] : 0);
    for (int c2 = 0; c2 < e2; ++c2) {
      auto l = pick(q, {c1, c2, 0, 0}, 2);
      out.g2.push_back(l ? d.g2[static_cast<std::size_t>((*l)[0] * n[2] + (*l)[1])] : 0);
    }
    for (int c3 = 0; c3 < e3; ++c3) {
      auto l = (l1 && c3 / base[3] == q && c3 % base[3] < n[3]) ? std::optional<int>(c3 % base[3]) : std::nullopt;
      out.g3.push_back(l ? d.g3[static_cast<std::size_t>((*l1)[0] * n[3] + *l)] : 0);
    }
    for (int c2 = 0; c2 < e2; ++c2)
      for (int c3 = 0; c3 < e3; ++c3)
        for (int c4 = 0; c4 < e4; ++c4) {
          auto l = pick(q, {c1, c2, c3, c4}, 4);
          out.g4.push_back(
              l ? d.g4[static_cast<std::size_t>((((*l)[0] * n[2] + (*l)[1]) * n[3] + (*l)[2]) * n[4] + (*l)[3])] : 0);
        }
  }
  return out;
}

}  // namespace gaussrd

#endif  // GAUSSRD_DISCRETE_HPP
