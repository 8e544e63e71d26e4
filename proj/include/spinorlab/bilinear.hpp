#pragma once

// Bilinear covariants, computed two ways:
//
//  * compute(): sandwiches of the gamma matrices between a dual row and the
//    spinor (the generic route, valid for any dual);
//  * compute_fast(): closed component formulas for psi = diag(r1,r1,r2,r2) base
//    under the Dirac dual.
//
// Conventions (all components contravariant):
//   A = dual psi, B = i dual gamma5 psi, J^mu = dual gamma^mu psi,
//   K^mu = dual gamma5 gamma^mu psi,
//   S^{mu nu} = (i/2) dual [gamma^mu, gamma^nu] psi,
//   A1 = dual P1 psi, A2 = dual P2 psi   (so A = A1 + A2, B = i(A2 - A1)),
//   Levi-Civita eps^{0123} = +1 (eps_{0123} = -1).

#include <optional>
#include <utility>

#include "spinor.hpp"

namespace spinorlab {

using Bivector = std::array<std::array<cplx, 4>, 4>;

/// Index pairs of the six independent bivector components, in storage order.
inline constexpr std::array<std::pair<int, int>, 6> kBivectorPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

struct Bilinears {
  cplx A{};
  cplx B{};
  FourVector J{};
  FourVector K{};
  Bivector S{};
  cplx A1{};
  cplx A2{};
  DualKind dual = DualKind::Dirac;
  double norm2 = 0.0;  // |psi|^2 of the input spinor

  cplx J2() const { return minkowski_dot(J, J); }
  cplx K2() const { return minkowski_dot(K, K); }
  cplx JK() const { return minkowski_dot(J, K); }
};

/// Generic route with an explicit dual row.
inline Bilinears compute_with_dual(const Spinor& psi, const DualSpinor& dual, DualKind kind) {
  const auto& g = gammas();
  Bilinears b;
  b.dual = kind;
  b.norm2 = psi.norm2();
  b.A = dual(psi);
  b.B = kI * dual(g.gamma5, psi);
  for (int mu = 0; mu < 4; ++mu) {
    const auto m = static_cast<std::size_t>(mu);
    b.J[m] = dual(g[mu], psi);
    b.K[m] = dual(Mat4(g.gamma5 * g[mu]), psi);
  }
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const Mat4 comm = g[mu] * g[nu] - g[nu] * g[mu];
      b.S[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] = 0.5 * kI * dual(comm, psi);
    }
  }
  b.A1 = dual(projector(Block::One), psi);
  b.A2 = dual(projector(Block::Two), psi);
  return b;
}

/// Bilinears of psi under the Dirac dual, or under the MDO dual built with xi.
inline Bilinears compute(const Spinor& psi, DualKind kind = DualKind::Dirac,
                         const std::optional<Mat4>& xi = std::nullopt) {
  if (!psi.is_finite()) throw Error(ErrorKind::InvalidInput, "spinor has non-finite components");
  if (kind == DualKind::Dirac) {
    if (xi) throw Error(ErrorKind::InvalidInput, "Xi supplied for the Dirac dual");
    return compute_with_dual(psi, dirac_dual(psi), kind);
  }
  if (!xi) throw Error(ErrorKind::InvalidInput, "MDO dual requires Xi");
  return compute_with_dual(psi, mdo_dual(psi, *xi), kind);
}

/// Result of the component formulas. K^1..K^3 have no closed form there and
/// are left empty.
struct FastBilinears {
  cplx A{};
  cplx B{};
  FourVector J{};
  std::array<std::optional<cplx>, 4> K{};
  std::array<cplx, 6> S{};  // ordered as kBivectorPairs

  cplx s(int mu, int nu) const {
    for (std::size_t i = 0; i < kBivectorPairs.size(); ++i) {
      if (kBivectorPairs[i] == std::pair{mu, nu}) return S[i];
      if (kBivectorPairs[i] == std::pair{nu, mu}) return -S[i];
    }
    return 0.0;
  }
};

/// Bilinears of diag(r1, r1, r2, r2) base from the component formulas.
inline FastBilinears compute_fast(const Spinor& base, cplx r1, cplx r2) {
  using std::conj;
  using std::norm;
  const cplx p11 = base[0], p12 = base[1], p21 = base[2], p22 = base[3];
  const double n1 = norm(p11) + norm(p12);
  const double n2 = norm(p21) + norm(p22);
  const double q1 = norm(r1), q2 = norm(r2);

  FastBilinears f;
  f.J[0] = n1 * q1 + n2 * q2;
  f.J[1] = -q1 * (conj(p12) * p11 + conj(p11) * p12) + q2 * (conj(p22) * p21 + conj(p21) * p22);
  f.J[2] = kI * (-q1 * (conj(p12) * p11 - conj(p11) * p12) + q2 * (conj(p22) * p21 - conj(p21) * p22));
  f.J[3] = -q1 * (norm(p11) - norm(p12)) + q2 * (norm(p21) - norm(p22));
  f.K[0] = n1 * q1 - n2 * q2;

  const cplx x = conj(r2) * r1;  // r1 r2*
  const cplx y = conj(r1) * r2;  // r1* r2
  f.S[0] = -kI * (x * (conj(p22) * p11 + conj(p21) * p12) - y * (conj(p12) * p21 + conj(p11) * p22));
  f.S[1] = x * (conj(p22) * p11 - conj(p21) * p12) - y * (conj(p12) * p21 - conj(p11) * p22);
  // Mind the sign inside the second bracket; flipping it turns S^{03} into
  // -i S^{12}, which is not real under the Dirac dual.
  f.S[2] = -kI * (x * (conj(p21) * p11 - conj(p22) * p12) - y * (conj(p11) * p21 - conj(p12) * p22));
  f.S[3] = x * (conj(p21) * p11 - conj(p22) * p12) + y * (conj(p11) * p21 - conj(p12) * p22);
  f.S[4] = -kI * (x * (conj(p22) * p11 - conj(p21) * p12) + y * (conj(p12) * p21 - conj(p11) * p22));
  f.S[5] = x * (conj(p22) * p11 + conj(p21) * p12) + y * (conj(p12) * p21 + conj(p11) * p22);

  const cplx a1 = conj(p21) * p11 + conj(p22) * p12;
  const cplx a2 = conj(p11) * p21 + conj(p12) * p22;
  f.A = x * a1 + y * a2;
  f.B = kI * (-x * a1 + y * a2);
  return f;
}

/// Largest absolute difference between the fast fields and the generic ones.
inline double fast_mismatch(const FastBilinears& f, const Bilinears& b) {
  double m = std::max(std::abs(f.A - b.A), std::abs(f.B - b.B));
  for (std::size_t mu = 0; mu < 4; ++mu) {
    m = std::max(m, std::abs(f.J[mu] - b.J[mu]));
    if (f.K[mu]) m = std::max(m, std::abs(*f.K[mu] - b.K[mu]));
  }
  for (std::size_t i = 0; i < kBivectorPairs.size(); ++i) {
    const auto [mu, nu] = kBivectorPairs[i];
    m = std::max(m, std::abs(f.S[i] - b.S[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)]));
  }
  return m;
}

/// eps_{mu nu alpha beta} with lower indices; eps_{0123} = -1.
inline double levi_civita_lower(int a, int b, int c, int d) {
  const std::array<int, 4> idx{a, b, c, d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (idx[static_cast<std::size_t>(i)] == idx[static_cast<std::size_t>(j)]) return 0.0;
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (idx[static_cast<std::size_t>(i)] > idx[static_cast<std::size_t>(j)]) ++inversions;
  return inversions % 2 == 0 ? -1.0 : 1.0;
}

struct FpkResiduals {
  double norm_identity = 0;      // |J^2 - A^2 - B^2|
  double bivector_identity = 0;  // max |J_mu K_nu - K_mu J_nu + B S_mu nu + A/2 eps S|
  double orthogonality = 0;      // |J.K|
  double opposite_norm = 0;      // |J^2 + K^2|

  std::array<double, 4> values() const {
    return {norm_identity, bivector_identity, orthogonality, opposite_norm};
  }
  double max() const {
    const auto v = values();
    return *std::max_element(v.begin(), v.end());
  }
};

/// Absolute residuals; divide by quartic_scale(b.norm2) for relative ones.
inline FpkResiduals fpk_residuals(const Bilinears& b) {
  FpkResiduals r;
  r.norm_identity = std::abs(b.J2() - b.A * b.A - b.B * b.B);
  r.orthogonality = std::abs(b.JK());
  r.opposite_norm = std::abs(b.J2() + b.K2());

  const FourVector Jl = lower_index(b.J);
  const FourVector Kl = lower_index(b.K);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const auto m = static_cast<std::size_t>(mu), n = static_cast<std::size_t>(nu);
      cplx dual_term = 0.0;
      for (int al = 0; al < 4; ++al)
        for (int be = 0; be < 4; ++be)
          dual_term += levi_civita_lower(mu, nu, al, be) *
                       b.S[static_cast<std::size_t>(al)][static_cast<std::size_t>(be)];
      const cplx s_lower = metric_diag(mu) * metric_diag(nu) * b.S[m][n];
      const cplx v = Jl[m] * Kl[n] - Kl[m] * Jl[n] + b.B * s_lower + 0.5 * b.A * dual_term;
      r.bivector_identity = std::max(r.bivector_identity, std::abs(v));
    }
  }
  return r;
}

}  // namespace spinorlab
