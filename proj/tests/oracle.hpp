#pragma once

// Reference arithmetic for the tests: plain nested arrays, explicit loops,
// and the gamma matrices written out entry by entry. Nothing here touches the
// library's linear algebra.

#include <array>
#include <cmath>
#include <complex>

namespace oracle {

using C = std::complex<double>;
using M4 = std::array<std::array<C, 4>, 4>;
using V4 = std::array<C, 4>;

inline constexpr C I{0.0, 1.0};

inline M4 zero() { return M4{}; }

inline M4 identity() {
  M4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

inline M4 mul(const M4& a, const M4& b) {
  M4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline M4 add(const M4& a, const M4& b, C s = 1.0) {
  M4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = a[i][j] + s * b[i][j];
  return out;
}

inline M4 scale(const M4& a, C s) { return add(zero(), a, s); }

inline V4 act(const M4& a, const V4& v) {
  V4 out{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) out[i] += a[i][k] * v[k];
  return out;
}

// Chiral basis, written out: gamma^0 swaps the blocks, gamma^k carries
// sigma^k above and -sigma^k below the diagonal.
inline M4 gamma(int mu) {
  M4 g{};
  switch (mu) {
    case 0:
      g[0][2] = g[1][3] = g[2][0] = g[3][1] = 1.0;
      break;
    case 1:
      g[0][3] = 1.0; g[1][2] = 1.0;
      g[2][1] = -1.0; g[3][0] = -1.0;
      break;
    case 2:
      g[0][3] = -I; g[1][2] = I;
      g[2][1] = I; g[3][0] = -I;
      break;
    case 3:
      g[0][2] = 1.0; g[1][3] = -1.0;
      g[2][0] = -1.0; g[3][1] = 1.0;
      break;
  }
  return g;
}

inline M4 gamma5() {
  M4 g{};
  g[0][0] = g[1][1] = -1.0;
  g[2][2] = g[3][3] = 1.0;
  return g;
}

inline double eta(int mu) { return mu == 0 ? 1.0 : -1.0; }

/// u^dagger gamma^0 G v
inline C sandwich(const V4& u, const M4& G, const V4& v) {
  const V4 gv = act(mul(gamma(0), G), v);
  C s = 0.0;
  for (int i = 0; i < 4; ++i) s += std::conj(u[i]) * gv[i];
  return s;
}

struct Bil {
  C A, B;
  V4 J, K;
  std::array<std::array<C, 4>, 4> S;
};

inline Bil bilinears(const V4& psi) {
  Bil b{};
  b.A = sandwich(psi, identity(), psi);
  b.B = I * sandwich(psi, gamma5(), psi);
  for (int mu = 0; mu < 4; ++mu) {
    b.J[mu] = sandwich(psi, gamma(mu), psi);
    b.K[mu] = sandwich(psi, mul(gamma5(), gamma(mu)), psi);
    for (int nu = 0; nu < 4; ++nu) {
      const M4 comm = add(mul(gamma(mu), gamma(nu)), mul(gamma(nu), gamma(mu)), -1.0);
      b.S[mu][nu] = 0.5 * I * sandwich(psi, comm, psi);
    }
  }
  return b;
}

inline double max_abs_diff(const M4& a, const M4& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

/// Lounesto class straight from the table, zero-tests |x| <= tol * |psi|^2.
/// Returns 0 when no row applies.
inline int lounesto(const Bil& b, double norm2, double tol = 1e-9) {
  const auto zero = [&](C x) { return std::abs(x) <= tol * norm2; };
  bool k0 = true, s0 = true;
  for (int mu = 0; mu < 4; ++mu) {
    k0 = k0 && zero(b.K[mu]);
    for (int nu = 0; nu < 4; ++nu) s0 = s0 && zero(b.S[mu][nu]);
  }
  const bool a0 = zero(b.A), b0 = zero(b.B);
  if (!a0 && !b0) return 1;
  if (!a0 && b0) return 2;
  if (a0 && !b0) return 3;
  if (!k0 && !s0) return 4;
  if (k0 && !s0) return 5;
  if (!k0 && s0) return 6;
  return 0;
}

/// Ten spinors used wherever a fixed, non-random sample is wanted.
inline const std::array<V4, 10>& fixed() {
  static const std::array<V4, 10> s{{
      {C(0.8, 0.1), C(-0.3, 0.5), C(0.2, -0.7), C(0.4, 0.0)},
      {C(0.1, 0.9), C(0.6, 0.0), C(-0.5, 0.2), C(0.3, -0.4)},
      {C(1.0, 0.0), C(0.0, 0.0), C(0.0, 0.3), C(0.7, 0.0)},
      {C(-0.2, -0.6), C(0.9, 0.4), C(0.1, 0.1), C(-0.8, 0.5)},
      {C(0.5, 0.5), C(0.5, -0.5), C(0.3, 0.2), C(-0.1, 0.6)},
      {C(0.0, 1.0), C(0.4, 0.4), C(0.9, -0.1), C(0.2, 0.0)},
      {C(0.7, -0.7), C(0.1, 0.2), C(-0.4, 0.9), C(0.6, 0.3)},
      {C(0.3, 0.0), C(-0.9, 0.1), C(0.5, 0.5), C(0.0, -0.8)},
      {C(-0.6, 0.2), C(0.2, 0.8), C(0.7, 0.0), C(0.1, -0.2)},
      {C(0.25, -0.45), C(0.65, 0.15), C(-0.35, -0.55), C(0.95, 0.05)},
  }};
  return s;
}

}  // namespace oracle
