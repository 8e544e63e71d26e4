#pragma once

// Gamma matrices in the chiral (Weyl) basis:
//
//   gamma^0 = [[0, 1], [1, 0]],  gamma^k = [[0, sigma^k], [-sigma^k, 0]],
//   gamma5  = i gamma^0 gamma^1 gamma^2 gamma^3 = diag(-1, -1, +1, +1),
//   eta     = diag(+1, -1, -1, -1).
//
// Block 1 is the top pair of components, block 2 the bottom pair. Block 1 is
// the part multiplied by r1 in a spinor-plane decomposition; note that with
// this gamma5 sign (1 + gamma5)/2 projects onto block 2.

#include <array>

#include "core.hpp"

namespace spinorlab {

struct GammaSet {
  std::array<Mat4, 4> gamma;  // contravariant gamma^mu
  Mat4 gamma5;
  Eigen::Matrix4d metric;

  const Mat4& operator[](int mu) const { return gamma[static_cast<std::size_t>(mu)]; }

  /// gamma_mu = eta_{mu mu} gamma^mu
  Mat4 lower(int mu) const { return metric(mu, mu) * gamma[static_cast<std::size_t>(mu)]; }
};

inline std::array<Mat2, 3> pauli() {
  Mat2 s1, s2, s3;
  s1 << 0, 1, 1, 0;
  s2 << 0, -kI, kI, 0;
  s3 << 1, 0, 0, -1;
  return {s1, s2, s3};
}

inline GammaSet build() {
  GammaSet g;
  const Mat2 one = Mat2::Identity();
  const Mat2 zero = Mat2::Zero();
  g.gamma[0] << zero, one, one, zero;
  const auto sigma = pauli();
  for (int k = 0; k < 3; ++k) {
    g.gamma[static_cast<std::size_t>(k + 1)] << zero, sigma[static_cast<std::size_t>(k)],
        -sigma[static_cast<std::size_t>(k)], zero;
  }
  g.gamma5 = kI * g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3];
  g.metric = Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
  return g;
}

/// Shared immutable instance.
inline const GammaSet& gammas() {
  static const GammaSet g = build();
  return g;
}

inline constexpr double metric_diag(int mu) { return mu == 0 ? 1.0 : -1.0; }

enum class Block { One = 1, Two = 2 };

/// projector(One) = diag(1,1,0,0), projector(Two) = diag(0,0,1,1).
inline Mat4 projector(Block block) {
  Mat4 p = Mat4::Zero();
  const int offset = block == Block::One ? 0 : 2;
  p(offset, offset) = 1.0;
  p(offset + 1, offset + 1) = 1.0;
  return p;
}

inline FourVector lower_index(const FourVector& v) {
  return {v[0], -v[1], -v[2], -v[3]};
}

/// u^mu eta_{mu nu} v^nu, bilinear (no conjugation).
inline cplx minkowski_dot(const FourVector& u, const FourVector& v) {
  return u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3];
}

/// Takes contravariant components v^mu and returns v^mu gamma_mu
/// = v^0 gamma^0 - v^1 gamma^1 - v^2 gamma^2 - v^3 gamma^3.
inline Mat4 slash(const FourVector& v) {
  const auto& g = gammas();
  Mat4 out = Mat4::Zero();
  for (int mu = 0; mu < 4; ++mu) out += metric_diag(mu) * v[static_cast<std::size_t>(mu)] * g[mu];
  return out;
}

}  // namespace spinorlab
