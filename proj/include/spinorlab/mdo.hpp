#pragma once

// Mass-dimension-one (Elko) spinors in momentum space.
//
//   lambda = (+-i Theta phi_L*, phi_L),  Theta = [[0, -1], [1, 0]],
//   phi_L(p) = sqrt((E + m)/2m) (1 - p sigma.n / (E + m)) sqrt(m) phi_h,
//
// where phi_h is the unit helicity spinor along n. The Xi matrix below is
// contracted with the momentum whose covariant components are p_mu = (E, p n);
// with that pairing Xi^2 = 1, [Xi, p_mu gamma^mu] = 0 and
//
//   (p_mu gamma^mu Xi - eta m) lambda = 0,  eta = +1 for +i, -1 for -i.
//
// Charge conjugation is C psi = gamma^2 psi*, so the +i spinor is self-conjugate
// (S) and the -i one anti-self-conjugate (A).

#include "bilinear.hpp"
#include "rim.hpp"

namespace spinorlab {

struct Momentum {
  double m = 1.0;
  double p = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  double E() const { return std::sqrt(p * p + m * m); }

  std::array<double, 3> direction() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
  }

  /// p_mu = (E, p n)
  FourVector covariant() const {
    const auto n = direction();
    return {E(), p * n[0], p * n[1], p * n[2]};
  }

  /// p^mu = (E, -p n)
  FourVector contravariant() const { return lower_index(covariant()); }

  void check() const {
    if (!std::isfinite(m) || !std::isfinite(p) || !std::isfinite(theta) || !std::isfinite(phi))
      throw Error(ErrorKind::InvalidInput, "non-finite momentum");
    if (!(m > 0.0)) throw Error(ErrorKind::InvalidInput, "mass must be positive");
    if (!(p >= 0.0)) throw Error(ErrorKind::InvalidInput, "|p| must be non-negative");
  }
};

enum class Helicity { Plus, Minus };
enum class Conjugation { S, A };

inline constexpr double helicity_value(Helicity h) { return h == Helicity::Plus ? 1.0 : -1.0; }
inline constexpr Helicity flip(Helicity h) { return h == Helicity::Plus ? Helicity::Minus : Helicity::Plus; }
inline constexpr std::string_view to_string(Helicity h) { return h == Helicity::Plus ? "+" : "-"; }
inline constexpr std::string_view to_string(Conjugation c) { return c == Conjugation::S ? "S" : "A"; }

/// Sign of the i in the top block.
inline constexpr Sign top_sign(Conjugation c) { return c == Conjugation::S ? Sign::Plus : Sign::Minus; }

inline Mat2 wigner_theta() {
  Mat2 t;
  t << 0.0, -1.0, 1.0, 0.0;
  return t;
}

/// sigma . n for the direction (theta, phi).
inline Mat2 sigma_dot(double theta, double phi) {
  const auto s = pauli();
  return std::sin(theta) * std::cos(phi) * s[0] + std::sin(theta) * std::sin(phi) * s[1] + std::cos(theta) * s[2];
}

inline Vec2c helicity_spinor(double theta, double phi, Helicity h) {
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  const cplx em = std::polar(1.0, -0.5 * phi), ep = std::polar(1.0, 0.5 * phi);
  if (h == Helicity::Plus) return Vec2c(c * em, s * ep);
  return Vec2c(-s * em, c * ep);
}

/// Boosted left-handed block for helicity h.
inline Vec2c boosted_block(const Momentum& mom, Helicity h) {
  const double E = mom.E();
  const Mat2 boost = Mat2::Identity() - (mom.p / (E + mom.m)) * sigma_dot(mom.theta, mom.phi);
  return std::sqrt((E + mom.m) / (2.0 * mom.m)) * (boost * (std::sqrt(mom.m) * helicity_spinor(mom.theta, mom.phi, h)));
}

struct ElkoSpinor {
  Spinor spinor;
  Conjugation conj = Conjugation::S;
  Helicity helicity = Helicity::Plus;
  Sign sign = Sign::Plus;

  Vec2c top() const { return spinor.top(); }
  Vec2c bottom() const { return spinor.bottom(); }
};

inline ElkoSpinor elko(const Momentum& mom, Helicity h, Conjugation c) {
  mom.check();
  const Vec2c phi_l = boosted_block(mom, h);
  const Sign sg = top_sign(c);
  const Vec2c top = (sign_value(sg) * kI) * (wigner_theta() * phi_l.conjugate());
  return {Spinor::from_blocks(top, phi_l), c, h, sg};
}

/// gamma^2 psi*
inline Spinor charge_conjugate(const Spinor& psi) { return gammas()[2] * Spinor(Vec4c(psi.vec().conjugate())); }

inline Mat4 xi(const Momentum& mom) {
  mom.check();
  const double m = mom.m, p = mom.p, E = mom.E();
  const double s = std::sin(mom.theta), c = std::cos(mom.theta);
  const cplx e = std::polar(1.0, mom.phi);
  const cplx einv = std::conj(e);
  Mat4 x = Mat4::Zero();
  x(0, 0) = kI * p * s / m;
  x(0, 1) = -kI * (E + p * c) * einv / m;
  x(1, 0) = kI * (E - p * c) * e / m;
  x(1, 1) = -kI * p * s / m;
  x(2, 2) = -kI * p * s / m;
  x(2, 3) = -kI * (E - p * c) * einv / m;
  x(3, 2) = kI * (E + p * c) * e / m;
  x(3, 3) = kI * p * s / m;
  return x;
}

/// gamma^mu p_mu
inline Mat4 momentum_slash(const Momentum& mom) { return slash(mom.contravariant()); }

/// eta in (p_mu gamma^mu Xi - eta m) lambda = 0 for each construction.
inline constexpr double pinned_eta(Conjugation c) { return c == Conjugation::S ? 1.0 : -1.0; }

struct DiracLike {
  double residual = 0.0;  // smaller of the two eta choices
  double eta = 1.0;       // eta achieving it
  double other = 0.0;     // residual for -eta
  bool matches_fixture = false;
};

inline DiracLike diraclike_residual(const ElkoSpinor& lam, const Momentum& mom) {
  const Mat4 op = momentum_slash(mom) * xi(mom);
  const double plus = (op * lam.spinor.vec() - mom.m * lam.spinor.vec()).norm();
  const double minus = (op * lam.spinor.vec() + mom.m * lam.spinor.vec()).norm();
  DiracLike d;
  d.eta = plus <= minus ? 1.0 : -1.0;
  d.residual = std::min(plus, minus);
  d.other = std::max(plus, minus);
  d.matches_fixture = d.eta == pinned_eta(lam.conj);
  return d;
}

inline Bilinears mdo_bilinears(const Spinor& lam, const Momentum& mom) {
  return compute(lam, DualKind::MDO, xi(mom));
}

/// Residual norms of
///   J_mu gamma^mu lambda_L = (A - iB) lambda_R,   J_mu gamma^mu lambda_R = (A + iB) lambda_L,
///   K_mu gamma^mu lambda_L = -(A - iB) lambda_R,  K_mu gamma^mu lambda_R = (A + iB) lambda_L,
/// with bilinears under the MDO dual and lambda_L = block 1. swap_blocks
/// exchanges the roles of the blocks (a negative control).
inline std::array<double, 4> chirality_residuals(const ElkoSpinor& lam, const Momentum& mom, bool swap_blocks = false) {
  const Bilinears b = mdo_bilinears(lam.spinor, mom);
  auto [left, right] = chiral_parts(lam.spinor);
  if (swap_blocks) std::swap(left, right);
  const Mat4 js = slash(b.J), ks = slash(b.K);
  const cplx minus = b.A - kI * b.B, plus = b.A + kI * b.B;
  return {(js * left - minus * right).norm(), (js * right - plus * left).norm(),
          (ks * left + minus * right).norm(), (ks * right - plus * left).norm()};
}

/// sigma.n eigenvalue residual |sigma.n v - h v| and Rayleigh quotient of a block.
struct BlockHelicity {
  double value = 0.0;
  double residual = 0.0;
};

inline BlockHelicity block_helicity(const Vec2c& v, const Momentum& mom) {
  const Mat2 sd = sigma_dot(mom.theta, mom.phi);
  const Vec2c sv = sd * v;
  BlockHelicity out;
  out.value = (v.dot(sv) / v.squaredNorm()).real();
  out.residual = (sv - out.value * v).norm() / v.norm();
  return out;
}

struct FGFunctions {
  cplx F{};             // -2isR +- p sin(theta) (A + iB) e^{-2(a+abar)S} / (2(a+abar))
  cplx G{};             // +2isR +- p sin(theta) (A - iB) e^{-2(a+abar)S} / (2(a+abar))
  cplx exp_F_reduced{}; // vartheta^-1 exp[+- p sin(theta) / (2(a+abar)(A - iB))]
  cplx exp_G_reduced{}; // vartheta exp[+- p sin(theta) / (2(a+abar)(A + iB))]
  double mismatch_F = 0.0;  // |exp(F - log reduced) - 1|
  double mismatch_G = 0.0;
};

/// Uses J^2 = e^{2(a+abar)S}, i.e. (A + iB) e^{-2(a+abar)S} = 1 / (A - iB).
inline FGFunctions fg_functions(double S, cplx R, const RimParams& par, const Bilinears& bil, const Momentum& mom,
                                Sign sign) {
  const double two_re = 2.0 * par.a.real();
  const double sv = sign_value(sign);
  const double ps = mom.p * std::sin(mom.theta);
  const cplx minus = bil.A - kI * bil.B, plus = bil.A + kI * bil.B;
  const cplx phase = 2.0 * kI * par.s * R;
  const double damp = std::exp(-2.0 * two_re * S);

  FGFunctions f;
  f.F = -phase + sv * ps * plus * damp / (2.0 * two_re);
  f.G = phase + sv * ps * minus * damp / (2.0 * two_re);

  const cplx logF = -phase + sv * ps / (2.0 * two_re * minus);
  const cplx logG = phase + sv * ps / (2.0 * two_re * plus);
  const cplx vartheta = std::exp(phase);
  f.exp_F_reduced = std::exp(sv * ps / (2.0 * two_re * minus)) / vartheta;
  f.exp_G_reduced = vartheta * std::exp(sv * ps / (2.0 * two_re * plus));
  f.mismatch_F = std::abs(std::exp(f.F - logF) - 1.0);
  f.mismatch_G = std::abs(std::exp(f.G - logG) - 1.0);
  return f;
}

}  // namespace spinorlab
