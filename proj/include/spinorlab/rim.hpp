#pragma once

// Restricted Inomata-McKinley (RIM) machinery: coupling parameters (a, b)
// over the s-space, the potentials S and R, the derivative condition
//
//   d_mu psi = (a J_mu + b kappa_mu gamma5) psi,
//
// evaluated pointwise, and the algebraic identities it implies. kappa is the
// axial current psibar gamma_mu gamma5 psi = -K_mu; with that orientation the
// condition solves the Heisenberg equation for 2s = i(a - b).

#include <optional>
#include <vector>

#include "bilinear.hpp"
#include "lounesto.hpp"

namespace spinorlab {

enum class SDomain { Omega1 = 1, Omega2, Omega3, Omega4, Omega5, Omega6, Outside };

inline constexpr std::string_view to_string(SDomain d) {
  switch (d) {
    case SDomain::Omega1: return "Omega1";
    case SDomain::Omega2: return "Omega2";
    case SDomain::Omega3: return "Omega3";
    case SDomain::Omega4: return "Omega4";
    case SDomain::Omega5: return "Omega5";
    case SDomain::Omega6: return "Omega6";
    case SDomain::Outside: return "Outside";
  }
  return "Outside";
}

/// Open quarter interval (0..3 for W1..W4) containing angle, or -1 on a
/// boundary or outside (0, 2pi).
inline int quarter_of(double angle) {
  if (!(angle > 0.0) || !(angle < 2.0 * kPi)) return -1;
  const double q = angle / (0.5 * kPi);
  const double fl = std::floor(q);
  if (q == fl) return -1;
  return static_cast<int>(fl);
}

/// Omega_1 = W1 x Z1, Omega_2 = W4 x Z1, Omega_3 = W4 x Z4,
/// Omega_4 = W2 x Z2, Omega_5 = W3 x Z2, Omega_6 = W3 x Z3.
inline SDomain domain_of(double phi1, double phi2) {
  const int w = quarter_of(phi1);
  const int z = quarter_of(phi2);
  if (w < 0 || z < 0) return SDomain::Outside;
  static constexpr std::array<std::array<int, 2>, 6> table{{{0, 0}, {3, 0}, {3, 3}, {1, 1}, {2, 1}, {2, 2}}};
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i][0] == w && table[i][1] == z) return static_cast<SDomain>(i + 1);
  return SDomain::Outside;
}

/// Polar angle in [0, 2pi).
inline double polar_angle(cplx z) {
  double a = std::arg(z);
  if (a < 0.0) a += 2.0 * kPi;
  return a;
}

struct SSpacePoint {
  double phi1 = 0.0;
  double phi2 = 0.0;
  double a0 = 1.0;
  double b0 = 1.0;

  static SSpacePoint from(cplx a, cplx b) { return {polar_angle(a), polar_angle(b), std::abs(a), std::abs(b)}; }
  cplx a() const { return std::polar(a0, phi1); }
  cplx b() const { return std::polar(b0, phi2); }
  SDomain domain() const {
    if (!(a0 > 0.0) || !(b0 > 0.0)) return SDomain::Outside;
    return domain_of(phi1, phi2);
  }
};

struct RimParams {
  cplx a{};
  cplx b{};
  double s = 0.0;    // i(a - b)/2
  double rho = 0.0;  // (Im a - Im b) / Im b
  SDomain domain = SDomain::Outside;
};

/// Checks Re a = Re b and Im b != 0, then fills the derived fields.
inline RimParams validate(cplx a, cplx b, double tol = 1e-12) {
  if (!is_finite(a) || !is_finite(b)) throw Error(ErrorKind::InvalidInput, "non-finite coupling");
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  if (std::abs(a.real() - b.real()) > tol * scale)
    throw Error(ErrorKind::IntegrabilityViolation, "Re(a) must equal Re(b)");
  if (std::abs(b.imag()) <= tol * scale) throw Error(ErrorKind::DegenerateB, "Im(b) = 0 makes R diverge");
  RimParams p;
  p.a = a;
  p.b = b;
  p.s = (kI * (a - b) / 2.0).real();
  p.rho = (a.imag() - b.imag()) / b.imag();
  p.domain = SSpacePoint::from(a, b).domain();
  return p;
}

struct Potentials {
  double S = 0.0;  // ln J / (a + abar)
  cplx R{};        // Log((A - iB)/J) / (b - bbar); real when A, B are
  cplx vartheta{}; // exp(2 i s R)
};

/// Principal-branch logarithms throughout.
inline Potentials potentials(const Bilinears& bil, const RimParams& p, double tol = 1e-12) {
  const double j2 = bil.J2().real();
  if (!(j2 > tol * quartic_scale(bil.norm2))) throw Error(ErrorKind::NullCurrent, "J^2 must be positive");
  if (p.a.real() == 0.0) throw Error(ErrorKind::DegenerateRealPart, "Re(a) = 0");
  const double J = std::sqrt(j2);
  Potentials out;
  out.S = std::log(J) / (2.0 * p.a.real());
  out.R = std::log((bil.A - kI * bil.B) / J) / (p.b - std::conj(p.b));
  out.vartheta = std::exp(2.0 * kI * p.s * out.R);
  return out;
}

/// kappa_mu = psibar gamma_mu gamma5 psi with the index lowered.
inline FourVector axial_current_lower(const Bilinears& bil) {
  const FourVector k = lower_index(bil.K);
  return {-k[0], -k[1], -k[2], -k[3]};
}

/// D_mu psi for mu = 0..3 (lower index).
inline std::array<Spinor, 4> rim_derivative(const Spinor& psi, const RimParams& p) {
  const Bilinears bil = compute(psi);
  const FourVector J = lower_index(bil.J);
  const FourVector kappa = axial_current_lower(bil);
  const Mat4& g5 = gammas().gamma5;
  std::array<Spinor, 4> d;
  for (std::size_t mu = 0; mu < 4; ++mu)
    d[mu] = Mat4(p.a * J[mu] * Mat4::Identity() + p.b * kappa[mu] * g5) * psi;
  return d;
}

/// || i gamma^mu D_mu psi - 2s (A + iB gamma5) psi ||, using p.s as given.
inline double heisenberg_residual(const Spinor& psi, const RimParams& p) {
  const auto& g = gammas();
  const auto d = rim_derivative(psi, p);
  const Bilinears bil = compute(psi);
  Vec4c lhs = Vec4c::Zero();
  for (int mu = 0; mu < 4; ++mu) lhs += kI * (g[mu] * d[static_cast<std::size_t>(mu)].vec());
  lhs -= 2.0 * p.s * (bil.A * Mat4::Identity() + kI * bil.B * g.gamma5) * psi.vec();
  return lhs.norm();
}

/// max over mu of |d_mu A - RHS_A| and |d_mu B - RHS_B| where
///   RHS_A = (a + abar) A J_mu + i (b - bbar) B K_mu,
///   RHS_B = (a + abar) B J_mu - i (b - bbar) A K_mu,
/// and d_mu X is the derivative induced on X by D_mu psi (product rule).
inline std::pair<double, double> del_ab_residuals(const Spinor& psi, const RimParams& p) {
  const auto& g = gammas();
  const auto d = rim_derivative(psi, p);
  const Bilinears bil = compute(psi);
  const DualSpinor bar = dirac_dual(psi);
  const FourVector J = lower_index(bil.J);
  const FourVector K = lower_index(bil.K);
  const cplx re2 = p.a + std::conj(p.a);
  const cplx im2 = p.b - std::conj(p.b);
  double ra = 0.0, rb = 0.0;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    const DualSpinor dbar = dirac_dual(d[mu]);
    const cplx dA = dbar(psi) + bar(d[mu]);
    const cplx dB = kI * (dbar(g.gamma5, psi) + bar(g.gamma5, d[mu]));
    ra = std::max(ra, std::abs(dA - (re2 * bil.A * J[mu] + kI * im2 * bil.B * K[mu])));
    rb = std::max(rb, std::abs(dB - (re2 * bil.B * J[mu] - kI * im2 * bil.A * K[mu])));
  }
  return {ra, rb};
}

enum class BaseViolation { ZeroSpinor, ZeroA, ZeroB, ZeroA1, ZeroA2, A1EqualsA2, A1EqualsMinusA2 };

inline constexpr std::string_view to_string(BaseViolation v) {
  switch (v) {
    case BaseViolation::ZeroSpinor: return "zero_spinor";
    case BaseViolation::ZeroA: return "A=0";
    case BaseViolation::ZeroB: return "B=0";
    case BaseViolation::ZeroA1: return "A1=0";
    case BaseViolation::ZeroA2: return "A2=0";
    case BaseViolation::A1EqualsA2: return "A1=A2";
    case BaseViolation::A1EqualsMinusA2: return "A1=-A2";
  }
  return "unknown";
}

struct BaseValidation {
  std::vector<BaseViolation> reasons;
  bool ok() const { return reasons.empty(); }
  bool has(BaseViolation v) const { return std::find(reasons.begin(), reasons.end(), v) != reasons.end(); }
};

/// A RIM base must be type 1: A, B, A1, A2 non-zero and A1 != +-A2.
/// Zero-tests are |x| <= tol * bil.norm2.
inline BaseValidation validate_base_bilinears(const Bilinears& bil, double tol = kDefaultTol) {
  BaseValidation out;
  if (!(bil.norm2 > tol * tol)) {
    out.reasons.push_back(BaseViolation::ZeroSpinor);
    return out;
  }
  const double thr = tol * bil.norm2;
  if (std::abs(bil.A) <= thr) out.reasons.push_back(BaseViolation::ZeroA);
  if (std::abs(bil.B) <= thr) out.reasons.push_back(BaseViolation::ZeroB);
  if (std::abs(bil.A1) <= thr) out.reasons.push_back(BaseViolation::ZeroA1);
  if (std::abs(bil.A2) <= thr) out.reasons.push_back(BaseViolation::ZeroA2);
  if (std::abs(bil.A1 - bil.A2) <= thr) out.reasons.push_back(BaseViolation::A1EqualsA2);
  if (std::abs(bil.A1 + bil.A2) <= thr) out.reasons.push_back(BaseViolation::A1EqualsMinusA2);
  return out;
}

inline BaseValidation validate_rim_base(const Spinor& psi, double tol = kDefaultTol) {
  return validate_base_bilinears(compute(psi), tol);
}

struct RestrictionOperator {
  Mat4 G;               // (1/2J^2) J^mu K^alpha [gamma_alpha, gamma_mu] gamma5
  Mat4 G_unsimplified;  // (1/J^2) J^mu K^alpha gamma_alpha gamma_mu gamma5
  double mismatch = 0;  // max entry difference between the two
};

inline RestrictionOperator restriction_operator(const Bilinears& bil, double tol = 1e-12) {
  const cplx j2 = bil.J2();
  if (!(std::abs(j2) > tol * quartic_scale(bil.norm2)))
    throw Error(ErrorKind::NullCurrent, "restriction operator needs J^2 != 0");
  const auto& g = gammas();
  Mat4 comm = Mat4::Zero(), prod = Mat4::Zero();
  for (int mu = 0; mu < 4; ++mu) {
    for (int al = 0; al < 4; ++al) {
      const cplx c = bil.J[static_cast<std::size_t>(mu)] * bil.K[static_cast<std::size_t>(al)];
      const Mat4 ga = g.lower(al), gm = g.lower(mu);
      comm += c * (ga * gm - gm * ga);
      prod += c * (ga * gm);
    }
  }
  RestrictionOperator out;
  out.G = comm * g.gamma5 / (2.0 * j2);
  out.G_unsimplified = prod * g.gamma5 / j2;
  out.mismatch = max_abs(Mat4(out.G - out.G_unsimplified));
  return out;
}

}  // namespace spinorlab
