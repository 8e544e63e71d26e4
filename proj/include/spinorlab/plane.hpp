#pragma once

// Spinor-plane: coordinates (r1, r2) of r1 * block1(base) + r2 * block2(base),
// block-scalar operators, and the Dirac <-> MDO correspondence built from a
// RIM base.

#include <optional>

#include "rim.hpp"

namespace spinorlab {

enum class BasisTag { B, D, M, Custom };

inline constexpr std::string_view to_string(BasisTag t) {
  switch (t) {
    case BasisTag::B: return "B";
    case BasisTag::D: return "D";
    case BasisTag::M: return "M";
    case BasisTag::Custom: return "Custom";
  }
  return "Custom";
}

struct PlaneCoords {
  cplx r1{};
  cplx r2{};
  BasisTag basis = BasisTag::B;
  int custom_id = 0;

  bool same_basis(const PlaneCoords& o) const {
    return basis == o.basis && (basis != BasisTag::Custom || custom_id == o.custom_id);
  }
};

/// Block-scalar operator diag(c1, c1, c2, c2); c1 acts on block 1.
class MOperator {
 public:
  MOperator() = default;
  MOperator(cplx c1, cplx c2) : c1_(c1), c2_(c2) {}

  cplx c1() const { return c1_; }
  cplx c2() const { return c2_; }

  bool invertible() const { return c1_ != 0.0 && c2_ != 0.0; }

  Spinor apply(const Spinor& psi) const { return Spinor(c1_ * psi[0], c1_ * psi[1], c2_ * psi[2], c2_ * psi[3]); }
  Spinor operator()(const Spinor& psi) const { return apply(psi); }

  MOperator inverse() const {
    if (!invertible()) throw Error(ErrorKind::NonInvertible, "block scalar is zero");
    return {1.0 / c1_, 1.0 / c2_};
  }

  Mat4 matrix() const {
    Mat4 m = Mat4::Zero();
    m(0, 0) = m(1, 1) = c1_;
    m(2, 2) = m(3, 3) = c2_;
    return m;
  }

  friend MOperator operator*(const MOperator& x, const MOperator& y) { return {x.c1_ * y.c1_, x.c2_ * y.c2_}; }

 private:
  cplx c1_{1.0};
  cplx c2_{1.0};
};

inline MOperator make_operator(cplx c1, cplx c2) { return {c1, c2}; }

struct CoefficientSet {
  cplx alpha{1.0}, beta{1.0}, delta{1.0}, epsilon{1.0}, omega{1.0}, zeta{1.0};
  double M_dirac = 0.0;
  double m_mdo = 0.0;
  double theta = 0.0;
  Sign sign = Sign::Plus;
  cplx sigma{};  // beta = J^(2 sigma)

  /// All ones: every map built from it is the identity.
  static CoefficientSet unit() { return {}; }
};

/// alpha = exp[iM / ((a + abar) J)], beta = exp[-i Im(a) ln J / (2 Re a)],
/// delta = sqrt(J / (A - iB)) (principal), epsilon = delta^rho,
/// omega = exp[+-m sin(theta) / (4 Re(a) (A - iB))], zeta likewise with A + iB.
inline CoefficientSet coefficient_set(const RimParams& p, const Bilinears& bil, double M_dirac, double m_mdo,
                                      double theta, Sign sign, double tol = kDefaultTol) {
  if (bil.dual != DualKind::Dirac) throw Error(ErrorKind::InvalidBase, "base bilinears must use the Dirac dual");
  if (const auto v = validate_base_bilinears(bil, tol); !v.ok())
    throw Error(ErrorKind::InvalidBase, "base rejected: " + std::string(to_string(v.reasons.front())));
  const double re_a = p.a.real();
  if (std::abs(re_a) <= tol * std::max(1.0, std::abs(p.a)))
    throw Error(ErrorKind::DegenerateRealPart, "Re(a) = 0");

  const cplx minus = bil.A - kI * bil.B;
  const cplx plus = bil.A + kI * bil.B;
  const double J = std::sqrt(bil.J2().real());
  const double sv = sign_value(sign);

  CoefficientSet c;
  c.M_dirac = M_dirac;
  c.m_mdo = m_mdo;
  c.theta = theta;
  c.sign = sign;
  c.sigma = -kI * p.a.imag() / (4.0 * re_a);
  c.alpha = std::exp(kI * M_dirac / (2.0 * re_a * J));
  c.beta = std::exp(-kI * p.a.imag() * std::log(J) / (2.0 * re_a));
  c.delta = std::sqrt(J / minus);
  c.epsilon = std::exp(p.rho * std::log(c.delta));
  c.omega = std::exp(sv * m_mdo * std::sin(theta) / (4.0 * re_a * minus));
  c.zeta = std::exp(sv * m_mdo * std::sin(theta) / (4.0 * re_a * plus));
  return c;
}

struct ChiFactors {
  cplx chi1{1.0}, chi2{1.0}, chi1_inv{1.0}, chi2_inv{1.0};
};

/// chi1 = eps omega / (delta beta alpha), chi2 = zeta delta / (eps beta alpha).
inline ChiFactors chi_factors(const CoefficientSet& c) {
  for (const cplx v : {c.alpha, c.beta, c.delta, c.epsilon, c.omega, c.zeta})
    if (v == 0.0 || !is_finite(v)) throw Error(ErrorKind::ZeroCoefficient, "coefficient is zero or non-finite");
  ChiFactors f;
  f.chi1 = c.epsilon * c.omega / (c.delta * c.beta * c.alpha);
  f.chi2 = c.zeta * c.delta / (c.epsilon * c.beta * c.alpha);
  f.chi1_inv = c.delta * c.beta * c.alpha / (c.epsilon * c.omega);
  f.chi2_inv = c.epsilon * c.beta * c.alpha / (c.zeta * c.delta);
  return f;
}

/// The same factors expanded in terms of (a, rho, A, B, M, m, theta):
///   chi1 = delta^(rho-1) exp{ [+-m sin(theta)/(2(A-iB)) + i(Im(a) ln J - M/J)] / (2 Re a) }
///   chi2 = delta^(1-rho) exp{ [+-m sin(theta)/(2(A+iB)) + i(Im(a) ln J - M/J)] / (2 Re a) }
/// with delta = sqrt(J/(A-iB)) and powers taken through the principal log.
inline ChiFactors chi_closed_form(const RimParams& p, const Bilinears& bil, double M_dirac, double m_mdo,
                                  double theta, Sign sign) {
  const cplx minus = bil.A - kI * bil.B;
  const cplx plus = bil.A + kI * bil.B;
  const double J = std::sqrt(bil.J2().real());
  const double re_a = p.a.real();
  const double sv = sign_value(sign);
  const cplx log_delta = std::log(std::sqrt(J / minus));
  const cplx phase = kI * (p.a.imag() * std::log(J) - M_dirac / J);
  const double ms = sv * m_mdo * std::sin(theta);

  ChiFactors f;
  f.chi1 = std::exp((p.rho - 1.0) * log_delta + (ms / (2.0 * minus) + phase) / (2.0 * re_a));
  f.chi2 = std::exp((1.0 - p.rho) * log_delta + (ms / (2.0 * plus) + phase) / (2.0 * re_a));
  f.chi1_inv = std::exp(-(p.rho - 1.0) * log_delta - (ms / (2.0 * minus) + phase) / (2.0 * re_a));
  f.chi2_inv = std::exp(-(1.0 - p.rho) * log_delta - (ms / (2.0 * plus) + phase) / (2.0 * re_a));
  return f;
}

/// Psi^D = L Psi^H with L = diag(alpha beta delta, alpha beta / delta).
inline MOperator dirac_operator(const CoefficientSet& c) {
  return {c.alpha * c.beta * c.delta, c.alpha * c.beta / c.delta};
}

/// lambda = Q Psi^H with Q = diag(eps omega, zeta / eps).
inline MOperator mdo_operator(const CoefficientSet& c) { return {c.epsilon * c.omega, c.zeta / c.epsilon}; }

/// M = diag(chi1, chi2) takes Psi^D to lambda.
inline MOperator chi_operator(const ChiFactors& f) { return {f.chi1, f.chi2}; }

inline Spinor dirac_from_base(const Spinor& base, const CoefficientSet& c) { return dirac_operator(c).apply(base); }
inline Spinor mdo_from_base(const Spinor& base, const CoefficientSet& c) { return mdo_operator(c).apply(base); }

enum class MapDirection { DiracToMdo, MdoToDirac };

inline constexpr std::string_view to_string(MapDirection d) {
  return d == MapDirection::DiracToMdo ? "dirac-to-mdo" : "mdo-to-dirac";
}

inline std::optional<MapDirection> parse_direction(std::string_view s) {
  if (s == "dirac-to-mdo") return MapDirection::DiracToMdo;
  if (s == "mdo-to-dirac") return MapDirection::MdoToDirac;
  return std::nullopt;
}

inline Spinor map_dirac_mdo(const Spinor& psi, const CoefficientSet& c, MapDirection dir) {
  const MOperator m = chi_operator(chi_factors(c));
  return dir == MapDirection::DiracToMdo ? m.apply(psi) : m.inverse().apply(psi);
}

/// Block multipliers (u1, u2) of a basis {u1 block1(base), u2 block2(base)}.
inline MOperator basis_multipliers(BasisTag tag, const CoefficientSet& c) {
  switch (tag) {
    case BasisTag::B: return {1.0, 1.0};
    case BasisTag::D: return dirac_operator(c);
    case BasisTag::M: return mdo_operator(c);
    case BasisTag::Custom: break;
  }
  throw Error(ErrorKind::InvalidInput, "custom bases carry their own multipliers");
}

/// Re-express coordinates given against multipliers `from` in terms of `to`.
inline PlaneCoords change_basis(const PlaneCoords& x, const MOperator& from, const MOperator& to, BasisTag tag,
                                int custom_id = 0) {
  const MOperator t = to.inverse() * from;
  return {t.c1() * x.r1, t.c2() * x.r2, tag, custom_id};
}

inline PlaneCoords change_basis(const PlaneCoords& x, BasisTag to, const CoefficientSet& c) {
  return change_basis(x, basis_multipliers(x.basis, c), basis_multipliers(to, c), to);
}

/// Coordinates of psi against the blocks of base, by least squares per block.
/// NotInPlane when a block residual exceeds tol * |psi|; DegenerateBasis when a
/// base block is zero relative to |base|.
inline PlaneCoords decompose(const Spinor& psi, const Spinor& base, double tol = 1e-8) {
  if (!psi.is_finite() || !base.is_finite()) throw Error(ErrorKind::InvalidInput, "non-finite spinor");
  const double base_norm = base.norm();
  const Vec2c b1 = base.top(), b2 = base.bottom();
  if (!(b1.norm() > tol * base_norm) || !(b2.norm() > tol * base_norm))
    throw Error(ErrorKind::DegenerateBasis, "base has a vanishing block");

  const auto fit = [&](const Vec2c& b, const Vec2c& v) {
    const cplx r = b.dot(v) / b.squaredNorm();  // dot conjugates b
    const double res = (v - r * b).norm();
    if (res > tol * std::max(psi.norm(), std::numeric_limits<double>::min()))
      throw Error(ErrorKind::NotInPlane, "block residual " + std::to_string(res));
    return r;
  };
  PlaneCoords out;
  out.r1 = fit(b1, psi.top());
  out.r2 = fit(b2, psi.bottom());
  return out;
}

/// r1 * block1(base) + r2 * block2(base).
inline Spinor compose(const PlaneCoords& x, const Spinor& base) { return MOperator(x.r1, x.r2).apply(base); }

}  // namespace spinorlab
