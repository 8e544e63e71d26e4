#pragma once

#include "bilinear.hpp"

namespace spinorlab {

enum class LounestoClass { Type1 = 1, Type2, Type3, Type4, Type5, Type6 };

inline constexpr int type_number(LounestoClass c) { return static_cast<int>(c); }
inline constexpr bool is_regular(LounestoClass c) { return type_number(c) <= 3; }

struct ClassifyOptions {
  double tol = kDefaultTol;
  /// Quantities within (tol, near_factor * tol] of zero flag the result.
  double near_factor = 100.0;

  void check() const {
    if (!(tol > 0.0) || !(near_factor >= 1.0))
      throw Error(ErrorKind::InvalidInput, "tolerance must be positive");
  }
};

struct Classification {
  LounestoClass cls = LounestoClass::Type1;
  bool near_degenerate = false;

  int type() const { return type_number(cls); }
  bool regular() const { return is_regular(cls); }
};

namespace detail {

struct ZeroTester {
  double threshold;
  double near_threshold;
  bool near = false;

  bool zero(double magnitude) {
    if (magnitude <= threshold) return true;
    if (magnitude <= near_threshold) near = true;
    return false;
  }
};

}  // namespace detail

/// Lounesto class of a Dirac-dual spinor from its bilinears. Zero-tests are
/// |x| <= tol * |psi|^2.
inline Classification classify(const Bilinears& b, const ClassifyOptions& opt = {}) {
  opt.check();
  if (b.dual != DualKind::Dirac)
    throw Error(ErrorKind::NonDiracDual, "Lounesto classes presume the Dirac dual");
  if (!(b.norm2 > opt.tol * opt.tol))
    throw Error(ErrorKind::AmbiguousScale, "spinor norm below threshold");

  detail::ZeroTester z{opt.tol * b.norm2, opt.near_factor * opt.tol * b.norm2};

  bool j_zero = true, k_zero = true, s_zero = true;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    j_zero = z.zero(std::abs(b.J[mu])) && j_zero;
    k_zero = z.zero(std::abs(b.K[mu])) && k_zero;
  }
  if (j_zero) throw Error(ErrorKind::NullCurrent, "current J vanishes");
  for (const auto& [mu, nu] : kBivectorPairs)
    s_zero = z.zero(std::abs(b.S[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)])) && s_zero;
  const bool a_zero = z.zero(std::abs(b.A));
  const bool b_zero = z.zero(std::abs(b.B));

  Classification out;
  if (!a_zero || !b_zero) {
    if (k_zero || s_zero)
      throw Error(ErrorKind::InconsistentBilinears, "regular spinor with vanishing K or S");
    out.cls = !a_zero && !b_zero ? LounestoClass::Type1
              : !a_zero          ? LounestoClass::Type2
                                 : LounestoClass::Type3;
  } else if (!k_zero && !s_zero) {
    out.cls = LounestoClass::Type4;
  } else if (k_zero && !s_zero) {
    out.cls = LounestoClass::Type5;
  } else if (!k_zero && s_zero) {
    out.cls = LounestoClass::Type6;
  } else {
    throw Error(ErrorKind::InconsistentBilinears, "A, B, K and S all vanish with J non-null");
  }
  out.near_degenerate = z.near;
  return out;
}

/// Class of r1 * block1(base) + r2 * block2(base) read off the coordinates and
/// the base scalars (A, B), without forming any bilinear of the result.
///
/// One vanishing coordinate gives type 6. Otherwise, with w+- = r1 r2* +- r1* r2,
/// type 2 needs A = -iB w+/w- and type 3 needs A = -iB w-/w+, both only when
/// (r1* r2)^2 != (r1 r2*)^2; everything else is type 1.
inline Classification classify_by_coefficients(cplx r1, cplx r2, double A, double B,
                                               const ClassifyOptions& opt = {}) {
  opt.check();
  const double base_scale = std::hypot(A, B);
  const auto small = [&](double v, double scale) { return std::abs(v) <= opt.tol * scale; };
  if (!(base_scale > 0.0) || small(A, base_scale) || small(B, base_scale))
    throw Error(ErrorKind::InvalidBase, "base needs A != 0 and B != 0 (hence A1, A2 != 0, A1 != +-A2)");

  const double r_scale = std::max(std::abs(r1), std::abs(r2));
  if (!(r_scale > 0.0)) throw Error(ErrorKind::ZeroDecomposition, "r1 = r2 = 0");
  const bool r1_zero = std::abs(r1) <= opt.tol * r_scale;
  const bool r2_zero = std::abs(r2) <= opt.tol * r_scale;
  if (r1_zero && r2_zero) throw Error(ErrorKind::ZeroDecomposition, "r1 = r2 = 0");

  Classification out;
  if (r1_zero || r2_zero) {
    out.cls = LounestoClass::Type6;
    return out;
  }

  const cplx z = std::conj(r1) * r2;  // r1* r2
  const cplx w_plus = std::conj(z) + z;
  const cplx w_minus = std::conj(z) - z;
  // (r1 r2*)^2 - (r1* r2)^2 = -4i Re(z) Im(z)
  const double guard = std::abs(z.imag() * z.real());
  const double guard_scale = std::norm(r1) * std::norm(r2);
  out.cls = LounestoClass::Type1;
  if (guard > opt.tol * guard_scale) {
    const double eq_scale = std::max({std::abs(A), std::abs(B), 1.0});
    const double type2 = std::abs(A + kI * B * (w_plus / w_minus));
    const double type3 = std::abs(A + kI * B * (w_minus / w_plus));
    if (type2 <= opt.tol * eq_scale) {
      out.cls = LounestoClass::Type2;
    } else if (type3 <= opt.tol * eq_scale) {
      out.cls = LounestoClass::Type3;
    } else {
      out.near_degenerate = std::min(type2, type3) <= opt.near_factor * opt.tol * eq_scale;
    }
  } else if (guard > guard_scale * opt.tol / opt.near_factor) {
    out.near_degenerate = true;
  }
  return out;
}

}  // namespace spinorlab
