#pragma once

// Straight-line homotopies on the spinor-plane. Coordinate functions are
// linear, y(x) = w x, so a path is the segment w(t) = (1 - t) w_f + t w_g.

#include <optional>
#include <vector>

#include "lounesto.hpp"
#include "plane.hpp"

namespace spinorlab {

struct CoordFunction {
  cplx w{1.0};

  cplx operator()(cplx x) const { return w * x; }
};

enum class HomotopyKind { Basis, Spinor };

struct HomotopyPath {
  CoordFunction f;
  CoordFunction g;
  HomotopyKind kind = HomotopyKind::Basis;
  std::optional<double> degenerate_t;  // where w(t) = 0, if inside (0, 1)
  BasisTag basis = BasisTag::B;

  /// (1 - t) w_f + t w_g
  cplx w(double t) const { return (1.0 - t) * f.w + t * g.w; }
};

/// H(x, t) = (1 - t) f(x) + t g(x). t = 0 and t = 1 reproduce f(x) and g(x)
/// bit for bit.
inline cplx eval_function(const HomotopyPath& path, cplx x, double t) { return (1.0 - t) * path.f(x) + t * path.g(x); }

namespace detail {

inline std::optional<double> vanishing_parameter(cplx wf, cplx wg, double tol = 1e-12) {
  const cplx diff = wf - wg;
  if (diff == 0.0) return std::nullopt;
  const cplx t = wf / diff;
  if (std::abs(t.imag()) > tol) return std::nullopt;
  if (!(t.real() > 0.0) || !(t.real() < 1.0)) return std::nullopt;
  return t.real();
}

}  // namespace detail

inline HomotopyPath basis_homotopy(const CoordFunction& f, const CoordFunction& g) {
  if (!is_finite(f.w) || !is_finite(g.w)) throw Error(ErrorKind::InvalidInput, "non-finite multiplier");
  HomotopyPath p;
  p.f = f;
  p.g = g;
  p.kind = HomotopyKind::Basis;
  p.degenerate_t = detail::vanishing_parameter(f.w, g.w);
  return p;
}

struct BasisSample {
  Spinor first;    // block1(base)
  Spinor second;   // w(t) block2(base)
  Spinor tracked;  // x first + x second
  PlaneCoords coords;
  double ratio_error = 0.0;  // |r2 / r1 - 1|
  MOperator induced;         // diag(1, w(t)) against the blocks of base
};

/// Intermediate basis A_t = {block1(base), w(t) block2(base)}. The spinor whose
/// B-coordinates are (x, H(x, t)) is decomposed against A_t and must come out
/// as (x, x).
inline BasisSample sample_basis(const HomotopyPath& path, const Spinor& base, double t, cplx x = 1.0) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::InvalidInput, "t must lie in [0, 1]");
  if (x == 0.0) throw Error(ErrorKind::InvalidInput, "x must be non-zero");
  const cplx wt = path.w(t);
  const double scale = std::max({std::abs(path.f.w), std::abs(path.g.w), 1.0});
  if ((path.degenerate_t && std::abs(t - *path.degenerate_t) <= 1e-12) || std::abs(wt) <= 1e-12 * scale)
    throw Error(ErrorKind::DegenerateParameter, "basis coefficient vanishes at t = " + std::to_string(t));

  BasisSample s;
  s.induced = MOperator(1.0, wt);
  const auto [top, bottom] = chiral_parts(base);
  s.first = top;
  s.second = wt * bottom;
  s.tracked = compose({x, eval_function(path, x, t)}, base);

  const Spinor basis_spinor = s.first + s.second;
  s.coords = decompose(s.tracked, basis_spinor);
  s.coords.basis = BasisTag::Custom;
  s.ratio_error = std::abs(s.coords.r2 / s.coords.r1 - 1.0);
  return s;
}

/// G(x, t) = (x, (1 - t) y_psi(x) + t y_phi(x)), with y(x) = (r2 / r1) x.
inline HomotopyPath spinor_homotopy(const PlaneCoords& psi, const PlaneCoords& phi) {
  if (!psi.same_basis(phi)) throw Error(ErrorKind::BasisMismatch, "coordinates refer to different bases");
  if (psi.r1 == 0.0 || phi.r1 == 0.0)
    throw Error(ErrorKind::InvalidInput, "first coordinate must be non-zero to define y(x)");
  HomotopyPath p;
  p.f.w = psi.r2 / psi.r1;
  p.g.w = phi.r2 / phi.r1;
  p.kind = HomotopyKind::Spinor;
  p.degenerate_t = detail::vanishing_parameter(p.f.w, p.g.w);
  p.basis = psi.basis;
  return p;
}

inline PlaneCoords eval(const HomotopyPath& path, cplx x, double t) {
  return {x, eval_function(path, x, t), path.basis};
}

/// Class of the spinor at parameter t from its coordinates and the base's
/// scalars.
inline Classification classify_on_path(const HomotopyPath& path, cplx x, double t, double A, double B,
                                       const ClassifyOptions& opt = {}) {
  const PlaneCoords c = eval(path, x, t);
  return classify_by_coefficients(c.r1, c.r2, A, B, opt);
}

struct ClassTransition {
  double t_below;  // last parameter with the class at t_lo
  double t_above;  // first parameter with a different class
  LounestoClass before;
  LounestoClass after;
};

/// Bisection for the point in [t_lo, t_hi] where the class changes. Assumes a
/// single change; returns nothing when the endpoint classes agree.
inline std::optional<ClassTransition> find_class_transition(const HomotopyPath& path, cplx x, double A, double B,
                                                            double t_lo = 0.0, double t_hi = 1.0,
                                                            const ClassifyOptions& opt = {}, double t_tol = 1e-14) {
  const LounestoClass c_lo = classify_on_path(path, x, t_lo, A, B, opt).cls;
  const LounestoClass c_hi = classify_on_path(path, x, t_hi, A, B, opt).cls;
  if (c_lo == c_hi) return std::nullopt;
  double lo = t_lo, hi = t_hi;
  while (hi - lo > t_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (classify_on_path(path, x, mid, A, B, opt).cls == c_lo)
      lo = mid;
    else
      hi = mid;
  }
  return ClassTransition{lo, hi, c_lo, classify_on_path(path, x, hi, A, B, opt).cls};
}

}  // namespace spinorlab
