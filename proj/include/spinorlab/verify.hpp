#pragma once

// Randomized identity suites. Every check draws from its own counter-based
// stream keyed by (seed, suite, check), so a suite gives the same numbers
// whether it runs alone or as part of "all". Reports carry no timings.

#include <functional>
#include <limits>
#include <map>
#include <vector>

#include "homotopy.hpp"
#include "mdo.hpp"
#include "plane.hpp"
#include "random.hpp"
#include "serialize.hpp"

namespace spinorlab::verify {

enum class Bound { AtMost, AtLeast };

struct Check {
  std::string name;
  std::size_t trials = 0;
  double value = 0.0;
  double threshold = 0.0;
  Bound bound = Bound::AtMost;

  bool passed() const {
    if (!std::isfinite(value)) return false;
    return bound == Bound::AtMost ? value <= threshold : value >= threshold;
  }
};

struct SuiteReport {
  std::string name;
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
  }
};

struct Config {
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  double tol = kDefaultTol;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"clifford", "fpk", "rim", "plane", "homotopy", "mdo", "props"};
  return names;
}

namespace detail {

/// Running maximum (or minimum) that propagates NaN.
struct Tracker {
  double value;
  Bound bound;

  explicit Tracker(Bound b = Bound::AtMost)
      : value(b == Bound::AtMost ? 0.0 : std::numeric_limits<double>::infinity()), bound(b) {}

  void add(double v) {
    if (std::isnan(v) || std::isnan(value)) {
      value = std::numeric_limits<double>::quiet_NaN();
      return;
    }
    value = bound == Bound::AtMost ? std::max(value, v) : std::min(value, v);
  }
};

class SuiteBuilder {
 public:
  SuiteBuilder(std::string name, int suite_id, const Config& cfg) : cfg_(cfg), id_(suite_id) { report_.name = std::move(name); }

  CounterRng stream() { return CounterRng(cfg_.seed, static_cast<std::uint64_t>(id_) * 1000 + next_stream_++); }

  void upper(std::string name, std::size_t trials, double value, double threshold) {
    report_.checks.push_back({std::move(name), trials, value, threshold, Bound::AtMost});
  }
  void lower(std::string name, std::size_t trials, double value, double threshold) {
    report_.checks.push_back({std::move(name), trials, value, threshold, Bound::AtLeast});
  }

  const Config& cfg() const { return cfg_; }
  SuiteReport done() { return std::move(report_); }

 private:
  Config cfg_;
  int id_;
  std::uint64_t next_stream_ = 0;
  SuiteReport report_;
};

inline double rel(double abs_err, double scale) { return abs_err / std::max(1.0, scale); }

}  // namespace detail

namespace gen {

inline double signed_range(CounterRng& rng, double lo, double hi) {
  const double mag = rng.uniform(lo, hi);
  return rng.uniform() < 0.5 ? -mag : mag;
}

/// Re a = Re b with |Re| in [0.2, 1], Im a in [-1, 1], |Im b| in [0.05, 1].
inline RimParams params(CounterRng& rng) {
  const double re = signed_range(rng, 0.2, 1.0);
  const double ia = rng.uniform(-1.0, 1.0);
  const double ib = signed_range(rng, 0.05, 1.0);
  return validate({re, ia}, {re, ib});
}

inline Spinor unit_spinor(CounterRng& rng) {
  for (;;) {
    const Spinor s = rng.spinor();
    if (s.norm2() > 1e-6) return (1.0 / s.norm()) * s;
  }
}

/// Unit-norm valid RIM base whose current satisfies J >= min_current.
inline Spinor base(CounterRng& rng, double min_current = 0.2, double tol = kDefaultTol) {
  for (;;) {
    const Spinor s = unit_spinor(rng);
    const Bilinears b = compute(s);
    if (std::sqrt(std::max(0.0, b.J2().real())) >= min_current && validate_base_bilinears(b, tol).ok()) return s;
  }
}

inline Momentum momentum(CounterRng& rng) {
  Momentum m;
  m.m = rng.uniform(0.5, 3.0);
  m.p = rng.uniform(0.0, 3.0);
  m.theta = rng.uniform(0.0, kPi);
  m.phi = rng.uniform(0.0, 2.0 * kPi);
  return m;
}

inline FourVector four_vector(CounterRng& rng) { return {rng.complex(), rng.complex(), rng.complex(), rng.complex()}; }

/// Ten generic spinors with |psi| = 1 and J >= 0.1.
inline const std::array<Spinor, 10>& fixed_spinors() {
  static const std::array<Spinor, 10> s = [] {
    const std::array<Spinor, 10> raw{
        Spinor({1.0, 0.0}, {0.0, 0.5}, {0.3, 0.0}, {-0.2, 0.4}),
        Spinor({0.7, -0.2}, {0.1, 0.9}, {0.5, 0.0}, {0.0, -0.3}),
        Spinor({0.2, 0.2}, {-0.6, 0.1}, {0.9, -0.4}, {0.3, 0.7}),
        Spinor({-0.5, 0.8}, {0.4, 0.0}, {0.0, 0.2}, {1.0, 0.1}),
        Spinor({0.3, -0.9}, {0.2, 0.6}, {-0.7, 0.5}, {0.1, 0.0}),
        Spinor({1.0, 1.0}, {0.0, 0.0}, {0.5, -0.5}, {0.25, 0.0}),
        Spinor({0.0, 0.6}, {0.8, 0.0}, {0.1, 0.1}, {-0.4, 0.9}),
        Spinor({-0.3, -0.3}, {0.7, 0.2}, {0.6, -0.8}, {0.0, 0.4}),
        Spinor({0.9, 0.1}, {-0.1, -0.7}, {0.2, 0.3}, {0.8, -0.6}),
        Spinor({0.45, 0.0}, {0.0, -0.35}, {-0.9, 0.2}, {0.3, 0.3}),
    };
    std::array<Spinor, 10> out;
    for (std::size_t i = 0; i < raw.size(); ++i) out[i] = (1.0 / raw[i].norm()) * raw[i];
    return out;
  }();
  return s;
}

/// Phase chi of r2 / r1 that makes B_psi = 0 (Type2) or A_psi = 0 (Type3).
inline double type2_phase(double A, double B) { return std::atan2(B, A); }
inline double type3_phase(double A, double B) { return std::atan2(-A, B); }

/// Rotate the bottom block so that A (zero_A) or B vanishes exactly up to rounding.
inline Spinor with_vanishing(const Spinor& s, bool zero_A) {
  const cplx overlap = s.bottom().dot(s.top());  // bottom^dagger top = A1
  const double shift = zero_A ? std::arg(overlap) - 0.5 * kPi : std::arg(overlap);
  return Spinor::from_blocks(s.top(), std::polar(1.0, shift) * s.bottom());
}

}  // namespace gen

inline double heisenberg_scale(const Spinor& psi, const RimParams& p) {
  return std::max(1.0, (std::abs(p.a) + std::abs(p.b)) * std::pow(psi.norm2(), 1.5));
}

inline double derivative_scale(const Spinor& psi, const RimParams& p) {
  return std::max(1.0, (std::abs(p.a) + std::abs(p.b)) * psi.norm2() * psi.norm2());
}

inline SuiteReport clifford_suite(const Config& cfg) {
  detail::SuiteBuilder sb("clifford", 1, cfg);
  const auto& g = gammas();
  double anti = 0.0, herm = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const Mat4 target = (mu == nu ? 2.0 * metric_diag(mu) : 0.0) * Mat4::Identity();
      anti = std::max(anti, max_abs(Mat4(g[mu] * g[nu] + g[nu] * g[mu] - target)));
    }
    herm = std::max(herm, max_abs(Mat4(g[0] * g[mu].adjoint() * g[0] - g[mu])));
  }
  sb.upper("anticommutator", 16, anti, 1e-12);
  sb.upper("gamma5_square", 1, max_abs(Mat4(g.gamma5 * g.gamma5 - Mat4::Identity())), 1e-12);
  sb.upper("gamma5_product", 1, max_abs(Mat4(g.gamma5 - kI * g[0] * g[1] * g[2] * g[3])), 1e-12);
  sb.upper("dirac_conjugation", 4, herm, 1e-12);

  double gamma5_anti = 0.0;
  for (int mu = 0; mu < 4; ++mu) gamma5_anti = std::max(gamma5_anti, max_abs(Mat4(g.gamma5 * g[mu] + g[mu] * g.gamma5)));
  sb.upper("gamma5_anticommutes", 4, gamma5_anti, 1e-12);

  {
    auto rng = sb.stream();
    detail::Tracker t;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
      const FourVector u = gen::four_vector(rng), v = gen::four_vector(rng);
      const Mat4 su = slash(u), sv = slash(v);
      const double nu = std::sqrt(std::norm(u[0]) + std::norm(u[1]) + std::norm(u[2]) + std::norm(u[3]));
      const double nv = std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]) + std::norm(v[3]));
      const Mat4 err = su * sv + sv * su - 2.0 * minkowski_dot(u, v) * Mat4::Identity();
      t.add(detail::rel(max_abs(err), nu * nv));
    }
    sb.upper("slash_anticommutator", cfg.trials, t.value, 1e-12);
  }
  {
    auto rng = sb.stream();
    detail::Tracker t;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
      const FourVector v = gen::four_vector(rng);
      const Mat4 sv = slash(v);
      const double n2 = std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]) + std::norm(v[3]);
      t.add(detail::rel(max_abs(Mat4(sv * sv - minkowski_dot(v, v) * Mat4::Identity())), n2));
    }
    sb.upper("slash_square", cfg.trials, t.value, 1e-12);
  }
  return sb.done();
}

inline SuiteReport fpk_suite(const Config& cfg) {
  detail::SuiteBuilder sb("fpk", 2, cfg);
  {
    auto rng = sb.stream();
    std::array<detail::Tracker, 4> fpk;
    detail::Tracker reality, split;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
      const Spinor psi = rng.spinor();
      const Bilinears b = compute(psi);
      const double q = quartic_scale(b.norm2);
      const auto r = fpk_residuals(b).values();
      for (std::size_t k = 0; k < 4; ++k) fpk[k].add(r[k] / q);

      double im = std::max(std::abs(b.A.imag()), std::abs(b.B.imag()));
      for (std::size_t mu = 0; mu < 4; ++mu) {
        im = std::max({im, std::abs(b.J[mu].imag()), std::abs(b.K[mu].imag())});
        for (std::size_t nu = 0; nu < 4; ++nu) im = std::max(im, std::abs(b.S[mu][nu].imag()));
      }
      reality.add(detail::rel(im, b.norm2));
      split.add(detail::rel(std::max(std::abs(b.A - (b.A1 + b.A2)), std::abs(b.B - kI * (b.A2 - b.A1))), b.norm2));
    }
    sb.upper("norm_identity", cfg.trials, fpk[0].value, 1e-10);
    sb.upper("bivector_identity", cfg.trials, fpk[1].value, 1e-10);
    sb.upper("orthogonality", cfg.trials, fpk[2].value, 1e-10);
    sb.upper("opposite_norm", cfg.trials, fpk[3].value, 1e-10);
    sb.upper("dirac_bilinears_real", cfg.trials, reality.value, 1e-12);
    sb.upper("chiral_scalar_split", cfg.trials, split.value, 1e-12);
  }
  {
    auto rng = sb.stream();
    detail::Tracker t;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
      const Spinor base = rng.spinor();
      const cplx r1 = rng.complex(), r2 = rng.complex();
      const Spinor psi = MOperator(r1, r2).apply(base);
      t.add(detail::rel(fast_mismatch(compute_fast(base, r1, r2), compute(psi)), psi.norm2()));
    }
    sb.upper("fast_matches_generic", cfg.trials, t.value, 1e-10);
  }
  return sb.done();
}

inline SuiteReport rim_suite(const Config& cfg) {
  detail::SuiteBuilder sb("rim", 3, cfg);
  {
    auto rng = sb.stream();
    detail::Tracker t;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
      const RimParams p = gen::params(rng);
      const cplx two_s = kI * (p.a - p.b);
      t.add(std::max({std::abs(2.0 * p.s - two_s), std::abs(p.rho + 2.0 * p.s / p.b.imag())}));
    }
    sb.upper("params_s_rho", cfg.trials, t.value, 1e-12);
  }
  {
    auto rng = sb.stream();
    detail::Tracker h, da, db;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
      const Spinor psi = rng.spinor();
      const RimParams p = gen::params(rng);
      h.add(heisenberg_residual(psi, p) / heisenberg_scale(psi, p));
      const auto [ra, rb] = del_ab_residuals(psi, p);
      da.add(ra / derivative_scale(psi, p));
      db.add(rb / derivative_scale(psi, p));
    }
    sb.upper("heisenberg_residual", cfg.trials, h.value, 1e-10);
    sb.upper("derivative_of_A", cfg.trials, da.value, 1e-10);
    sb.upper("derivative_of_B", cfg.trials, db.value, 1e-10);
  }
  {
    auto rng = sb.stream();
    detail::Tracker t(Bound::AtLeast);
    std::size_t n = 0;
    const auto probe = [&](const Spinor& psi, RimParams p) {
      p.s += 0.1;
      t.add(heisenberg_residual(psi, p) / heisenberg_scale(psi, p));
      ++n;
    };
    for (const Spinor& psi : gen::fixed_spinors()) probe(psi, gen::params(rng));
    for (std::size_t i = 0; i < cfg.trials; ++i) probe(gen::base(rng, 0.1), gen::params(rng));
    sb.lower("heisenberg_perturbed_s", n, t.value, 1e-3);
  }
  {
    auto rng = sb.stream();
    detail::Tracker phase, real_r, scaling;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
      const Spinor psi = gen::base(rng, 0.1);
      const RimParams p = gen::params(rng);
      const Potentials pot = potentials(compute(psi), p);
      phase.add(std::abs(std::abs(pot.vartheta) - 1.0));
      real_r.add(std::abs(pot.R.imag()));
      const double c = rng.uniform(0.5, 2.0);
      const Potentials scaled = potentials(compute(c * psi), p);
      scaling.add(std::max(std::abs(scaled.S - pot.S - std::log(c * c) / (2.0 * p.a.real())),
                           std::abs(scaled.R - pot.R)));
    }
    sb.upper("vartheta_unit_modulus", cfg.trials, phase.value, 1e-10);
    sb.upper("R_real", cfg.trials, real_r.value, 1e-10);
    sb.upper("potentials_scaling", cfg.trials, scaling.value, 1e-10);
  }
  {
    auto rng = sb.stream();
    detail::Tracker forms, trace;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
      const RestrictionOperator g = restriction_operator(compute(gen::base(rng, 0.1)));
      const double scale = max_abs(g.G);
      forms.add(detail::rel(g.mismatch, scale));
      trace.add(detail::rel(std::abs(g.G.trace()), scale));
    }
    sb.upper("restriction_forms_agree", cfg.trials, forms.value, 1e-10);
    sb.upper("restriction_traceless", cfg.trials, trace.value, 1e-10);
  }
  {
    auto rng = sb.stream();
    // (W, Z) quarter pairs of the six domains, checked directly on the angles.
    static constexpr std::array<std::array<int, 2>, 6> pairs{{{0, 0}, {3, 0}, {3, 3}, {1, 1}, {2, 1}, {2, 2}}};
    const auto inside = [](double x, int q) { return x > q * 0.5 * kPi && x < (q + 1) * 0.5 * kPi; };
    double overlaps = 0.0, mismatches = 0.0;
    const std::size_t n = 10 * cfg.trials;
    for (std::size_t i = 0; i < n; ++i) {
      const double p1 = rng.uniform(0.0, 2.0 * kPi), p2 = rng.uniform(0.0, 2.0 * kPi);
      int hits = 0, which = 0;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (inside(p1, pairs[k][0]) && inside(p2, pairs[k][1])) {
          ++hits;
          which = static_cast<int>(k) + 1;
        }
      }
      if (hits > 1) overlaps += 1.0;
      const SDomain expect = hits == 1 ? static_cast<SDomain>(which) : SDomain::Outside;
      if (domain_of(p1, p2) != expect) mismatches += 1.0;
    }
    sb.upper("domains_disjoint", n, overlaps, 0.0);
    sb.upper("domain_lookup", n, mismatches, 0.0);
  }
  return sb.done();
}

namespace detail {

struct PlaneTrial {
  Spinor base;
  Bilinears bil;
  RimParams params;
  CoefficientSet coeffs;
};

inline PlaneTrial plane_trial(CounterRng& rng, double tol) {
  PlaneTrial t;
  t.base = gen::base(rng, 0.2, tol);
  t.bil = compute(t.base);
  t.params = gen::params(rng);
  const double M = rng.uniform(-2.0, 2.0);
  const double m = rng.uniform(0.0, 1.0);
  const double theta = rng.uniform(0.0, kPi);
  const Sign sign = rng.uniform() < 0.5 ? Sign::Plus : Sign::Minus;
  t.coeffs = coefficient_set(t.params, t.bil, M, m, theta, sign, tol);
  return t;
}

inline double rel_diff(cplx x, cplx y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); }

inline double rel_diff(const Spinor& x, const Spinor& y) { return (x - y).norm() / std::max(1.0, y.norm()); }

}  // namespace detail

inline SuiteReport plane_suite(const Config& cfg) {
  detail::SuiteBuilder sb("plane", 4, cfg);
  auto rng = sb.stream();
  detail::Tracker inv, closed, mn, lq, chain, meets, roundtrip, coords, coef, decomp;
  double not_type1 = 0.0;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    const auto t = detail::plane_trial(rng, cfg.tol);
    const CoefficientSet& c = t.coeffs;
    const ChiFactors f = chi_factors(c);
    inv.add(std::max(std::abs(f.chi1 * f.chi1_inv - 1.0), std::abs(f.chi2 * f.chi2_inv - 1.0)));

    const ChiFactors cf = chi_closed_form(t.params, t.bil, c.M_dirac, c.m_mdo, c.theta, c.sign);
    closed.add(std::max({std::abs(cf.chi1 / f.chi1 - 1.0), std::abs(cf.chi2 / f.chi2 - 1.0),
                         std::abs(cf.chi1_inv / f.chi1_inv - 1.0), std::abs(cf.chi2_inv / f.chi2_inv - 1.0)}));

    const Mat4 M = chi_operator(f).matrix();
    const Mat4 N = MOperator(f.chi1_inv, f.chi2_inv).matrix();
    mn.add(std::max(max_abs(Mat4(M * N - Mat4::Identity())), max_abs(Mat4(N * M - Mat4::Identity()))));

    const Spinor psi = rng.spinor();
    const MOperator L = dirac_operator(c), Q = mdo_operator(c);
    const auto [top, bottom] = chiral_parts(t.base);
    const Spinor psi_d = (c.alpha * c.beta) * ((c.delta * top) + ((1.0 / c.delta) * bottom));
    const Spinor lam = (c.epsilon * c.omega) * top + (c.zeta / c.epsilon) * bottom;
    lq.add(std::max({detail::rel_diff(L.inverse().apply(L.apply(psi)), psi),
                     detail::rel_diff(Q.inverse().apply(Q.apply(psi)), psi),
                     detail::rel_diff(dirac_from_base(t.base, c), psi_d), detail::rel_diff(mdo_from_base(t.base, c), lam)}));

    const PlaneCoords x{rng.complex(), rng.complex(), BasisTag::B};
    const PlaneCoords back =
        change_basis(change_basis(change_basis(x, BasisTag::D, c), BasisTag::M, c), BasisTag::B, c);
    chain.add(std::max(detail::rel_diff(back.r1, x.r1), detail::rel_diff(back.r2, x.r2)));

    const Spinor mapped = map_dirac_mdo(psi_d, c, MapDirection::DiracToMdo);
    meets.add(detail::rel_diff(mapped, lam));
    const Spinor there = map_dirac_mdo(psi, c, MapDirection::DiracToMdo);
    roundtrip.add(detail::rel_diff(map_dirac_mdo(there, c, MapDirection::MdoToDirac), psi));

    if (classify(compute(psi_d), {cfg.tol}).cls != LounestoClass::Type1) not_type1 += 1.0;

    const PlaneCoords cd = decompose(psi_d, t.base), cm = decompose(lam, t.base);
    coords.add(std::max({detail::rel_diff(cd.r1, c.alpha * c.beta * c.delta),
                         detail::rel_diff(cd.r2, c.alpha * c.beta / c.delta), detail::rel_diff(cm.r1, c.epsilon * c.omega),
                         detail::rel_diff(cm.r2, c.zeta / c.epsilon)}));

    const double J = std::sqrt(t.bil.J2().real());
    const cplx minus = t.bil.A - kI * t.bil.B;
    const double sv = sign_value(c.sign);
    const cplx omega_zeta = std::exp(sv * c.m_mdo * std::sin(c.theta) * t.bil.A / (2.0 * t.params.a.real() * J * J));
    coef.add(std::max({detail::rel_diff(c.delta * c.delta, J / minus), std::abs(std::abs(c.delta) - 1.0),
                       detail::rel_diff(c.beta, std::exp(2.0 * c.sigma * std::log(J))),
                       detail::rel_diff(c.omega * c.zeta, omega_zeta)}));

    const PlaneCoords r{rng.complex(), rng.complex()};
    const PlaneCoords got = decompose(compose(r, t.base), t.base);
    decomp.add(std::max(detail::rel_diff(got.r1, r.r1), detail::rel_diff(got.r2, r.r2)));
  }
  const std::size_t n = cfg.trials;
  sb.upper("chi_inverse", n, inv.value, 1e-12);
  sb.upper("chi_closed_form", n, closed.value, 1e-10);
  sb.upper("MN_identity", n, mn.value, 1e-10);
  sb.upper("L_Q_inversion", n, lq.value, 1e-10);
  sb.upper("basis_chain_B_D_M_B", n, chain.value, 1e-10);
  sb.upper("map_meets_mdo_from_base", n, meets.value, 1e-10);
  sb.upper("map_roundtrip", n, roundtrip.value, 1e-12);
  sb.upper("dirac_image_type1", n, not_type1, 0.0);
  sb.upper("image_coordinates", n, coords.value, 1e-10);
  sb.upper("coefficient_identities", n, coef.value, 1e-10);
  sb.upper("decompose_roundtrip", n, decomp.value, 1e-10);
  return sb.done();
}

inline SuiteReport homotopy_suite(const Config& cfg) {
  detail::SuiteBuilder sb("homotopy", 5, cfg);
  const std::size_t n = cfg.trials;
  {
    auto rng = sb.stream();
    detail::Tracker endpoint, line, symmetry, reflexive;
    for (std::size_t i = 0; i < n; ++i) {
      const CoordFunction f{rng.complex(-2.0, 2.0)}, g{rng.complex(-2.0, 2.0)};
      const cplx x = rng.complex();
      const double t = rng.uniform();
      const HomotopyPath path = basis_homotopy(f, g);
      endpoint.add(std::max(std::abs(eval_function(path, x, 0.0) - f(x)), std::abs(eval_function(path, x, 1.0) - g(x))));
      endpoint.add(std::max(std::abs(path.w(0.0) - f.w), std::abs(path.w(1.0) - g.w)));

      // w(t) lies on the segment: collinear with it and at arclength fraction t.
      const cplx d = g.w - f.w;
      const cplx rel = path.w(t) - f.w;
      const double len = std::max(1.0, std::abs(d));
      line.add(std::abs((rel * std::conj(d)).imag()) / (len * len));
      if (std::abs(d) > 1e-9) line.add(std::abs(std::abs(rel) / std::abs(d) - t));

      const HomotopyPath back = basis_homotopy(g, f);
      symmetry.add(std::abs(path.w(t) - back.w(1.0 - t)) / std::max(1.0, std::abs(path.w(t))));
      const HomotopyPath same = basis_homotopy(f, f);
      reflexive.add(std::abs(same.w(t) - f.w) / std::max(1.0, std::abs(f.w)));
    }
    sb.upper("endpoint_exact", 2 * n, endpoint.value, 0.0);
    sb.upper("straight_line", n, line.value, 1e-12);
    sb.upper("reverse_symmetry", n, symmetry.value, 1e-12);
    sb.upper("reflexive_constant", n, reflexive.value, 1e-15);
  }
  {
    auto rng = sb.stream();
    double misses = 0.0, false_alarms = 0.0;
    detail::Tracker where;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx c = std::polar(rng.uniform(0.2, 2.0), rng.uniform(0.0, 2.0 * kPi));
      const double k = rng.uniform(0.1, 10.0);
      const HomotopyPath path = basis_homotopy({c}, {-k * c});
      if (!path.degenerate_t) {
        misses += 1.0;
        continue;
      }
      where.add(std::abs(*path.degenerate_t - 1.0 / (1.0 + k)));
      bool thrown = false;
      try {
        (void)sample_basis(path, gen::fixed_spinors()[i % 10], *path.degenerate_t);
      } catch (const Error& e) {
        thrown = e.kind() == ErrorKind::DegenerateParameter;
      }
      if (!thrown) misses += 1.0;
      // Rotating g off the antipodal ray removes the zero crossing.
      const HomotopyPath skew = basis_homotopy({c}, {-k * c * std::polar(1.0, rng.uniform(0.1, 3.0))});
      if (skew.degenerate_t) false_alarms += 1.0;
    }
    sb.upper("degenerate_t_detected", n, misses, 0.0);
    sb.upper("degenerate_t_location", n, where.value, 1e-12);
    sb.upper("degenerate_t_false_alarm", n, false_alarms, 0.0);
  }
  {
    auto rng = sb.stream();
    detail::Tracker ratio;
    double singular = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Spinor base = gen::base(rng, 0.2, cfg.tol);
      const Bilinears b = compute(base);
      const double J = std::sqrt(b.J2().real());
      const CoordFunction g = i % 2 == 0 ? CoordFunction{(b.A - kI * b.B) / J} : CoordFunction{rng.complex(-2.0, 2.0)};
      const HomotopyPath path = basis_homotopy({1.0}, g);
      double t = rng.uniform(0.01, 0.99);
      if (path.degenerate_t && std::abs(t - *path.degenerate_t) < 1e-3) t = 0.5 * (t + (t < *path.degenerate_t ? 0.0 : 1.0));
      const BasisSample s = sample_basis(path, base, t, rng.complex());
      ratio.add(s.ratio_error);
      if (!s.induced.invertible()) singular += 1.0;
    }
    sb.upper("intermediate_coordinates_equal", n, ratio.value, 1e-10);
    sb.upper("intermediate_operator_invertible", n, singular, 0.0);
  }
  {
    auto rng = sb.stream();
    detail::Tracker located;
    double wrong = 0.0;
    const ClassifyOptions opt{cfg.tol};
    for (std::size_t i = 0; i < n; ++i) {
      const Spinor base = gen::base(rng, 0.2, cfg.tol);
      const Bilinears b = compute(base);
      const double A = b.A.real(), B = b.B.real();
      const cplx x = rng.complex();
      const cplx w = std::polar(rng.uniform(0.2, 0.9), rng.uniform(0.0, 2.0 * kPi));
      const HomotopyPath path = spinor_homotopy({x, w * x}, {x, 0.0});
      const auto tr = find_class_transition(path, x, A, B, 0.0, 1.0, opt);
      if (!tr || tr->before != classify_on_path(path, x, 0.0, A, B, opt).cls || tr->after != LounestoClass::Type6) {
        wrong += 1.0;
        continue;
      }
      // r2 = (1 - t) w x turns into a zero once |r2| <= tol * |x| (|w| < 1).
      located.add(std::abs(tr->t_above - (1.0 - cfg.tol / std::abs(w))));
      for (int k = 1; k <= 9; ++k) {
        const double t = 0.1 * k;
        const auto fast = classify_on_path(path, x, t, A, B, opt).cls;
        const auto brute = classify(compute(compose(eval(path, x, t), base)), opt).cls;
        if (fast != brute || fast != tr->before) wrong += 1.0;
      }
    }
    sb.upper("type1_to_type6_sweep", n, wrong, 0.0);
    sb.upper("type1_to_type6_transition", n, located.value, 1e-12);
  }
  return sb.done();
}

inline SuiteReport mdo_suite(const Config& cfg) {
  detail::SuiteBuilder sb("mdo", 6, cfg);
  const std::size_t n = cfg.trials;
  {
    auto rng = sb.stream();
    detail::Tracker invol, comm, trace;
    for (std::size_t i = 0; i < n; ++i) {
      const Momentum mom = gen::momentum(rng);
      const Mat4 x = xi(mom), ps = momentum_slash(mom);
      invol.add(max_abs(Mat4(x * x - Mat4::Identity())));
      comm.add(max_abs(Mat4(x * ps - ps * x)));
      trace.add(std::abs(x.trace()));
    }
    sb.upper("xi_involution", n, invol.value, 1e-11);
    sb.upper("xi_commutes_with_momentum", n, comm.value, 1e-11);
    sb.upper("xi_traceless", n, trace.value, 1e-12);
  }
  {
    const Mat2 th = wigner_theta();
    const auto s = pauli();
    double tr = max_abs(Mat2(th * th + Mat2::Identity()));
    for (const Mat2& sk : s) tr = std::max(tr, max_abs(Mat2(th * sk * th.inverse() + sk.conjugate())));
    sb.upper("wigner_time_reversal", 3, tr, 1e-15);
  }
  {
    auto rng = sb.stream();
    detail::Tracker structure, charge, helicity, dirac_ab, diraclike, chirality, mdo_norm, swapped(Bound::AtLeast),
        separation(Bound::AtLeast), phase;
    double fixture_misses = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Momentum mom = gen::momentum(rng);
      const double h_val = i % 2 == 0 ? 1.0 : -1.0;
      const Helicity h = h_val > 0 ? Helicity::Plus : Helicity::Minus;
      std::array<ElkoSpinor, 2> pair;
      for (const Conjugation cj : {Conjugation::S, Conjugation::A}) {
        const ElkoSpinor lam = elko(mom, h, cj);
        pair[cj == Conjugation::S ? 0 : 1] = lam;
        const double sv = sign_value(lam.sign);
        const Vec2c expect_top = (sv * kI) * (wigner_theta() * lam.bottom().conjugate());
        structure.add((lam.top() - expect_top).cwiseAbs().maxCoeff());

        const double n2 = lam.spinor.norm2();
        const Spinor cl = charge_conjugate(lam.spinor);
        const double c_eig = cj == Conjugation::S ? 1.0 : -1.0;
        charge.add((cl - c_eig * lam.spinor).norm() / lam.spinor.norm());

        const BlockHelicity hb = block_helicity(lam.bottom(), mom), ht = block_helicity(lam.top(), mom);
        helicity.add(std::max({std::abs(hb.value - h_val), std::abs(ht.value + h_val), hb.residual, ht.residual}));

        const Bilinears db = compute(lam.spinor);
        dirac_ab.add(detail::rel(std::max(std::abs(db.A), std::abs(db.B)), n2));

        const DiracLike d = diraclike_residual(lam, mom);
        diraclike.add(d.residual / lam.spinor.norm());
        separation.add(d.other / (mom.m * lam.spinor.norm()));
        if (!d.matches_fixture) fixture_misses += 1.0;

        const double xs = std::max(1.0, max_abs(xi(mom)));
        const double scale = std::max(1.0, std::pow(n2, 1.5) * xs);
        const auto a = chirality_residuals(lam, mom);
        chirality.add(*std::max_element(a.begin(), a.end()) / scale);
        const auto sw = chirality_residuals(lam, mom, true);
        swapped.add(*std::max_element(sw.begin(), sw.end()) / scale);

        const Bilinears mb = mdo_bilinears(lam.spinor, mom);
        mdo_norm.add(std::abs(mb.J2() - mb.A * mb.A - mb.B * mb.B) / std::max(1.0, n2 * n2 * xs * xs));
      }
      // S and A differ by the sign of the top block only.
      phase.add((pair[0].bottom() - pair[1].bottom()).norm() + (pair[0].top() + pair[1].top()).norm());
    }
    sb.upper("elko_structure", 2 * n, structure.value, 0.0);
    sb.upper("charge_conjugation_eigenvalue", 2 * n, charge.value, 1e-12);
    sb.upper("dual_helicity", 2 * n, helicity.value, 1e-12);
    sb.upper("dirac_dual_scalars_vanish", 2 * n, dirac_ab.value, 1e-12);
    sb.upper("diraclike_residual", 2 * n, diraclike.value, 1e-9);
    sb.upper("diraclike_sign_fixture", 2 * n, fixture_misses, 0.0);
    sb.lower("diraclike_wrong_sign_separation", 2 * n, separation.value, 1.0);
    sb.upper("chirality_relations", 2 * n, chirality.value, 1e-9);
    sb.lower("chirality_relations_swapped_blocks", 2 * n, swapped.value, 1e-3);
    sb.upper("mdo_norm_identity", 2 * n, mdo_norm.value, 1e-10);
    sb.upper("S_A_block_sign", n, phase.value, 0.0);
  }
  {
    auto rng = sb.stream();
    detail::Tracker raw, product, flat;
    for (std::size_t i = 0; i < n; ++i) {
      const Spinor base = gen::base(rng, 0.2);
      const Bilinears b = compute(base);
      const RimParams p = gen::params(rng);
      const Momentum mom = gen::momentum(rng);
      const Potentials pot = potentials(b, p);
      const Sign sign = i % 2 == 0 ? Sign::Plus : Sign::Minus;
      const FGFunctions f = fg_functions(pot.S, pot.R, p, b, mom, sign);
      raw.add(std::max(f.mismatch_F, f.mismatch_G));

      const FGFunctions fm = fg_functions(pot.S, pot.R, p, b, mom, Sign::Minus);
      const double J2 = b.J2().real();
      const cplx expect = std::exp(-mom.p * std::sin(mom.theta) * b.A / (2.0 * p.a.real() * J2));
      product.add(std::abs(std::exp(fm.F) * std::exp(fm.G) / expect - 1.0));

      Momentum along = mom;
      along.theta = 0.0;
      const FGFunctions f0 = fg_functions(pot.S, pot.R, p, b, along, sign);
      const cplx phase_term = 2.0 * kI * p.s * pot.R;
      flat.add(std::max(std::abs(f0.F + phase_term), std::abs(f0.G - phase_term)));
    }
    sb.upper("FG_reduced_form", n, raw.value, 1e-10);
    sb.upper("FG_product", n, product.value, 1e-10);
    sb.upper("FG_theta_zero", n, flat.value, 0.0);
  }
  return sb.done();
}

inline SuiteReport props_suite(const Config& cfg) {
  detail::SuiteBuilder sb("props", 7, cfg);
  const std::size_t n = cfg.trials;
  const ClassifyOptions opt{cfg.tol};
  {
    auto rng = sb.stream();
    double disagree = 0.0, singular_4_5 = 0.0, real_not_type1 = 0.0, one_zero_bad = 0.0, phase_dependent = 0.0;
    detail::Tracker type2_B, type3_A;
    std::size_t n_real = 0, n_one_zero = 0, n_type2 = 0, n_type3 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Spinor base = gen::base(rng, 0.2, cfg.tol);
      const Bilinears b = compute(base);
      const double A = b.A.real(), B = b.B.real();
      cplx r1 = rng.complex(), r2 = rng.complex();
      switch (i % 10) {
        case 0: r2 = 0.0; break;
        case 1: r1 = 0.0; break;
        case 2: r1 = r1.real(); r2 = r2.real(); break;
        case 3: r2 = r1 * std::polar(rng.uniform(0.2, 1.5), gen::type2_phase(A, B)); break;
        case 4: r2 = r1 * std::polar(rng.uniform(0.2, 1.5), gen::type3_phase(A, B)); break;
        default: break;
      }
      const Spinor psi = MOperator(r1, r2).apply(base);
      const Bilinears pb = compute(psi);
      const LounestoClass fast = classify_by_coefficients(r1, r2, A, B, opt).cls;
      const LounestoClass brute = classify(pb, opt).cls;
      if (fast != brute) disagree += 1.0;
      if (fast == LounestoClass::Type4 || fast == LounestoClass::Type5) singular_4_5 += 1.0;

      const Spinor turned = std::polar(1.0, rng.uniform(0.0, 2.0 * kPi)) * base;
      const Bilinears tb = compute(turned);
      if (classify_by_coefficients(r1, r2, tb.A.real(), tb.B.real(), opt).cls != fast ||
          classify(compute(MOperator(r1, r2).apply(turned)), opt).cls != brute)
        phase_dependent += 1.0;

      switch (i % 10) {
        case 0: {
          ++n_one_zero;
          bool k_nonzero = false, s_zero = true;
          for (std::size_t mu = 0; mu < 4; ++mu) {
            k_nonzero = k_nonzero || std::abs(pb.K[mu]) > cfg.tol * pb.norm2;
            for (std::size_t nu = 0; nu < 4; ++nu) s_zero = s_zero && std::abs(pb.S[mu][nu]) <= cfg.tol * pb.norm2;
          }
          if (!k_nonzero || !s_zero) one_zero_bad += 1.0;
          break;
        }
        case 2:
          ++n_real;
          if (fast != LounestoClass::Type1) real_not_type1 += 1.0;
          break;
        case 3:
          ++n_type2;
          type2_B.add(std::abs(pb.B) / pb.norm2);
          if (fast != LounestoClass::Type2) type2_B.add(std::numeric_limits<double>::infinity());
          break;
        case 4:
          ++n_type3;
          type3_A.add(std::abs(pb.A) / pb.norm2);
          if (fast != LounestoClass::Type3) type3_A.add(std::numeric_limits<double>::infinity());
          break;
        default: break;
      }
    }
    sb.upper("coefficients_match_bilinears", n, disagree, 0.0);
    sb.upper("no_type4_or_type5", n, singular_4_5, 0.0);
    sb.upper("real_coordinates_type1", n_real, real_not_type1, 0.0);
    sb.upper("one_zero_coordinate_K_nonzero_S_zero", n_one_zero, one_zero_bad, 0.0);
    sb.upper("constructed_type2_B_vanishes", n_type2, type2_B.value, 1e-12);
    sb.upper("constructed_type3_A_vanishes", n_type3, type3_A.value, 1e-12);
    sb.upper("base_phase_invariance", n, phase_dependent, 0.0);
  }
  {
    auto rng = sb.stream();
    double accepted_not_type1 = 0.0, zero_a_missed = 0.0, zero_b_missed = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Spinor s = gen::unit_spinor(rng);
      if (validate_rim_base(s, cfg.tol).ok() && classify(compute(s), opt).cls != LounestoClass::Type1)
        accepted_not_type1 += 1.0;
      if (!validate_rim_base(gen::with_vanishing(s, true), cfg.tol).has(BaseViolation::ZeroA)) zero_a_missed += 1.0;
      if (!validate_rim_base(gen::with_vanishing(s, false), cfg.tol).has(BaseViolation::ZeroB)) zero_b_missed += 1.0;
    }
    sb.upper("valid_base_is_type1", n, accepted_not_type1, 0.0);
    sb.upper("A_zero_base_rejected", n, zero_a_missed, 0.0);
    sb.upper("B_zero_base_rejected", n, zero_b_missed, 0.0);
  }
  return sb.done();
}

inline SuiteReport run_suite(const std::string& name, const Config& cfg) {
  static const std::map<std::string, std::function<SuiteReport(const Config&)>> table{
      {"clifford", clifford_suite}, {"fpk", fpk_suite},   {"rim", rim_suite},    {"plane", plane_suite},
      {"homotopy", homotopy_suite}, {"mdo", mdo_suite},   {"props", props_suite},
  };
  const auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorKind::InvalidInput, "unknown suite '" + name + "'");
  return it->second(cfg);
}

/// One suite by name, or every suite in order for "all".
inline std::vector<SuiteReport> run(const std::string& name, const Config& cfg) {
  std::vector<SuiteReport> out;
  if (name == "all") {
    for (const auto& s : suite_names()) out.push_back(run_suite(s, cfg));
  } else {
    out.push_back(run_suite(name, cfg));
  }
  return out;
}

inline json to_json(const Check& c) {
  return {{"name", c.name},
          {"trials", c.trials},
          {"value", std::isfinite(c.value) ? json(c.value) : json(std::isnan(c.value) ? "nan" : "inf")},
          {"threshold", c.threshold},
          {"bound", c.bound == Bound::AtMost ? "max" : "min"},
          {"passed", c.passed()}};
}

inline json to_json(const SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"suite", r.name}, {"checks", checks}, {"passed", r.passed()}};
}

inline json report_json(const std::string& name, const Config& cfg, const std::vector<SuiteReport>& suites) {
  json arr = json::array();
  bool ok = true;
  for (const auto& s : suites) {
    arr.push_back(to_json(s));
    ok = ok && s.passed();
  }
  return {{"suite", name}, {"seed", cfg.seed}, {"trials", cfg.trials}, {"tol", cfg.tol}, {"suites", arr}, {"passed", ok}};
}

}  // namespace spinorlab::verify
