#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace spinorlab;

namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidInput;
}

const double kRoot2 = std::sqrt(2.0);

}  // namespace

TEST_CASE("s-space domains") {
  CHECK(domain_of(kPi / 4, kPi / 4) == SDomain::Omega1);
  CHECK(domain_of(kPi / 4, 7 * kPi / 4) == SDomain::Outside);
  CHECK(domain_of(7 * kPi / 4, kPi / 4) == SDomain::Omega2);
  CHECK(domain_of(7 * kPi / 4, 7 * kPi / 4) == SDomain::Omega3);
  CHECK(domain_of(3 * kPi / 4, 3 * kPi / 4) == SDomain::Omega4);
  CHECK(domain_of(5 * kPi / 4, 3 * kPi / 4) == SDomain::Omega5);
  CHECK(domain_of(5 * kPi / 4, 5 * kPi / 4) == SDomain::Omega6);
  CHECK(domain_of(kPi / 2, kPi / 4) == SDomain::Outside);
  CHECK(domain_of(0.0, kPi / 4) == SDomain::Outside);
  CHECK(quarter_of(2 * kPi) == -1);
  CHECK(quarter_of(0.1) == 0);
}

TEST_CASE("equal real parts with phases pi/4 and 7pi/4 fall outside every domain") {
  const cplx a = std::polar(1.0, kPi / 4);
  const cplx b = std::polar(a.real() / std::cos(7 * kPi / 4), 7 * kPi / 4);
  const RimParams p = validate(a, b);
  CHECK(p.domain == SDomain::Outside);
}

TEST_CASE("parameter validation") {
  CHECK(kind_of([] { (void)validate({0.3, 1.0}, {0.4, 1.0}); }) == ErrorKind::IntegrabilityViolation);
  CHECK(kind_of([] { (void)validate({0.3, 1.0}, {0.3, 0.0}); }) == ErrorKind::DegenerateB);
  CHECK(kind_of([] { (void)validate({NAN, 1.0}, {0.3, 1.0}); }) == ErrorKind::InvalidInput);
  const RimParams p = validate({0.5, 0.7}, {0.5, -0.2});
  CHECK(std::abs(p.s - (-(0.7 + 0.2) / 2.0)) < 1e-15);
  CHECK(std::abs(p.rho - (0.7 + 0.2) / -0.2) < 1e-14);
}

TEST_CASE("potentials on reference bilinears") {
  const RimParams p = validate({1.0, 0.3}, {1.0, 0.5});
  Bilinears b;
  b.norm2 = 1.0;
  b.A = 1.0;
  b.J = {1.0, 0.0, 0.0, 0.0};
  const Potentials unit = potentials(b, p);
  CHECK(unit.S == 0.0);

  b.A = 0.6;
  b.B = 0.8;
  const Potentials pq = potentials(b, p);
  CHECK(std::abs(pq.S) < 1e-15);
  CHECK(std::abs(pq.R - std::arg(cplx(0.6, -0.8)) / (2.0 * p.b.imag())) < 1e-15);
  CHECK(std::abs(std::abs(pq.vartheta) - 1.0) < 1e-15);
}

TEST_CASE("potentials under scaling of the spinor") {
  const RimParams p = validate({0.7, -0.4}, {0.7, 0.9});
  const Spinor psi = support::from_oracle(oracle::fixed()[4]);
  const double c = 1.7;
  const Potentials one = potentials(compute(psi), p);
  const Potentials two = potentials(compute(c * psi), p);
  CHECK(std::abs(two.S - one.S - std::log(c * c) / (2.0 * p.a.real())) < 1e-14);
  CHECK(std::abs(two.R - one.R) < 1e-14);
  CHECK(std::abs(one.R.imag()) < 1e-14);
}

TEST_CASE("potentials error paths") {
  const RimParams p = validate({0.7, -0.4}, {0.7, 0.9});
  Bilinears null;
  null.norm2 = 1.0;
  CHECK(kind_of([&] { (void)potentials(null, p); }) == ErrorKind::NullCurrent);
  RimParams flat = p;
  flat.a = {0.0, 1.0};
  CHECK(kind_of([&] { (void)potentials(compute(Spinor(1.0, 0.0, 1.0, 0.0)), flat); }) == ErrorKind::DegenerateRealPart);
}

TEST_CASE("derivative on (1,0,1,0)/sqrt2 has D_0 psi = a psi") {
  const Spinor psi = (1.0 / kRoot2) * Spinor(1.0, 0.0, 1.0, 0.0);
  const oracle::Bil o = oracle::bilinears(support::to_oracle(psi));
  CHECK(std::abs(o.J[0] - 1.0) < 1e-15);
  CHECK(std::abs(o.K[0]) < 1e-15);
  const RimParams p = validate({0.4, 0.2}, {0.4, -0.6});
  const auto d = rim_derivative(psi, p);
  CHECK(support::diff(d[0], p.a * psi) < 1e-15);
}

TEST_CASE("derivative matches an oracle evaluation") {
  const RimParams p = validate({-0.3, 0.8}, {-0.3, 0.25});
  for (const auto& v : oracle::fixed()) {
    const oracle::Bil o = oracle::bilinears(v);
    const auto d = rim_derivative(support::from_oracle(v), p);
    for (int mu = 0; mu < 4; ++mu) {
      const auto m = static_cast<std::size_t>(mu);
      const oracle::C j = oracle::eta(mu) * o.J[m];
      const oracle::C kappa = -oracle::eta(mu) * o.K[m];
      const oracle::V4 g5v = oracle::act(oracle::gamma5(), v);
      for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(d[m][static_cast<int>(i)] - (p.a * j * v[i] + p.b * kappa * g5v[i])) < 1e-14);
    }
  }
}

TEST_CASE("Heisenberg residual vanishes and a shifted s breaks it") {
  const RimParams p = validate({0.6, -0.5}, {0.6, 0.35});
  for (const auto& v : oracle::fixed()) {
    const Spinor psi = support::from_oracle(v);
    CHECK(heisenberg_residual(psi, p) < 1e-13);
    RimParams shifted = p;
    shifted.s += 0.1;
    CHECK(heisenberg_residual(psi, shifted) > 1e-3);
  }
  CHECK(heisenberg_residual(Spinor(), p) == 0.0);
}

TEST_CASE("the underlying Fierz relations hold in the oracle") {
  // J_mu gamma^mu psi = (A + iB gamma5) psi
  for (const auto& v : oracle::fixed()) {
    const oracle::Bil o = oracle::bilinears(v);
    oracle::M4 js{};
    for (int mu = 0; mu < 4; ++mu) js = oracle::add(js, oracle::gamma(mu), oracle::eta(mu) * o.J[static_cast<std::size_t>(mu)]);
    const oracle::M4 rhs = oracle::add(oracle::scale(oracle::identity(), o.A), oracle::gamma5(), oracle::I * o.B);
    const oracle::V4 l = oracle::act(js, v), r = oracle::act(rhs, v);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(l[i] - r[i]) < 1e-14);
  }
}

TEST_CASE("derivatives of A and B") {
  CounterRng rng(13, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const RimParams p = verify::gen::params(rng);
    const Spinor psi = rng.spinor();
    const auto [ra, rb] = del_ab_residuals(psi, p);
    const double scale = verify::derivative_scale(psi, p);
    CHECK(ra / scale < 1e-13);
    CHECK(rb / scale < 1e-13);
  }
}

TEST_CASE("RIM base validation examples") {
  const auto b_zero = validate_rim_base((1.0 / kRoot2) * Spinor(1.0, 0.0, 1.0, 0.0));
  CHECK(b_zero.has(BaseViolation::ZeroB));
  CHECK(b_zero.has(BaseViolation::A1EqualsA2));
  CHECK_FALSE(b_zero.has(BaseViolation::ZeroA));

  const auto a_zero = validate_rim_base((1.0 / kRoot2) * Spinor(1.0, 0.0, kI, 0.0));
  CHECK(a_zero.has(BaseViolation::ZeroA));
  CHECK(a_zero.has(BaseViolation::A1EqualsMinusA2));
  CHECK_FALSE(a_zero.has(BaseViolation::ZeroB));

  const Spinor good = (1.0 / kRoot2) * Spinor(1.0, 0.0, std::polar(1.0, kPi / 4), 0.0);
  CHECK(validate_rim_base(good).ok());
  const Bilinears b = compute(good);
  CHECK(std::abs(b.A - std::cos(kPi / 4)) < 1e-15);
  CHECK(std::abs(std::abs(b.B) - std::sin(kPi / 4)) < 1e-15);

  CHECK(validate_rim_base(Spinor()).has(BaseViolation::ZeroSpinor));
  CHECK(validate_rim_base(Spinor(1.0, 0.0, 0.0, 0.0)).has(BaseViolation::ZeroA1));
}

TEST_CASE("validated bases are type 1") {
  CounterRng rng(17, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const Spinor psi = rng.spinor();
    if (validate_rim_base(psi).ok()) CHECK(classify(compute(psi)).cls == LounestoClass::Type1);
  }
}

TEST_CASE("restriction operator") {
  Bilinears b;
  b.norm2 = 1.0;
  b.J = {1.0, 0.0, 0.0, 0.5};
  const RestrictionOperator zero = restriction_operator(b);
  CHECK(max_abs(zero.G) == 0.0);

  for (const auto& v : oracle::fixed()) {
    const RestrictionOperator r = restriction_operator(compute(support::from_oracle(v)));
    CHECK(std::abs(r.G.trace()) < 1e-13);
    CHECK(r.mismatch < 1e-13);
  }
  Bilinears null;
  null.norm2 = 1.0;
  CHECK(kind_of([&] { (void)restriction_operator(null); }) == ErrorKind::NullCurrent);
}
