#include <catch_amalgamated.hpp>

#include <limits>

#include "support.hpp"

using namespace spinorlab;

namespace {

Spinor scaled_base(const Spinor& base, cplx r1, cplx r2) { return compose({r1, r2}, base); }

}  // namespace

TEST_CASE("generic bilinears agree with the oracle on fixed spinors") {
  for (const auto& v : oracle::fixed()) {
    const Bilinears b = compute(support::from_oracle(v));
    CHECK(support::bilinear_diff(b, oracle::bilinears(v)) < 1e-14);
    CHECK(b.A1 + b.A2 == b.A);
    CHECK(std::abs(b.B - kI * (b.A2 - b.A1)) < 1e-15);
  }
}

TEST_CASE("generic bilinears agree with the oracle on random spinors") {
  CounterRng rng(11, 3);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const Spinor psi = rng.spinor();
    worst = std::max(worst, support::bilinear_diff(compute(psi), oracle::bilinears(support::to_oracle(psi))));
  }
  CHECK(worst < 1e-14);
}

TEST_CASE("J^0 is the squared norm") {
  for (const auto& v : oracle::fixed()) {
    const Spinor psi = support::from_oracle(v);
    CHECK(std::abs(compute(psi).J[0] - psi.norm2()) < 1e-15);
  }
}

TEST_CASE("component formulas match the generic route") {
  CounterRng rng(5, 9);
  for (int trial = 0; trial < 500; ++trial) {
    const Spinor base = rng.spinor();
    const cplx r1 = rng.complex(-2.0, 2.0), r2 = rng.complex(-2.0, 2.0);
    const Spinor psi = scaled_base(base, r1, r2);
    const FastBilinears f = compute_fast(base, r1, r2);
    const oracle::Bil o = oracle::bilinears(support::to_oracle(psi));
    CHECK(fast_mismatch(f, compute(psi)) < 1e-12);
    CHECK(std::abs(f.A - o.A) < 1e-12);
    CHECK(std::abs(f.B - o.B) < 1e-12);
    CHECK(std::abs(*f.K[0] - o.K[0]) < 1e-12);
    for (const auto& [mu, nu] : kBivectorPairs)
      CHECK(std::abs(f.s(mu, nu) - o.S[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)]) < 1e-12);
    CHECK_FALSE(f.K[1].has_value());
  }
}

TEST_CASE("S^03 needs the corrected sign inside its second bracket") {
  // The variant with +y in front of (p11* p21 - p12* p22) is -i S^12, not S^03.
  const Spinor base = support::from_oracle(oracle::fixed()[3]);
  const cplx r1(0.8, 0.3), r2(-0.4, 1.1);
  const cplx p11 = base[0], p12 = base[1], p21 = base[2], p22 = base[3];
  const cplx x = r1 * std::conj(r2), y = std::conj(r1) * r2;
  const cplx variant =
      -kI * (x * (std::conj(p21) * p11 - std::conj(p22) * p12) - y * (-std::conj(p11) * p21 + std::conj(p12) * p22));
  const oracle::Bil o = oracle::bilinears(support::to_oracle(scaled_base(base, r1, r2)));
  CHECK(std::abs(variant + kI * o.S[1][2]) < 1e-14);
  CHECK(std::abs(variant - o.S[0][3]) > 1e-3);
  CHECK(std::abs(compute_fast(base, r1, r2).s(0, 3) - o.S[0][3]) < 1e-14);
}

TEST_CASE("scalar component formulas in terms of x and y") {
  const Spinor base = support::from_oracle(oracle::fixed()[6]);
  const cplx r1(0.2, -0.9), r2(1.3, 0.4);
  const cplx p11 = base[0], p12 = base[1], p21 = base[2], p22 = base[3];
  const cplx x = r1 * std::conj(r2), y = std::conj(r1) * r2;
  const cplx a1 = std::conj(p21) * p11 + std::conj(p22) * p12;
  const cplx a2 = std::conj(p11) * p21 + std::conj(p12) * p22;
  const oracle::Bil o = oracle::bilinears(support::to_oracle(scaled_base(base, r1, r2)));
  CHECK(std::abs(x * a1 + y * a2 - o.A) < 1e-14);
  CHECK(std::abs(kI * (-x * a1 + y * a2) - o.B) < 1e-14);
}

TEST_CASE("FPK identities hold for Dirac-dual bilinears") {
  CounterRng rng(3, 4);
  for (int trial = 0; trial < 500; ++trial) {
    const Spinor psi = rng.spinor();
    const Bilinears b = compute(psi);
    CHECK(fpk_residuals(b).max() / quartic_scale(b.norm2) < 1e-12);
  }
}

TEST_CASE("FPK residual detects a corrupted bilinear") {
  Bilinears b = compute(support::from_oracle(oracle::fixed()[1]));
  b.A += 0.1;
  CHECK(fpk_residuals(b).norm_identity > 1e-3);
}

TEST_CASE("Levi-Civita with lower indices") {
  CHECK(levi_civita_lower(0, 1, 2, 3) == -1.0);
  CHECK(levi_civita_lower(1, 0, 2, 3) == 1.0);
  CHECK(levi_civita_lower(1, 2, 3, 0) == 1.0);
  CHECK(levi_civita_lower(0, 0, 2, 3) == 0.0);
}

TEST_CASE("compute validates its inputs") {
  const Spinor psi(1.0, 0.0, 0.0, 0.0);
  const auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::BasisMismatch;  // sentinel: nothing thrown
  };
  CHECK(kind_of([&] { (void)compute(psi, DualKind::MDO); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { (void)compute(psi, DualKind::Dirac, Mat4::Identity()); }) == ErrorKind::InvalidInput);
  const Spinor bad(std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0, 0.0);
  CHECK(kind_of([&] { (void)compute(bad); }) == ErrorKind::InvalidInput);
}

TEST_CASE("MDO-dual bilinears use the supplied involution") {
  const Spinor psi = support::from_oracle(oracle::fixed()[2]);
  const Mat4 xi = gammas().gamma5;
  const Bilinears b = compute(psi, DualKind::MDO, xi);
  const oracle::V4 turned = oracle::act(oracle::gamma5(), support::to_oracle(psi));
  CHECK(std::abs(b.A - oracle::sandwich(turned, oracle::identity(), support::to_oracle(psi))) < 1e-15);
  CHECK(b.dual == DualKind::MDO);
}
