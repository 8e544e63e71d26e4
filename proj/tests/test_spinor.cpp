#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace spinorlab;

TEST_CASE("Dirac-dual scalars and currents are real") {
  for (const auto& v : oracle::fixed()) {
    const Spinor psi = support::from_oracle(v);
    const DualSpinor bar = dirac_dual(psi);
    const auto& g = gammas();
    CHECK(std::abs(bar(psi).imag()) < 1e-15);
    CHECK(std::abs((kI * bar(g.gamma5, psi)).imag()) < 1e-15);
    for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(bar(g[mu], psi).imag()) < 1e-15);
  }
}

TEST_CASE("the Dirac dual is conjugate-linear") {
  const Spinor psi = support::from_oracle(oracle::fixed()[0]);
  const cplx c(0.3, -1.2);
  const DualSpinor scaled = dirac_dual(c * psi);
  const DualSpinor base = dirac_dual(psi);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(scaled[i] - std::conj(c) * base[i]) < 1e-15);
}

TEST_CASE("chiral parts recombine exactly") {
  for (const auto& v : oracle::fixed()) {
    const Spinor psi = support::from_oracle(v);
    const auto [one, two] = chiral_parts(psi);
    CHECK(one + two == psi);
    CHECK(one[2] == 0.0);
    CHECK(two[0] == 0.0);
    CHECK(projector(Block::One) * psi == one);
  }
}

TEST_CASE("block accessors") {
  const Spinor psi(1.0, 2.0, 3.0, 4.0);
  CHECK(psi.top()(1) == 2.0);
  CHECK(psi.bottom()(0) == 3.0);
  CHECK(Spinor::from_blocks(psi.top(), psi.bottom()) == psi);
  CHECK(psi.norm2() == 30.0);
}

TEST_CASE("the MDO dual rejects a non-involutive Xi") {
  const Spinor psi(1.0, 0.0, 0.0, 0.0);
  const Mat4 bad = 2.0 * Mat4::Identity();
  try {
    (void)mdo_dual(psi, bad);
    FAIL("expected DegenerateXi");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateXi);
  }
  const Mat4 g5 = gammas().gamma5;
  const DualSpinor d = mdo_dual(psi, g5);
  const DualSpinor want = dirac_dual(g5 * psi);
  for (int i = 0; i < 4; ++i) CHECK(d[i] == want[i]);
}

TEST_CASE("error messages carry the kind name") {
  const Error e(ErrorKind::NullCurrent, "J vanishes");
  CHECK(std::string(e.what()) == "NullCurrent: J vanishes");
}
