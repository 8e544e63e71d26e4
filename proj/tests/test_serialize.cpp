#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace spinorlab;

TEST_CASE("spinor JSON roundtrip is bit exact") {
  CounterRng rng(77, 0);
  for (int trial = 0; trial < 500; ++trial) {
    Spinor psi = rng.spinor();
    psi[trial % 4] *= std::pow(10.0, rng.uniform(-200.0, 200.0));
    const std::string text = io::to_json(psi).dump();
    const Spinor back = io::spinor_from(json::parse(text));
    CHECK(back == psi);
  }
}

TEST_CASE("dumping is deterministic") {
  const Spinor psi = support::from_oracle(oracle::fixed()[0]);
  CHECK(io::to_json(compute(psi)).dump() == io::to_json(compute(psi)).dump());
}

TEST_CASE("Dirac-dual bilinears are written as reals") {
  const json j = io::to_json(compute(Spinor(1.0, 0.0, 0.0, 0.0)));
  CHECK(j.at("A").is_number());
  CHECK(j.at("J").at(0).get<double>() == 1.0);
  CHECK(j.at("S").contains("03"));
  CHECK(j.at("dual") == "dirac");
}

TEST_CASE("spinor lists in each accepted layout") {
  const json one = json::parse(R"({"re": [1, 0, 0, 0], "im": [0, 0, 0, 0]})");
  CHECK(io::spinors_from_json(one, "x").size() == 1);
  const json arr = json::parse(R"([{"re": [1, 0, 0, 0], "im": [0, 0, 0, 0]}, {"id": "b", "re": [0, 1, 0, 0], "im": [0, 0, 0, 1]}])");
  const auto list = io::spinors_from_json(arr, "x");
  REQUIRE(list.size() == 2);
  CHECK(list[0].id == "#0");
  CHECK(list[1].id == "b");
  CHECK(list[1].spinor[3] == kI);
  const json wrapped = json{{"spinors", arr}};
  CHECK(io::spinors_from_json(wrapped, "x").size() == 2);
}

TEST_CASE("CSV rows") {
  const std::string text = "# comment\nre0,im0,re1,im1,re2,im2,re3,im3\n\n1,0,0,0,0,0,0,2\r\n0.5,0.5,0,0,0,0,0,0\n";
  const auto rows = io::spinors_from_csv(text, "mem");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].id == "row0");
  CHECK(rows[0].spinor[3] == 2.0 * kI);
  CHECK(rows[1].spinor[0] == cplx(0.5, 0.5));
  CHECK_THROWS_AS(io::spinors_from_csv("1,2,3\n", "mem"), io::SchemaError);
  CHECK_THROWS_AS(io::spinors_from_csv("1,0,0,0,0,0,0,0\n1,0,0,0,0,0,0,x\n", "mem"), io::SchemaError);
}

TEST_CASE("schema errors name the field") {
  const auto message = [](const json& j) {
    try {
      (void)io::spinor_from(j, "input");
    } catch (const io::SchemaError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(json::parse(R"({"re": [1, 0, 0], "im": [0, 0, 0, 0]})")).find("input.re") != std::string::npos);
  CHECK(message(json::parse(R"({"re": [1, 0, 0, 0], "im": [0, "x", 0, 0]})")).find("input.im[1]") != std::string::npos);
  CHECK(message(json::parse(R"([1, 2])")).find("input") != std::string::npos);
  CHECK_THROWS_AS(io::parse_json("{", "mem"), io::SchemaError);
}

TEST_CASE("parameter, momentum and coefficient readers") {
  const RimParams p = io::params_from(json::parse(R"({"a": {"re": 0.5, "im": 1}, "b": {"re": 0.5, "im": -1}})"));
  CHECK(p.s == -1.0);
  CHECK_THROWS_AS(io::params_from(json::parse(R"({"a": 1})")), Error);
  try {
    (void)io::params_from(json::parse(R"({"a": {"re": 0.3, "im": 1}, "b": {"re": 0.4, "im": 1}})"));
    FAIL("expected IntegrabilityViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IntegrabilityViolation);
  }
  const Momentum m = io::momentum_from(json::parse(R"({"m": 1, "p": 0.3, "theta": 1, "phi": 0.4})"));
  CHECK(m.p == 0.3);
  CHECK_THROWS_AS(io::momentum_from(json::parse(R"({"m": -1, "p": 0.3, "theta": 1, "phi": 0.4})")), Error);
  const auto c = io::coefficient_inputs_from(
      json::parse(R"({"base": {"re": [1, 0, 0, 0], "im": [0, 0, 0, 0]}, "M": 1, "m": 2, "theta": 0.5, "sign": "-"})"));
  CHECK(c.sign == Sign::Minus);
  CHECK(c.m_mdo == 2.0);
  CHECK_THROWS_AS(io::sign_from(json("x"), "sign"), io::SchemaError);
}

TEST_CASE("missing files are reported") {
  CHECK_THROWS_AS(io::load_spinors("/nonexistent/path.json"), io::SchemaError);
}
