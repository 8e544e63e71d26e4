// Batch front-end. Every command writes one JSON document (stdout unless
// --output is given). Exit codes: 0 ok, 1 near-degenerate classification,
// 2 invalid input, 3 identity-suite failure.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "spinorlab/spinorlab.hpp"

namespace {

using namespace spinorlab;
using spinorlab::json;

enum Exit { kOk = 0, kNearDegenerate = 1, kInvalidInput = 2, kSuiteFailure = 3 };

double default_tol() {
  const char* env = std::getenv("SPINORLAB_TOL");
  if (!env || !*env) return kDefaultTol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
    throw Error(ErrorKind::InvalidInput, std::string("SPINORLAB_TOL is not a positive number: ") + env);
  return v;
}

json error_json(const Error& e) { return {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}; }

int classify_code(const Classification& c) { return c.near_degenerate ? kNearDegenerate : kOk; }

json classification_json(const Classification& c) {
  return {{"lounesto_class", c.type()}, {"regular", c.regular()}, {"near_degenerate", c.near_degenerate}};
}

struct Outcome {
  json report;
  int code = kOk;
};

Outcome cmd_classify(const std::string& input, double tol) {
  Outcome out;
  json rows = json::array();
  for (const auto& [id, psi] : io::load_spinors(input)) {
    json row{{"id", id}, {"spinor", io::to_json(psi)}};
    try {
      const Bilinears b = compute(psi);
      const Classification c = classify(b, {tol});
      row.update(classification_json(c));
      row["bilinears"] = io::to_json(b);
      row["fpk_residuals"] = io::to_json(fpk_residuals(b));
      out.code = std::max(out.code, classify_code(c));
    } catch (const Error& e) {
      row["error"] = error_json(e);
      out.code = kInvalidInput;
    }
    rows.push_back(std::move(row));
  }
  out.report = {{"command", "classify"}, {"tol", tol}, {"results", rows}};
  return out;
}

Outcome cmd_decompose(const std::string& input, const std::string& base_path, double tol) {
  Outcome out;
  const Spinor base = io::load_spinor(base_path);
  const Bilinears bb = compute(base);
  const BaseValidation valid = validate_base_bilinears(bb, tol);
  json reasons = json::array();
  for (auto r : valid.reasons) reasons.push_back(std::string(to_string(r)));

  json rows = json::array();
  for (const auto& [id, psi] : io::load_spinors(input)) {
    json row{{"id", id}};
    try {
      const PlaneCoords x = decompose(psi, base);
      row["coords"] = io::to_json(x);
      const Classification brute = classify(compute(psi), {tol});
      row.update(classification_json(brute));
      int code = classify_code(brute);
      if (valid.ok()) {
        const Classification fast = classify_by_coefficients(x.r1, x.r2, bb.A.real(), bb.B.real(), {tol});
        row["coefficient_class"] = fast.type();
        row["coefficient_near_degenerate"] = fast.near_degenerate;
        if (fast.near_degenerate) code = kNearDegenerate;
      }
      out.code = std::max(out.code, code);
    } catch (const Error& e) {
      row["error"] = error_json(e);
      out.code = kInvalidInput;
    }
    rows.push_back(std::move(row));
  }
  out.report = {{"command", "decompose"},
                {"tol", tol},
                {"base", {{"spinor", io::to_json(base)}, {"A", bb.A.real()}, {"B", bb.B.real()}, {"rim_valid", valid.ok()}, {"violations", reasons}}},
                {"results", rows}};
  return out;
}

json coefficients_json(const CoefficientSet& c, const ChiFactors& f) {
  return {{"alpha", io::to_json(c.alpha)}, {"beta", io::to_json(c.beta)},   {"delta", io::to_json(c.delta)},
          {"epsilon", io::to_json(c.epsilon)}, {"omega", io::to_json(c.omega)}, {"zeta", io::to_json(c.zeta)},
          {"chi1", io::to_json(f.chi1)},       {"chi2", io::to_json(f.chi2)}};
}

Outcome cmd_map(MapDirection dir, const std::string& params_path, const std::string& coeffs_path,
                const std::string& input, double tol) {
  const RimParams p = io::params_from(io::load_json(params_path), params_path);
  const auto in = io::coefficient_inputs_from(io::load_json(coeffs_path), coeffs_path);
  const CoefficientSet c = coefficient_set(p, compute(in.base), in.M_dirac, in.m_mdo, in.theta, in.sign, tol);
  const ChiFactors f = chi_factors(c);

  const bool forward = dir == MapDirection::DiracToMdo;
  const Spinor source = !input.empty() ? io::load_spinor(input) : forward ? dirac_from_base(in.base, c) : mdo_from_base(in.base, c);
  const Spinor image = map_dirac_mdo(source, c, dir);
  const MapDirection back = forward ? MapDirection::MdoToDirac : MapDirection::DiracToMdo;
  const double roundtrip = (map_dirac_mdo(image, c, back) - source).norm() / std::max(1.0, source.norm());

  // Distance to the image built directly from the base, up to a global phase.
  const Spinor reference = forward ? mdo_from_base(in.base, c) : dirac_from_base(in.base, c);
  const cplx overlap = reference.vec().dot(image.vec());
  const double phase = overlap == 0.0 ? 0.0 : std::arg(overlap);
  const double direct = (image - reference).norm() / std::max(1.0, reference.norm());
  const double up_to_phase = (image - std::polar(1.0, phase) * reference).norm() / std::max(1.0, reference.norm());

  Outcome out;
  out.report = {{"command", "map"},
                {"direction", std::string(to_string(dir))},
                {"params", io::to_json(p)},
                {"coefficients", coefficients_json(c, f)},
                {"input", io::to_json(source)},
                {"output", io::to_json(image)},
                {"roundtrip_residual", roundtrip},
                {"reference_residual", direct},
                {"residual_phase", phase},
                {"reference_residual_modulo_phase", up_to_phase}};
  return out;
}

Outcome cmd_homotopy(const std::string& from, const std::string& to, const std::string& base_path, int steps,
                     double tol) {
  if (steps < 1) throw Error(ErrorKind::InvalidInput, "--steps must be at least 1");
  const Spinor base = io::load_spinor(base_path);
  const PlaneCoords a = decompose(io::load_spinor(from), base);
  const PlaneCoords b = decompose(io::load_spinor(to), base);
  const HomotopyPath path = spinor_homotopy(a, b);
  const cplx x = a.r1;
  const ClassifyOptions opt{tol};

  Outcome out;
  json samples = json::array();
  for (int k = 0; k <= steps; ++k) {
    const double t = k == steps ? 1.0 : static_cast<double>(k) / steps;
    const PlaneCoords c = eval(path, x, t);
    json row{{"t", t}, {"coords", io::to_json(c)}};
    bool degenerate = path.degenerate_t && std::abs(t - *path.degenerate_t) <= 1e-12;
    try {
      const Classification cls = classify(compute(compose(c, base)), opt);
      row.update(classification_json(cls));
      if (cls.near_degenerate) out.code = std::max(out.code, int{kNearDegenerate});
    } catch (const Error& e) {
      row["lounesto_class"] = nullptr;
      row["error"] = error_json(e);
      degenerate = true;
    }
    row["degenerate"] = degenerate;
    samples.push_back(std::move(row));
  }

  // Class changes between consecutive samples, located by bisection on the
  // coefficient classifier. Needs a valid base.
  json transitions = nullptr;
  const Bilinears bb = compute(base);
  if (validate_base_bilinears(bb, tol).ok()) {
    transitions = json::array();
    for (int k = 0; k < steps; ++k) {
      const double lo = static_cast<double>(k) / steps;
      const double hi = k + 1 == steps ? 1.0 : static_cast<double>(k + 1) / steps;
      if (const auto tr = find_class_transition(path, x, bb.A.real(), bb.B.real(), lo, hi, opt)) {
        transitions.push_back({{"t_below", tr->t_below}, {"t_above", tr->t_above},
                               {"from_class", type_number(tr->before)}, {"to_class", type_number(tr->after)}});
      }
    }
  }
  out.report = {{"command", "homotopy"},
                {"tol", tol},
                {"steps", steps},
                {"from", io::to_json(a)},
                {"to", io::to_json(b)},
                {"degenerate_t", path.degenerate_t ? json(*path.degenerate_t) : json(nullptr)},
                {"transitions", transitions},
                {"samples", samples}};
  return out;
}

Outcome cmd_mdo(const std::string& momentum_path, Conjugation conj, Helicity h) {
  const Momentum mom = io::momentum_from(io::load_json(momentum_path), momentum_path);
  const ElkoSpinor lam = elko(mom, h, conj);
  const Mat4 x = xi(mom), ps = momentum_slash(mom);
  const DiracLike d = diraclike_residual(lam, mom);
  const auto app = chirality_residuals(lam, mom);
  const Bilinears dirac = compute(lam.spinor);
  const double c_eig = conj == Conjugation::S ? 1.0 : -1.0;

  Outcome out;
  out.report = {{"command", "mdo"},
                {"momentum", io::to_json(mom)},
                {"energy", mom.E()},
                {"conj", std::string(to_string(conj))},
                {"helicity", std::string(to_string(h))},
                {"top_sign", lam.sign == Sign::Plus ? "+i" : "-i"},
                {"spinor", io::to_json(lam.spinor)},
                {"xi_involution", max_abs(Mat4(x * x - Mat4::Identity()))},
                {"xi_commutator", max_abs(Mat4(x * ps - ps * x))},
                {"diraclike", {{"residual", d.residual}, {"eta", d.eta}, {"wrong_sign_residual", d.other}, {"matches_fixture", d.matches_fixture}}},
                {"chirality_residuals", app},
                {"charge_conjugation_residual", (charge_conjugate(lam.spinor) - c_eig * lam.spinor).norm()},
                {"dirac_dual", {{"A", io::to_json(dirac.A)}, {"B", io::to_json(dirac.B)}}},
                {"mdo_bilinears", io::to_json(mdo_bilinears(lam.spinor, mom))}};
  return out;
}

Outcome cmd_verify(const std::string& suite, std::size_t trials, std::uint64_t seed, double tol) {
  const verify::Config cfg{trials, seed, tol};
  const auto reports = verify::run(suite, cfg);
  Outcome out;
  out.report = verify::report_json(suite, cfg, reports);
  out.code = out.report.at("passed").get<bool>() ? kOk : kSuiteFailure;
  return out;
}

void emit(const json& report, const std::string& path) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write '" + path + "'");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spinor-plane toolkit: classification, decomposition, Dirac/MDO maps, homotopies, identity suites"};
  app.require_subcommand(1);

  std::string output;
  double tol_flag = 0.0;
  app.add_option("--output,-o", output, "Write the JSON report here instead of stdout");

  std::string input, base, params, coeffs, from, to, momentum;
  std::string direction, conj = "S", helicity = "+", suite;
  int steps = 10;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;

  auto* classify_cmd = app.add_subcommand("classify", "Lounesto class and bilinears of each spinor");
  classify_cmd->add_option("--input", input, "Spinor JSON or 8-column CSV")->required();
  classify_cmd->add_option("--tol", tol_flag, "Relative zero threshold")->check(CLI::PositiveNumber);

  auto* decompose_cmd = app.add_subcommand("decompose", "Spinor-plane coordinates against a base");
  decompose_cmd->add_option("--input", input)->required();
  decompose_cmd->add_option("--base", base)->required();
  decompose_cmd->add_option("--tol", tol_flag)->check(CLI::PositiveNumber);

  auto* map_cmd = app.add_subcommand("map", "Dirac <-> MDO map on the spinor-plane");
  map_cmd->add_option("--direction", direction)->required()->check(CLI::IsMember({"dirac-to-mdo", "mdo-to-dirac"}));
  map_cmd->add_option("--params", params, "{\"a\": .., \"b\": ..}")->required();
  map_cmd->add_option("--coeffs", coeffs, "{\"base\", \"M\", \"m\", \"theta\", \"sign\"}")->required();
  map_cmd->add_option("--input", input, "Spinor to map (defaults to the image of the base)");
  map_cmd->add_option("--tol", tol_flag)->check(CLI::PositiveNumber);

  auto* homotopy_cmd = app.add_subcommand("homotopy", "Straight-line homotopy between two plane spinors");
  homotopy_cmd->add_option("--from", from)->required();
  homotopy_cmd->add_option("--to", to)->required();
  homotopy_cmd->add_option("--base", base)->required();
  homotopy_cmd->add_option("--steps", steps)->check(CLI::PositiveNumber);
  homotopy_cmd->add_option("--tol", tol_flag)->check(CLI::PositiveNumber);

  auto* mdo_cmd = app.add_subcommand("mdo", "Build an Elko spinor and check its identities");
  mdo_cmd->add_option("--momentum", momentum, "{\"m\", \"p\", \"theta\", \"phi\"}")->required();
  mdo_cmd->add_option("--conj", conj)->check(CLI::IsMember({"S", "A"}));
  mdo_cmd->add_option("--helicity", helicity)->check(CLI::IsMember({"+", "-"}));

  auto* verify_cmd = app.add_subcommand("verify", "Randomized identity suites");
  std::vector<std::string> suites = verify::suite_names();
  suites.push_back("all");
  verify_cmd->add_option("--suite", suite)->required()->check(CLI::IsMember(suites));
  verify_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--tol", tol_flag)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    const double tol = tol_flag > 0.0 ? tol_flag : default_tol();
    Outcome out;
    if (*classify_cmd) {
      out = cmd_classify(input, tol);
    } else if (*decompose_cmd) {
      out = cmd_decompose(input, base, tol);
    } else if (*map_cmd) {
      out = cmd_map(*parse_direction(direction), params, coeffs, input, tol);
    } else if (*homotopy_cmd) {
      out = cmd_homotopy(from, to, base, steps, tol);
    } else if (*mdo_cmd) {
      out = cmd_mdo(momentum, conj == "S" ? Conjugation::S : Conjugation::A,
                    helicity == "+" ? Helicity::Plus : Helicity::Minus);
    } else if (*verify_cmd) {
      out = cmd_verify(suite, trials, seed, tol);
    }
    emit(out.report, output);
    return out.code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const json::exception& e) {
    std::cerr << "error: InvalidInput: " << e.what() << "\n";
    return kInvalidInput;
  }
}
