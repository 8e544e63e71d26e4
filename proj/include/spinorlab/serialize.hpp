#pragma once

// JSON and CSV I/O.
//
//   spinor   {"re": [4 numbers], "im": [4 numbers]} (optional "id")
//   complex  {"re": x, "im": y}
//   params   {"a": complex, "b": complex}
//   momentum {"m": .., "p": .., "theta": .., "phi": ..}
//   coeffs   {"base": spinor, "M": .., "m": .., "theta": .., "sign": "+" | "-"}
//
// Doubles are written in shortest round-trip form, so a dump/parse cycle is
// bit exact. CSV corpora carry 8 columns per row: re0,im0,re1,im1,...

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>  // vendored nlohmann/json

#include "bilinear.hpp"
#include "lounesto.hpp"
#include "mdo.hpp"
#include "plane.hpp"

namespace spinorlab {

using json = nlohmann::json;

namespace io {

inline json to_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

inline json to_json(const Spinor& s) {
  json re = json::array(), im = json::array();
  for (int i = 0; i < 4; ++i) {
    re.push_back(s[i].real());
    im.push_back(s[i].imag());
  }
  return {{"re", re}, {"im", im}};
}

inline json to_json(const Momentum& m) { return {{"m", m.m}, {"p", m.p}, {"theta", m.theta}, {"phi", m.phi}}; }

inline json to_json(const RimParams& p) {
  return {{"a", to_json(p.a)}, {"b", to_json(p.b)}, {"s", p.s}, {"rho", p.rho}, {"domain", to_string(p.domain)}};
}

inline json to_json(const PlaneCoords& c) {
  return {{"r1", to_json(c.r1)}, {"r2", to_json(c.r2)}, {"basis", to_string(c.basis)}};
}

inline json to_json(const FourVector& v) {
  json out = json::array();
  for (const cplx& x : v) out.push_back(to_json(x));
  return out;
}

/// Real parts only; for Dirac-dual bilinears the imaginary parts are noise.
inline json real_parts(const FourVector& v) {
  json out = json::array();
  for (const cplx& x : v) out.push_back(x.real());
  return out;
}

inline json to_json(const FpkResiduals& r) {
  return {{"norm_identity", r.norm_identity},
          {"bivector_identity", r.bivector_identity},
          {"orthogonality", r.orthogonality},
          {"opposite_norm", r.opposite_norm}};
}

inline json bivector_json(const Bivector& S, bool real_only) {
  json out = json::object();
  for (const auto& [mu, nu] : kBivectorPairs) {
    const cplx v = S[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
    const std::string key = std::to_string(mu) + std::to_string(nu);
    out[key] = real_only ? json(v.real()) : to_json(v);
  }
  return out;
}

inline json to_json(const Bilinears& b) {
  const bool real_only = b.dual == DualKind::Dirac;
  json out;
  if (real_only) {
    out["A"] = b.A.real();
    out["B"] = b.B.real();
    out["J"] = real_parts(b.J);
    out["K"] = real_parts(b.K);
  } else {
    out["A"] = to_json(b.A);
    out["B"] = to_json(b.B);
    out["J"] = to_json(b.J);
    out["K"] = to_json(b.K);
  }
  out["S"] = bivector_json(b.S, real_only);
  out["dual"] = b.dual == DualKind::Dirac ? "dirac" : "mdo";
  return out;
}

/// Thrown for schema problems; the message names the offending field.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what) : Error(ErrorKind::InvalidInput, what) {}
};

inline double number_at(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(where + ": missing field '" + key + "'");
  const json& v = j.at(key);
  if (!v.is_number()) throw SchemaError(where + "." + key + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw SchemaError(where + "." + key + ": not finite");
  return d;
}

inline cplx complex_from(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  return {number_at(j, "re", where), number_at(j, "im", where)};
}

inline Spinor spinor_from(const json& j, const std::string& where = "spinor") {
  if (!j.is_object()) throw SchemaError(where + ": expected an object with 're' and 'im'");
  const auto arr = [&](const char* key) {
    if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != 4)
      throw SchemaError(where + "." + key + ": expected an array of 4 numbers");
    std::array<double, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) {
      const json& v = j.at(key).at(i);
      if (!v.is_number()) throw SchemaError(where + "." + key + "[" + std::to_string(i) + "]: expected a number");
      out[i] = v.get<double>();
      if (!std::isfinite(out[i])) throw SchemaError(where + "." + key + "[" + std::to_string(i) + "]: not finite");
    }
    return out;
  };
  const auto re = arr("re"), im = arr("im");
  Spinor s;
  for (int i = 0; i < 4; ++i) s[i] = {re[static_cast<std::size_t>(i)], im[static_cast<std::size_t>(i)]};
  return s;
}

inline RimParams params_from(const json& j, const std::string& where = "params") {
  if (!j.is_object() || !j.contains("a") || !j.contains("b"))
    throw SchemaError(where + ": expected fields 'a' and 'b'");
  return validate(complex_from(j.at("a"), where + ".a"), complex_from(j.at("b"), where + ".b"));
}

inline Momentum momentum_from(const json& j, const std::string& where = "momentum") {
  Momentum m{number_at(j, "m", where), number_at(j, "p", where), number_at(j, "theta", where),
             number_at(j, "phi", where)};
  m.check();
  return m;
}

inline Sign sign_from(const json& j, const std::string& where) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "+") return Sign::Plus;
    if (s == "-") return Sign::Minus;
  } else if (j.is_number()) {
    const double v = j.get<double>();
    if (v == 1.0) return Sign::Plus;
    if (v == -1.0) return Sign::Minus;
  }
  throw SchemaError(where + ": expected \"+\" or \"-\"");
}

struct CoefficientInputs {
  Spinor base;
  double M_dirac = 0.0;
  double m_mdo = 0.0;
  double theta = 0.0;
  Sign sign = Sign::Plus;
};

inline CoefficientInputs coefficient_inputs_from(const json& j, const std::string& where = "coeffs") {
  if (!j.is_object() || !j.contains("base")) throw SchemaError(where + ": missing field 'base'");
  CoefficientInputs c;
  c.base = spinor_from(j.at("base"), where + ".base");
  c.M_dirac = number_at(j, "M", where);
  c.m_mdo = number_at(j, "m", where);
  c.theta = number_at(j, "theta", where);
  c.sign = j.contains("sign") ? sign_from(j.at("sign"), where + ".sign") : Sign::Plus;
  return c;
}

struct NamedSpinor {
  std::string id;
  Spinor spinor;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

inline json load_json(const std::string& path) { return parse_json(read_file(path), path); }

/// Rows of 8 numbers; blank lines, '#' comments and a non-numeric header are
/// skipped.
inline std::vector<NamedSpinor> spinors_from_csv(const std::string& text, const std::string& where) {
  std::vector<NamedSpinor> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    std::vector<double> vals;
    bool numeric = true;
    for (const auto& c : cells) {
      try {
        std::size_t used = 0;
        const double v = std::stod(c, &used);
        if (c.find_first_not_of(" \t", used) != std::string::npos) numeric = false;
        vals.push_back(v);
      } catch (const std::exception&) {
        numeric = false;
      }
      if (!numeric) break;
    }
    if (!numeric && first_content) {
      first_content = false;
      continue;
    }
    first_content = false;
    const std::string loc = where + ":" + std::to_string(line_no);
    if (!numeric) throw SchemaError(loc + ": non-numeric cell");
    if (vals.size() != 8) throw SchemaError(loc + ": expected 8 columns, got " + std::to_string(vals.size()));
    Spinor s;
    for (int i = 0; i < 4; ++i) {
      const auto k = static_cast<std::size_t>(2 * i);
      if (!std::isfinite(vals[k]) || !std::isfinite(vals[k + 1])) throw SchemaError(loc + ": not finite");
      s[i] = {vals[k], vals[k + 1]};
    }
    out.push_back({"row" + std::to_string(out.size()), s});
  }
  return out;
}

/// A single spinor object, an array of them, or {"spinors": [...]}. Ids default
/// to the position in the input.
inline std::vector<NamedSpinor> spinors_from_json(const json& j, const std::string& where) {
  const json* list = &j;
  json single;
  if (j.is_object() && j.contains("spinors")) {
    list = &j.at("spinors");
  } else if (j.is_object()) {
    single = json::array({j});
    list = &single;
  }
  if (!list->is_array()) throw SchemaError(where + ": expected a spinor, an array, or {\"spinors\": [...]}");
  std::vector<NamedSpinor> out;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const json& item = list->at(i);
    const std::string loc = where + "[" + std::to_string(i) + "]";
    NamedSpinor n{"#" + std::to_string(i), spinor_from(item, loc)};
    if (item.contains("id")) n.id = item.at("id").is_string() ? item.at("id").get<std::string>() : item.at("id").dump();
    out.push_back(std::move(n));
  }
  return out;
}

inline bool looks_like_csv(const std::string& path, const std::string& text) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) return true;
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] != '{' && text[pos] != '[';
}

inline std::vector<NamedSpinor> load_spinors(const std::string& path) {
  const std::string text = read_file(path);
  if (looks_like_csv(path, text)) return spinors_from_csv(text, path);
  return spinors_from_json(parse_json(text, path), path);
}

inline Spinor load_spinor(const std::string& path) {
  auto all = load_spinors(path);
  if (all.size() != 1) throw SchemaError(path + ": expected exactly one spinor, found " + std::to_string(all.size()));
  return all.front().spinor;
}

}  // namespace io
}  // namespace spinorlab
