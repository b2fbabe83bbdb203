#include "nok/surface_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nok {

using json = nlohmann::ordered_json;

namespace {

Int int_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw ContractError(where + ": not an integer literal");
    }
  }
  throw ContractError(where + ": expected an integer (number or decimal string)");
}

json int_to_json(const Int& v) {
  static const Int lo = Int(std::numeric_limits<long long>::min());
  static const Int hi = Int(std::numeric_limits<long long>::max());
  if (v >= lo && v <= hi) return json(v.to_ll());
  return json(v.str());
}

IVec ivec_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw ContractError(where + ": expected an array of integers");
  IVec v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = int_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

IMat imat_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ContractError(where + ": expected an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  IMat m;
  for (Eigen::Index r = 0; r < rows; ++r) {
    IVec row = ivec_from_json(j[static_cast<size_t>(r)], where + "[" + std::to_string(r) + "]");
    if (r == 0)
      m = IMat(rows, row.size());
    else if (row.size() != m.cols())
      throw ContractError(where + ": ragged rows");
    m.row(r) = row.transpose();
  }
  return m;
}

json ivec_to_json(const IVec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(int_to_json(v(i)));
  return a;
}

json imat_to_json(const IMat& m) {
  json a = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) a.push_back(ivec_to_json(m.row(r).transpose()));
  return a;
}

FibreSpec fibre_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("type"))
    throw ContractError(where + ": fibre needs a \"type\"");
  const std::string type = j["type"].get<std::string>();
  FibreSpec f;
  if (type == "III") {
    f.kind = FibreSpec::Kind::III;
    f.m = 2;
  } else if (type == "I") {
    f.kind = FibreSpec::Kind::I;
    if (!j.contains("m")) throw ContractError(where + ": fibre type \"I\" needs \"m\"");
    f.m = j["m"].get<int>();
  } else if (type.size() > 1 && type[0] == 'I' &&
             std::all_of(type.begin() + 1, type.end(), [](char c) { return std::isdigit(c); })) {
    f.kind = FibreSpec::Kind::I;
    f.m = std::stoi(type.substr(1));
  } else {
    throw ContractError(where + ": unknown fibre type '" + type + "'");
  }
  return f;
}

EllipticSurfaceSpec elliptic_from_json(const json& j) {
  EllipticSurfaceSpec spec;
  if (!j.is_object()) throw ContractError("elliptic: expected an object");
  if (!j.contains("chi")) throw ContractError("elliptic: missing \"chi\"");
  spec.chi = j["chi"].get<int>();
  spec.base_genus = j.value("base_genus", 0);
  if (j.contains("fibres"))
    for (size_t i = 0; i < j["fibres"].size(); ++i)
      spec.fibres.push_back(
          fibre_from_json(j["fibres"][i], "elliptic.fibres[" + std::to_string(i) + "]"));
  if (j.contains("sections")) {
    for (size_t i = 0; i < j["sections"].size(); ++i) {
      const json& s = j["sections"][i];
      const std::string where = "elliptic.sections[" + std::to_string(i) + "]";
      SectionData sd;
      if (!s.contains("label")) throw ContractError(where + ": missing \"label\"");
      sd.label = s["label"].get<std::string>();
      sd.pairing_with_zero = s.value("pairing_with_zero", 0);
      sd.torsion = s.value("torsion", false);
      if (s.contains("pairwise"))
        for (const auto& [other, v] : s["pairwise"].items())
          sd.pairing_with[other] = v.get<int>();
      spec.sections.push_back(std::move(sd));
    }
  }
  if (j.contains("rho")) spec.declared_rho = j["rho"].get<int>();
  return spec;
}

}  // namespace

EllipticSurfaceSpec parse_elliptic_spec(const std::string& text) {
  json j = json::parse(text);
  return elliptic_from_json(j.contains("elliptic") ? j["elliptic"] : j);
}

SurfaceModel model_from_elliptic(const std::string& name, const EllipticSurfaceSpec& spec) {
  const NSModel ns = build_ns(spec);
  SurfaceModel model;
  model.name = name;
  model.rho = static_cast<int>(ns.lattice.rank());
  model.ns_gram = ns.lattice.gram;
  model.basis_labels = ns.lattice.labels;

  auto self_int = [&](const IVec& cls) { return ns.lattice.norm(cls); };
  auto add_curve = [&](const std::string& label, const IVec& cls) {
    model.curves.push_back(CurveRecord{label, cls, self_int(cls), true});
  };

  add_curve("O", ns.cls("O"));
  int fibre_index = 0;
  for (const FibreSpec& f : spec.fibres) {
    if (!f.reducible()) continue;
    ++fibre_index;
    add_curve("Theta" + std::to_string(fibre_index) + "_0",
              ns.cls("Theta" + std::to_string(fibre_index) + "_0"));
    add_curve("Theta" + std::to_string(fibre_index) + "_1",
              ns.cls("Theta" + std::to_string(fibre_index) + "_1"));
  }
  for (const SectionData& s : spec.sections) add_curve(s.label, ns.cls(s.label));

  for (const CurveRecord& c : model.curves)
    model.generators.push_back(GeneratorRecord{c.label, c.cls});
  model.generators.push_back(GeneratorRecord{"F", ns.cls("F")});

  require_valid_model(model);
  return model;
}

ParseResult parse_surface(const std::string& text) {
  ParseResult out;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    out.diagnostics.push_back({"byte " + std::to_string(e.byte), e.what()});
    return out;
  }
  if (!j.is_object()) {
    out.diagnostics.push_back({"/", "top level must be an object"});
    return out;
  }

  const std::string name = j.value("name", std::string("surface"));

  if (j.contains("elliptic")) {
    for (const char* key : {"rho", "ns_gram", "basis", "curves", "effective_generators"})
      if (j.contains(key))
        out.diagnostics.push_back(
            {std::string("/") + key, "must be absent when an elliptic block generates the model"});
    if (!out.diagnostics.empty()) return out;
    try {
      out.model = model_from_elliptic(name, elliptic_from_json(j["elliptic"]));
    } catch (const Error& e) {
      out.diagnostics.push_back({"/elliptic", e.what()});
    }
    return out;
  }

  SurfaceModel model;
  model.name = name;
  try {
    if (!j.contains("rho") || !j.contains("ns_gram") || !j.contains("basis"))
      throw ContractError("required keys: rho, ns_gram, basis");
    model.rho = j["rho"].get<int>();
    model.ns_gram = imat_from_json(j["ns_gram"], "/ns_gram");
    for (const auto& b : j["basis"]) model.basis_labels.push_back(b.get<std::string>());
  } catch (const std::exception& e) {
    out.diagnostics.push_back({"/", e.what()});
    return out;
  }

  if (j.contains("curves")) {
    for (size_t i = 0; i < j["curves"].size(); ++i) {
      const std::string where = "/curves[" + std::to_string(i) + "]";
      try {
        const json& c = j["curves"][i];
        CurveRecord rec;
        rec.label = c.at("label").get<std::string>();
        rec.cls = ivec_from_json(c.at("class"), where + ".class");
        rec.self_intersection = int_from_json(c.at("self_intersection"), where);
        rec.irreducible = c.value("irreducible", true);
        model.curves.push_back(std::move(rec));
      } catch (const std::exception& e) {
        out.diagnostics.push_back({where, e.what()});
      }
    }
  }

  if (j.contains("effective_generators")) {
    for (size_t i = 0; i < j["effective_generators"].size(); ++i) {
      const std::string where = "/effective_generators[" + std::to_string(i) + "]";
      const json& g = j["effective_generators"][i];
      try {
        if (g.is_string()) {
          const std::string label = g.get<std::string>();
          const CurveRecord* c = nullptr;
          for (const CurveRecord& cr : model.curves)
            if (cr.label == label) c = &cr;
          if (!c) throw ContractError("generator references unknown curve '" + label + "'");
          model.generators.push_back(GeneratorRecord{label, c->cls});
        } else {
          GeneratorRecord rec;
          rec.label = g.at("label").get<std::string>();
          rec.cls = ivec_from_json(g.at("class"), where + ".class");
          model.generators.push_back(std::move(rec));
        }
      } catch (const std::exception& e) {
        out.diagnostics.push_back({where, e.what()});
      }
    }
  }

  if (!out.diagnostics.empty()) return out;

  for (const std::string& problem : validate_model(model))
    out.diagnostics.push_back({"/", problem});
  if (out.diagnostics.empty()) out.model = std::move(model);
  return out;
}

ParseResult load_surface_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    ParseResult out;
    out.diagnostics.push_back({path, "cannot open file"});
    return out;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  ParseResult out = parse_surface(buf.str());
  for (Diagnostic& d : out.diagnostics) d.where = path + ":" + d.where;
  return out;
}

std::string serialize_model(const SurfaceModel& model) {
  json j;
  j["name"] = model.name;
  j["rho"] = model.rho;
  j["basis"] = model.basis_labels;
  j["ns_gram"] = imat_to_json(model.ns_gram);
  j["curves"] = json::array();
  for (const CurveRecord& c : model.curves) {
    json cj;
    cj["label"] = c.label;
    cj["class"] = ivec_to_json(c.cls);
    cj["self_intersection"] = int_to_json(c.self_intersection);
    cj["irreducible"] = c.irreducible;
    j["curves"].push_back(cj);
  }
  j["effective_generators"] = json::array();
  for (const GeneratorRecord& g : model.generators) {
    const CurveRecord* c = model.find_curve(g.label);
    if (c && exact_eq(c->cls, g.cls)) {
      j["effective_generators"].push_back(g.label);
    } else {
      json gj;
      gj["label"] = g.label;
      gj["class"] = ivec_to_json(g.cls);
      j["effective_generators"].push_back(gj);
    }
  }
  return j.dump(2) + "\n";
}

std::string serialize_lattice(const Lattice& l) {
  json j;
  j["name"] = l.name;
  j["rank"] = static_cast<int>(l.rank());
  j["gram"] = imat_to_json(l.gram);
  j["labels"] = l.labels;
  return j.dump(2) + "\n";
}

Lattice parse_lattice(const std::string& text) {
  json j = json::parse(text);
  IMat gram = imat_from_json(j.at("gram"), "/gram");
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
  else
    for (Eigen::Index i = 0; i < gram.rows(); ++i) labels.push_back("b" + std::to_string(i + 1));
  if (j.contains("rank") && j["rank"].get<Eigen::Index>() != gram.rows())
    throw ContractError("lattice: declared rank does not match the Gram matrix");
  return make_lattice(j.value("name", std::string("L")), std::move(gram), std::move(labels));
}

std::string serialize_ns_model(const NSModel& ns) {
  json j;
  j["lattice"] = json::parse(serialize_lattice(ns.lattice));
  j["distinguished"] = json::object();
  for (const auto& [label, cls] : ns.distinguished) j["distinguished"][label] = ivec_to_json(cls);
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// divisor expressions

namespace {

struct ExprCursor {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ContractError("divisor expression: " + msg + " at offset " + std::to_string(pos) +
                        " in '" + std::string(text) + "'");
  }

  Int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    return Int(std::string(text.substr(start, pos - start)));
  }

  std::string identifier() {
    skip_ws();
    size_t start = pos;
    auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (pos >= text.size() || !head(text[pos])) fail("expected a label");
    ++pos;
    while (pos < text.size() && tail(text[pos])) ++pos;
    return std::string(text.substr(start, pos - start));
  }
};

}  // namespace

DivisorExpr parse_divisor_expr(const std::string& text) {
  ExprCursor cur{text};
  DivisorExpr expr;
  if (cur.done()) cur.fail("empty expression");

  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    const char op = cur.peek();
    if (op == '+' || op == '-') {
      ++cur.pos;
      sign = op == '-' ? -1 : 1;
    } else if (!first) {
      cur.fail("expected '+' or '-' between terms");
    }
    if (cur.done()) cur.fail("dangling operator");

    Rational coeff(1);
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      const Int num = cur.integer();
      if (cur.peek() == '/') {
        ++cur.pos;
        const Int den = cur.integer();
        if (den == 0) cur.fail("zero denominator");
        coeff = Rational(num, den);
      } else {
        coeff = Rational(num);
      }
      if (cur.peek() == '*') ++cur.pos;
    }
    const std::string label = cur.identifier();
    expr.terms.emplace_back(label, sign < 0 ? -coeff : coeff);
    first = false;
  }
  return expr;
}

std::string print_divisor_expr(const DivisorExpr& expr) {
  std::string out;
  for (size_t i = 0; i < expr.terms.size(); ++i) {
    const auto& [label, coeff] = expr.terms[i];
    const Rational mag = abs(coeff);
    if (i == 0) {
      if (coeff.sign() < 0) out += "-";
    } else {
      out += coeff.sign() < 0 ? " - " : " + ";
    }
    if (!(mag == Rational(1))) out += mag.str() + " ";
    out += label;
  }
  return out;
}

RVec resolve_divisor(const SurfaceModel& model, const DivisorExpr& expr) {
  RVec acc = RVec::Zero(model.rho);
  for (const auto& [label, coeff] : expr.terms) {
    IVec cls;
    bool found = false;
    for (int i = 0; i < model.rho; ++i)
      if (model.basis_labels[static_cast<size_t>(i)] == label) {
        cls = IVec::Zero(model.rho);
        cls(i) = Int(1);
        found = true;
      }
    if (!found) {
      if (const CurveRecord* c = model.find_curve(label)) {
        cls = c->cls;
        found = true;
      }
    }
    if (!found) {
      for (const GeneratorRecord& g : model.generators)
        if (g.label == label) {
          cls = g.cls;
          found = true;
          break;
        }
    }
    if (!found)
      throw ContractError("divisor expression: unknown label '" + label + "' in model '" +
                          model.name + "'");
    acc += to_rational(cls) * coeff;
  }
  return acc;
}

RVec parse_divisor(const SurfaceModel& model, const std::string& text) {
  return resolve_divisor(model, parse_divisor_expr(text));
}

DivisorClass parse_divisor_class(const SurfaceModel& model, const std::string& text) {
  return DivisorClass{parse_divisor(model, text), text};
}

}  // namespace nok
