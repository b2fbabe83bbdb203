#include "nok/surface.hpp"

#include <map>
#include <set>

namespace nok {

Rational SurfaceModel::pair(const RVec& x, const RVec& y) const {
  if (x.size() != ns_gram.rows() || y.size() != ns_gram.rows())
    throw ContractError("SurfaceModel::pair: dimension mismatch");
  RVec gy = to_rational(ns_gram) * y;
  return x.dot(gy);
}

Int SurfaceModel::pair(const IVec& x, const IVec& y) const {
  IVec gy = ns_gram * y;
  Int acc(0);
  for (Eigen::Index i = 0; i < x.size(); ++i) acc += x(i) * gy(i);
  return acc;
}

const CurveRecord* SurfaceModel::find_curve(const std::string& label) const {
  for (const CurveRecord& c : curves)
    if (c.label == label) return &c;
  return nullptr;
}

int SurfaceModel::curve_index(const std::string& label) const {
  for (size_t i = 0; i < curves.size(); ++i)
    if (curves[i].label == label) return static_cast<int>(i);
  return -1;
}

std::vector<RVec> SurfaceModel::generator_classes() const {
  std::vector<RVec> out;
  out.reserve(generators.size());
  for (const GeneratorRecord& g : generators) out.push_back(to_rational(g.cls));
  return out;
}

std::vector<int> SurfaceModel::negative_curve_indices() const {
  std::vector<int> out;
  for (size_t i = 0; i < curves.size(); ++i)
    if (curves[i].negative()) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<std::string> validate_model(const SurfaceModel& model) {
  std::vector<std::string> problems;
  auto complain = [&](const std::string& msg) { problems.push_back(msg); };

  if (model.rho < 1) complain("rho must be at least 1");
  if (!is_symmetric(model.ns_gram)) complain("ns_gram is not symmetric");
  if (model.ns_gram.rows() != model.rho)
    complain("ns_gram size does not match rho");
  if (static_cast<int>(model.basis_labels.size()) != model.rho)
    complain("basis label count does not match rho");
  if (!problems.empty()) return problems;  // shape errors mask everything else

  const Signature sig = signature_of(model.ns_gram);
  if (sig.n_plus != 1 || sig.n_minus != model.rho - 1 || sig.n_zero != 0)
    complain("ns_gram signature is (" + std::to_string(sig.n_plus) + "," +
             std::to_string(sig.n_minus) + "," + std::to_string(sig.n_zero) +
             "), expected (1," + std::to_string(model.rho - 1) + ",0)");

  // one namespace of labels: basis, curves, generators must agree on classes
  std::map<std::string, IVec> classes;
  for (int i = 0; i < model.rho; ++i) {
    IVec unit = IVec::Zero(model.rho);
    unit(i) = Int(1);
    classes[model.basis_labels[static_cast<size_t>(i)]] = unit;
  }
  auto claim = [&](const std::string& label, const IVec& cls, const std::string& what) {
    auto [it, inserted] = classes.emplace(label, cls);
    if (!inserted && !exact_eq(it->second, cls))
      complain(what + " '" + label + "' conflicts with an earlier class for the same label");
  };

  std::set<std::string> curve_labels;
  for (const CurveRecord& c : model.curves) {
    if (!curve_labels.insert(c.label).second) complain("duplicate curve label '" + c.label + "'");
    if (c.cls.size() != model.rho) {
      complain("curve '" + c.label + "' class has wrong dimension");
      continue;
    }
    claim(c.label, c.cls, "curve");
    if (model.pair(c.cls, c.cls) != c.self_intersection)
      complain("curve '" + c.label + "' self-intersection does not match its class");
    if (!c.irreducible) complain("curve '" + c.label + "' is not asserted irreducible");
  }

  std::set<std::string> gen_labels;
  for (const GeneratorRecord& g : model.generators) {
    if (!gen_labels.insert(g.label).second)
      complain("duplicate generator label '" + g.label + "'");
    if (g.cls.size() != model.rho) {
      complain("generator '" + g.label + "' class has wrong dimension");
      continue;
    }
    claim(g.label, g.cls, "generator");
  }
  if (model.generators.empty()) complain("effective generator list is empty");
  if (!problems.empty()) return problems;

  // distinct listed irreducible curves meet nonnegatively
  for (size_t i = 0; i < model.curves.size(); ++i)
    for (size_t j = i + 1; j < model.curves.size(); ++j)
      if (model.pair(model.curves[i].cls, model.curves[j].cls) < 0)
        complain("curves '" + model.curves[i].label + "' and '" + model.curves[j].label +
                 "' have negative pairing");

  // every negative curve must be listed among the generators
  for (const CurveRecord& c : model.curves) {
    if (!c.negative()) continue;
    bool found = false;
    for (const GeneratorRecord& g : model.generators)
      if (exact_eq(g.cls, c.cls)) {
        found = true;
        break;
      }
    if (!found)
      complain("negative curve '" + c.label + "' is missing from the effective generators");
  }

  // every listed curve must be effective in the model's cone
  const std::vector<RVec> gens = model.generator_classes();
  for (const CurveRecord& c : model.curves)
    if (!cone_contains(gens, to_rational(c.cls)).member)
      complain("curve '" + c.label + "' is not in the cone of the declared generators");

  return problems;
}

void require_valid_model(const SurfaceModel& model) {
  const std::vector<std::string> problems = validate_model(model);
  if (problems.empty()) return;
  std::string joined = "invalid surface model '" + model.name + "':";
  for (const std::string& p : problems) joined += "\n  - " + p;
  throw DomainError(joined);
}

}  // namespace nok
