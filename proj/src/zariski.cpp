#include "nok/zariski.hpp"

#include <sstream>

namespace nok {

namespace {

std::string divisor_str(const SurfaceModel& model, const RVec& d) {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (d(i).is_zero()) continue;
    os << (first ? "" : " + ") << d(i).str() << "·" << model.basis_labels[static_cast<size_t>(i)];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

bool is_pseudo_effective(const SurfaceModel& model, const RVec& d) {
  if (d.size() != model.rho) throw ContractError("is_pseudo_effective: dimension mismatch");
  return cone_contains(model.generator_classes(), d).member;
}

ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const RVec& d) {
  if (d.size() != model.rho) throw ContractError("zariski_decompose: dimension mismatch");
  if (!is_pseudo_effective(model, d))
    throw DomainError("zariski_decompose: divisor " + divisor_str(model, d) +
                      " is not pseudo-effective in model '" + model.name + "'");

  std::vector<const CurveRecord*> negatives;
  for (int i : model.negative_curve_indices()) negatives.push_back(&model.curves[static_cast<size_t>(i)]);

  detail::FujitaCore<Rational> core = detail::fujita_iterate<Rational>(model.ns_gram, negatives, d);

  ZariskiDecomposition z;
  z.positive = core.positive;
  z.negative = RVec::Zero(model.rho);
  for (size_t i = 0; i < core.support.size(); ++i) {
    const Rational& a = core.coeffs[i];
    if (a.is_zero()) continue;
    const CurveRecord* c = negatives[static_cast<size_t>(core.support[i])];
    z.negative_coeffs.emplace_back(c->label, a);
    z.negative += to_rational(c->cls) * a;
  }

  // invariants: reconstruction, orthogonality, nefness against generators
  RVec recon = z.positive + z.negative;
  if (!exact_eq(recon, d)) throw Error("zariski_decompose: reconstruction failed");
  for (const auto& [label, a] : z.negative_coeffs) {
    const CurveRecord* c = model.find_curve(label);
    if (model.pair(z.positive, to_rational(c->cls)) != Rational(0))
      throw Error("zariski_decompose: positive part not orthogonal to '" + label + "'");
  }
  for (const GeneratorRecord& g : model.generators)
    if (model.pair(z.positive, to_rational(g.cls)).sign() < 0)
      throw DomainError("zariski_decompose: model inconsistency, positive part meets generator '" +
                        g.label + "' negatively");

  return z;
}

Rational nu_of(const SurfaceModel& model, const RVec& d, const std::string& curve_label) {
  if (!model.find_curve(curve_label))
    throw ContractError("nu_of: unknown curve '" + curve_label + "'");
  return zariski_decompose(model, d).coefficient(curve_label);
}

Rational mu_of(const SurfaceModel& model, const RVec& d, const std::string& curve_label) {
  const CurveRecord* c = model.find_curve(curve_label);
  if (!c) throw ContractError("mu_of: unknown curve '" + curve_label + "'");
  if (!is_pseudo_effective(model, d))
    throw DomainError("mu_of: divisor is not pseudo-effective");
  ConeMax m = cone_max_param(model.generator_classes(), d, to_rational(c->cls));
  if (!m.bounded)
    throw DomainError("mu_of: D - tC stays pseudo-effective for all t (unbounded direction '" +
                      curve_label + "')");
  return m.value;
}

}  // namespace nok
