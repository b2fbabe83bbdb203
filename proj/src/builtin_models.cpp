#include "nok/builtin_models.hpp"

#include "nok/surface_io.hpp"

namespace nok {

namespace {

IVec iv(std::initializer_list<long long> entries) {
  IVec v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long long e : entries) v(i++) = Int(e);
  return v;
}

IMat im(std::initializer_list<std::initializer_list<long long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  IMat m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long long e : row) m(i, j++) = Int(e);
    ++i;
  }
  return m;
}

CurveRecord curve(std::string label, IVec cls, long long self_int) {
  return CurveRecord{std::move(label), std::move(cls), Int(self_int), true};
}

}  // namespace

SurfaceModel model_p2() {
  SurfaceModel m;
  m.name = "p2";
  m.rho = 1;
  m.ns_gram = im({{1}});
  m.basis_labels = {"L"};
  m.curves = {curve("L", iv({1}), 1)};
  m.generators = {{"L", iv({1})}};
  require_valid_model(m);
  return m;
}

SurfaceModel model_p1xp1() {
  SurfaceModel m;
  m.name = "p1xp1";
  m.rho = 2;
  m.ns_gram = im({{0, 1}, {1, 0}});
  m.basis_labels = {"H1", "H2"};
  m.curves = {curve("H1", iv({1, 0}), 0), curve("H2", iv({0, 1}), 0)};
  m.generators = {{"H1", iv({1, 0})}, {"H2", iv({0, 1})}};
  require_valid_model(m);
  return m;
}

SurfaceModel model_p1xe() {
  // trivial elliptic surface P^1 x E: effective cone spanned by the elliptic
  // fibre and the zero section, both of square zero
  SurfaceModel m;
  m.name = "p1xe";
  m.rho = 2;
  m.ns_gram = im({{0, 1}, {1, 0}});
  m.basis_labels = {"Efib", "O"};
  m.curves = {curve("Efib", iv({1, 0}), 0), curve("O", iv({0, 1}), 0)};
  m.generators = {{"Efib", iv({1, 0})}, {"O", iv({0, 1})}};
  require_valid_model(m);
  return m;
}

SurfaceModel model_exe() {
  // E x E without CM: rho = 3, basis fibres of the two projections and the
  // diagonal; the nef and effective cones coincide, no negative curves
  SurfaceModel m;
  m.name = "exe";
  m.rho = 3;
  m.ns_gram = im({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  m.basis_labels = {"F1", "F2", "Dg"};
  m.curves = {curve("F1", iv({1, 0, 0}), 0), curve("F2", iv({0, 1, 0}), 0),
              curve("Dg", iv({0, 0, 1}), 0)};
  m.generators = {{"F1", iv({1, 0, 0})}, {"F2", iv({0, 1, 0})}, {"Dg", iv({0, 0, 1})}};
  require_valid_model(m);
  return m;
}

SurfaceModel model_f1() {
  // blow-up of P^2 at a point, basis (L, E): L the line pullback, E the
  // exceptional curve. Curves beyond E: a fibre C in |L-E|, a nodal cubic
  // N in |3L-2E| (node at the blown-up point), a smooth cubic A in |3L-E|.
  SurfaceModel m;
  m.name = "f1";
  m.rho = 2;
  m.ns_gram = im({{1, 0}, {0, -1}});
  m.basis_labels = {"L", "E"};
  m.curves = {curve("E", iv({0, 1}), -1), curve("C", iv({1, -1}), 0),
              curve("N", iv({3, -2}), 5), curve("A", iv({3, -1}), 8)};
  m.generators = {{"E", iv({0, 1})}, {"C", iv({1, -1})}};
  require_valid_model(m);
  return m;
}

EllipticSurfaceSpec spec_k3_s1() {
  EllipticSurfaceSpec spec;
  spec.chi = 2;
  spec.fibres = {FibreSpec{FibreSpec::Kind::I, 2}};
  spec.declared_rho = 3;
  return spec;
}

EllipticSurfaceSpec spec_k3_s2() {
  EllipticSurfaceSpec spec;
  spec.chi = 2;
  SectionData p;
  p.label = "P";
  p.pairing_with_zero = 0;
  p.pairing_with["Q"] = 0;
  SectionData q;
  q.label = "Q";
  q.pairing_with_zero = 0;
  q.pairing_with["P"] = 0;
  spec.sections = {p, q};
  spec.declared_rho = 4;
  return spec;
}

SurfaceModel model_k3_s1() { return model_from_elliptic("k3_s1", spec_k3_s1()); }

SurfaceModel model_k3_s2() { return model_from_elliptic("k3_s2", spec_k3_s2()); }

SurfaceModel builtin_model(const std::string& name) {
  if (name == "p2") return model_p2();
  if (name == "p1xp1") return model_p1xp1();
  if (name == "p1xe") return model_p1xe();
  if (name == "exe") return model_exe();
  if (name == "f1") return model_f1();
  if (name == "k3_s1") return model_k3_s1();
  if (name == "k3_s2") return model_k3_s2();
  throw ContractError("unknown builtin model '" + name + "'");
}

std::vector<std::string> builtin_model_names() {
  return {"p2", "p1xp1", "p1xe", "exe", "f1", "k3_s1", "k3_s2"};
}

}  // namespace nok
