#include "nok/ellsurf.hpp"

#include <set>

#include "nok/error.hpp"
#include "nok/linalg.hpp"

namespace nok {

namespace {

void validate_spec(const EllipticSurfaceSpec& spec) {
  if (spec.chi < 0) throw ContractError("elliptic spec: chi must be nonnegative");
  if (spec.base_genus != 0)
    throw DomainError("elliptic spec: only genus-0 base curves are supported");
  for (const FibreSpec& f : spec.fibres) {
    if (f.kind == FibreSpec::Kind::I && f.m < 1)
      throw ContractError("elliptic spec: I_m fibre needs m >= 1");
  }
  std::set<std::string> labels;
  for (const SectionData& s : spec.sections) {
    if (s.label.empty() || s.label == "O" || s.label == "F")
      throw ContractError("elliptic spec: section label '" + s.label + "' is reserved or empty");
    if (!labels.insert(s.label).second)
      throw ContractError("elliptic spec: duplicate section label '" + s.label + "'");
    if (s.torsion) throw DomainError("elliptic spec: torsion sections are not supported");
    if (s.pairing_with_zero < 0)
      throw ContractError("elliptic spec: (P)·(O) must be nonnegative");
    for (const auto& [other, v] : s.pairing_with)
      if (v < 0) throw ContractError("elliptic spec: section pairings must be nonnegative");
  }
  // symmetry of the declared pairwise intersections
  for (const SectionData& s : spec.sections)
    for (const auto& [other, v] : s.pairing_with)
      for (const SectionData& t : spec.sections)
        if (t.label == other) {
          auto back = t.pairing_with.find(s.label);
          if (back != t.pairing_with.end() && back->second != v)
            throw ContractError("elliptic spec: asymmetric pairing between '" + s.label +
                                "' and '" + other + "'");
        }
}

int section_pairing(const SectionData& p, const SectionData& q) {
  auto it = p.pairing_with.find(q.label);
  if (it != p.pairing_with.end()) return it->second;
  it = q.pairing_with.find(p.label);
  if (it != q.pairing_with.end()) return it->second;
  throw ContractError("elliptic spec: pairing (" + p.label + ")·(" + q.label + ") not declared");
}

bool has_reducible_fibre(const EllipticSurfaceSpec& spec) {
  for (const FibreSpec& f : spec.fibres)
    if (f.reducible()) return true;
  return false;
}

}  // namespace

int trivial_lattice_rank(const EllipticSurfaceSpec& spec) {
  int rank = 2;
  for (const FibreSpec& f : spec.fibres)
    if (f.reducible()) rank += f.components() - 1;
  return rank;
}

int shioda_tate_rank(int rho, const EllipticSurfaceSpec& spec) {
  const int trivial = trivial_lattice_rank(spec);
  if (rho < trivial)
    throw DomainError("shioda_tate_rank: rho = " + std::to_string(rho) +
                      " is smaller than rk(Triv) = " + std::to_string(trivial));
  return rho - trivial;
}

Rational height_pairing(const SectionData& p, const SectionData& q,
                        const EllipticSurfaceSpec& spec) {
  validate_spec(spec);
  if (has_reducible_fibre(spec))
    throw DomainError(
        "height_pairing: reducible fibres present; nonzero local contributions are unsupported");
  if (p.torsion || q.torsion) throw DomainError("height_pairing: torsion sections are rejected");
  if (p.label == q.label) return Rational(2 * spec.chi + 2 * p.pairing_with_zero);
  const int pq = section_pairing(p, q);
  return Rational(spec.chi + p.pairing_with_zero + q.pairing_with_zero - pq);
}

const IVec& NSModel::cls(const std::string& label) const {
  for (const auto& [name, v] : distinguished)
    if (name == label) return v;
  throw ContractError("NSModel: no distinguished class '" + label + "'");
}

bool NSModel::has(const std::string& label) const {
  for (const auto& [name, v] : distinguished)
    if (name == label) return true;
  return false;
}

NSModel build_ns(const EllipticSurfaceSpec& spec) {
  validate_spec(spec);
  const bool reducible = has_reducible_fibre(spec);
  const int r = static_cast<int>(spec.sections.size());
  if (reducible && r > 0)
    throw DomainError("build_ns: reducible fibres together with Mordell-Weil rank > 0 are "
                      "outside the supported scenarios");
  for (const FibreSpec& f : spec.fibres)
    if (f.kind == FibreSpec::Kind::I && f.m > 2)
      throw DomainError("build_ns: fibre " + f.tag() + " is not supported (only I1, I2, III)");

  const int rho = trivial_lattice_rank(spec) + r;
  if (spec.declared_rho && *spec.declared_rho != rho)
    throw DomainError("build_ns: declared rho = " + std::to_string(*spec.declared_rho) +
                      " but fibre/section data forces rho = " + std::to_string(rho));

  const bool even_chi = spec.chi % 2 == 0;
  const int chi = spec.chi;

  std::vector<FibreSpec> reducibles;
  for (const FibreSpec& f : spec.fibres)
    if (f.reducible()) reducibles.push_back(f);
  const int blocks = static_cast<int>(reducibles.size());

  IMat gram = IMat::Zero(rho, rho);
  std::vector<std::string> labels(static_cast<size_t>(rho));
  if (even_chi) {
    gram(0, 1) = gram(1, 0) = Int(1);
    labels[0] = "e";
    labels[1] = "f";
  } else {
    gram(0, 0) = Int(-chi);
    gram(0, 1) = gram(1, 0) = Int(1);
    labels[0] = "O";
    labels[1] = "F";
  }
  for (int b = 0; b < blocks; ++b) {
    gram(2 + b, 2 + b) = Int(-2);
    labels[static_cast<size_t>(2 + b)] = "Theta" + std::to_string(b + 1) + "_1";
  }
  // MWL block, negated height pairing
  if (r > 0) {
    for (int i = 0; i < r; ++i)
      labels[static_cast<size_t>(2 + i)] = "D_" + spec.sections[static_cast<size_t>(i)].label;
    IMat mwl(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        const Rational h = height_pairing(spec.sections[static_cast<size_t>(i)],
                                          spec.sections[static_cast<size_t>(j)], spec);
        mwl(i, j) = h.as_integer();
      }
    if (!is_positive_definite(to_rational(mwl)))
      throw DomainError("build_ns: height-pairing Gram is not positive definite; sections are "
                        "not independent");
    gram.block(2, 2, r, r) = -mwl;
  }

  std::string name = even_chi ? "U" : "<O,F>";
  for (int b = 0; b < blocks; ++b) name += "+A1";
  if (r > 0) name += "+MWL-";

  NSModel ns;
  ns.lattice = make_lattice(name, gram, labels);

  auto unit = [&](int i) {
    IVec v = IVec::Zero(rho);
    v(i) = Int(1);
    return v;
  };
  IVec f_cls = unit(1);
  IVec o_cls = unit(0);
  if (even_chi) o_cls -= f_cls * Int(chi / 2);  // (O) = e - (χ/2) f
  ns.distinguished.emplace_back("O", o_cls);
  ns.distinguished.emplace_back("F", f_cls);
  for (int b = 0; b < blocks; ++b) {
    IVec theta1 = unit(2 + b);
    ns.distinguished.emplace_back("Theta" + std::to_string(b + 1) + "_1", theta1);
    ns.distinguished.emplace_back("Theta" + std::to_string(b + 1) + "_0", IVec(f_cls - theta1));
  }
  for (int i = 0; i < r; ++i)
    ns.distinguished.emplace_back("D_" + spec.sections[static_cast<size_t>(i)].label, unit(2 + i));
  for (int i = 0; i < r; ++i) {
    const SectionData& p = spec.sections[static_cast<size_t>(i)];
    ns.distinguished.emplace_back(p.label, section_class(p, spec, ns));
  }

  // construction self-checks
  const Lattice& l = ns.lattice;
  if (l.norm(o_cls) != -chi) throw Error("build_ns: (O)^2 != -chi");
  if (l.pair(o_cls, f_cls) != 1) throw Error("build_ns: (O)·F != 1");
  if (l.norm(f_cls) != 0) throw Error("build_ns: F^2 != 0");
  for (int b = 0; b < blocks; ++b) {
    IVec sum = ns.cls("Theta" + std::to_string(b + 1) + "_0");
    sum += ns.cls("Theta" + std::to_string(b + 1) + "_1");
    if (!exact_eq(sum, f_cls)) throw Error("build_ns: fibre components do not sum to F");
  }
  const Signature sig = lattice_signature(l);
  if (sig.n_plus != 1 || sig.n_minus != rho - 1 || sig.n_zero != 0)
    throw Error("build_ns: NS signature is not (1, rho-1)");
  if (even_chi && !is_even(l)) throw Error("build_ns: NS lattice should be even");

  return ns;
}

IVec section_class(const SectionData& p, const EllipticSurfaceSpec& spec, const NSModel& ns) {
  if (has_reducible_fibre(spec))
    throw DomainError("section_class: reducible fibres present; correction terms unsupported");
  IVec cls = ns.cls("D_" + p.label);
  cls += ns.cls("O");
  cls += ns.cls("F") * Int(p.pairing_with_zero + spec.chi);
  return cls;
}

}  // namespace nok
