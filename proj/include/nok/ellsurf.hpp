#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nok/lattice.hpp"
#include "nok/rational.hpp"

namespace nok {

/// Singular fibre, reduced to what the lattice constructions need: its
/// Kodaira tag and component count. I_m has m components, III has two.
/// The I₂/III distinction survives as metadata only; both contribute the
/// same A₁ block and the same divisor pairing Θ₀·Θ₁ = 2.
struct FibreSpec {
  enum class Kind { I, III };
  Kind kind = Kind::I;
  int m = 1;  // component count for I_m; forced to 2 for III

  int components() const { return kind == Kind::III ? 2 : m; }
  bool reducible() const { return components() > 1; }
  std::string tag() const {
    return kind == Kind::III ? "III" : "I" + std::to_string(m);
  }
};

struct SectionData {
  std::string label;
  int pairing_with_zero = 0;                // (P)·(O)
  std::map<std::string, int> pairing_with;  // other section label → (P)·(Q)
  bool torsion = false;                     // rejected by every construction
};

struct EllipticSurfaceSpec {
  int chi = 2;
  int base_genus = 0;
  std::vector<FibreSpec> fibres;
  std::vector<SectionData> sections;
  std::optional<int> declared_rho;
};

/// 2 + Σ (m_ν - 1) over the reducible fibres.
int trivial_lattice_rank(const EllipticSurfaceSpec& spec);

/// Mordell–Weil rank r = ρ - rk(Triv); throws when ρ is too small.
int shioda_tate_rank(int rho, const EllipticSurfaceSpec& spec);

/// Height pairing in the no-reducible-fibre regime (all local contributions
/// vanish): ⟨P,P⟩ = 2χ + 2(P)·(O), ⟨P,Q⟩ = χ + (P)·(O) + (Q)·(O) - (P)·(Q).
Rational height_pairing(const SectionData& p, const SectionData& q,
                        const EllipticSurfaceSpec& spec);

/// Néron–Severi lattice of the surface plus the geometric dictionary:
/// classes of (O), F, fibre components and sections in the lattice basis.
struct NSModel {
  Lattice lattice;
  std::vector<std::pair<std::string, IVec>> distinguished;

  const IVec& cls(const std::string& label) const;
  bool has(const std::string& label) const;
};

/// Builds NS(S) = Triv ⊕ MWL⁻ for the two supported scenarios:
///  (a) no sections (r = 0): U-block plus one A₁ per two-component fibre;
///  (b) no reducible fibres: U-block plus the negated height-pairing Gram.
/// Mixed data or torsion sections are rejected.
NSModel build_ns(const EllipticSurfaceSpec& spec);

/// (P) = D_P + (O) + ((P)·(O) + χ) F in the NSModel basis.
IVec section_class(const SectionData& p, const EllipticSurfaceSpec& spec, const NSModel& ns);

}  // namespace nok
