#pragma once

#include <string>
#include <vector>

#include "nok/lattice.hpp"
#include "nok/surface.hpp"

namespace nok {

/// A negative-definite configuration: a subset of the declared curve list
/// (ascending indices) together with its restricted intersection Gram.
struct NegConfig {
  std::vector<int> indices;
  IMat gram;

  int k() const { return static_cast<int>(indices.size()); }
};

/// Largest connected component of the dual graph (edge ⟺ Cᵢ·Cⱼ > 0);
/// 0 for the empty configuration.
int mc_of(const NegConfig& config);

/// k + mc + 4 when k < ρ-1, k + mc + 3 when k = ρ-1.
int mv_of_config(const NegConfig& config, int rho);

struct MvReport {
  int mv_value = 0;
  NegConfig witness;
  std::vector<std::string> witness_labels;
  bool certified = false;
  int upper_bound_used = 0;
  std::string note;
};

/// Exhaustive maximum of mv over all negative-definite subsets of the curve
/// list (hereditary pruning; the empty configuration counts). The result is
/// a lower bound for the surface's true invariant unless `certified`: then
/// it met a proven upper bound (2ρ+1, or ρ+3 from the A₂ obstruction when
/// every listed curve is a (-2)-curve).
MvReport mv_surface(int rho, const std::vector<CurveRecord>& curves, const IMat& ns_gram);

struct A2Bound {
  int bound = 0;
  bool obstruction_used = false;
  std::string note;
};

/// ρ+3 when A₂ provably does not embed into NS (so no two negative curves
/// meet exactly once and every configuration is disjoint); otherwise 2ρ+1.
A2Bound mv_upper_bound_via_a2(const Lattice& ns, bool all_negatives_are_minus2);

/// What the low-mv classification pins down about ρ from mv alone.
struct PicardConstraint {
  enum class Kind { ExactRho, NoNegativesRhoAtLeastTwo, NoConstraint };
  Kind kind = Kind::NoConstraint;
  int rho = 0;  // for ExactRho

  std::string describe() const;
};

PicardConstraint classify_picard(int mv, bool has_negative_curve);

}  // namespace nok
