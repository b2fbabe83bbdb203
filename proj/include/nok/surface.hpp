#pragma once

#include <string>
#include <vector>

#include "nok/cone.hpp"
#include "nok/linalg.hpp"
#include "nok/matrix.hpp"

namespace nok {

/// An irreducible curve class on the surface. `negative()` curves are the
/// candidates for Zariski supports and mv configurations; non-negative ones
/// are still useful as flag curves.
struct CurveRecord {
  std::string label;
  IVec cls;
  Int self_intersection;
  bool irreducible = true;

  bool negative() const { return self_intersection < 0; }
};

struct GeneratorRecord {
  std::string label;
  IVec cls;
};

/// A surface with a chosen NS basis, its intersection form, the declared
/// irreducible curves, and generators of (the explored chamber of) the
/// effective cone. All downstream computations are relative to this data:
/// the model asserts that its negative-curve list is complete for the cone
/// region being explored.
struct SurfaceModel {
  std::string name;
  int rho = 0;
  IMat ns_gram;
  std::vector<std::string> basis_labels;
  std::vector<CurveRecord> curves;
  std::vector<GeneratorRecord> generators;

  Rational pair(const RVec& x, const RVec& y) const;
  Int pair(const IVec& x, const IVec& y) const;

  const CurveRecord* find_curve(const std::string& label) const;
  int curve_index(const std::string& label) const;  // -1 when absent

  std::vector<RVec> generator_classes() const;
  std::vector<int> negative_curve_indices() const;
};

/// Divisor class in the model's NS basis.
struct DivisorClass {
  RVec coords;
  std::string label;
};

/// Every structural problem found, one message each; empty means valid.
std::vector<std::string> validate_model(const SurfaceModel& model);

/// validate_model, throwing a single DomainError that lists all problems.
void require_valid_model(const SurfaceModel& model);

}  // namespace nok
